#include "haefliger/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "haefliger/error.hpp"

namespace haefliger {

namespace {

struct Passage {
  int label;
  bool over;
  int sign;
};

bool interleaved(const Arrow& a, const Arrow& b) {
  auto [a0, a1] = std::minmax(a.over_position, a.under_position);
  bool b0_inside = a0 < b.over_position && b.over_position < a1;
  bool b1_inside = a0 < b.under_position && b.under_position < a1;
  return b0_inside != b1_inside;
}

}  // namespace

GaussDiagramK::GaussDiagramK(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.label < b.label; });
  const int positions = 2 * static_cast<int>(arrows_.size());
  std::vector<bool> used(positions, false);
  auto claim = [&](int p) {
    if (p < 0 || p >= positions || used[p])
      throw Error(ErrorKind::LabelMismatch, "passage position " + std::to_string(p) + " invalid or reused");
    used[p] = true;
  };
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (i > 0 && arrows_[i - 1].label == a.label)
      throw Error(ErrorKind::LabelMismatch, "label " + std::to_string(a.label) + " repeated");
    if (a.sign != 1 && a.sign != -1) throw Error(ErrorKind::LabelMismatch, "crossing sign must be +-1");
    claim(a.over_position);
    claim(a.under_position);
  }
}

const Arrow& GaussDiagramK::arrow(int label) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), label,
                             [](const Arrow& a, int l) { return a.label < l; });
  if (it == arrows_.end() || it->label != label)
    throw Error(ErrorKind::LabelMismatch, "no crossing labelled " + std::to_string(label));
  return *it;
}

GaussDiagramK parse_gauss_code(std::string_view code) {
  std::vector<Passage> passages;
  std::size_t i = 0;
  auto skip_separators = [&] {
    while (i < code.size() && (std::isspace(static_cast<unsigned char>(code[i])) || code[i] == ',')) ++i;
  };
  skip_separators();
  while (i < code.size()) {
    const std::size_t start = i;
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(code[i])));
    if (kind != 'O' && kind != 'U')
      throw Error(ErrorKind::MalformedToken, "expected O or U at offset " + std::to_string(start));
    ++i;
    std::size_t digits = i;
    while (i < code.size() && std::isdigit(static_cast<unsigned char>(code[i]))) ++i;
    if (digits == i || i - digits > 9)
      throw Error(ErrorKind::MalformedToken, "missing crossing label at offset " + std::to_string(start));
    const int label = std::stoi(std::string(code.substr(digits, i - digits)));
    if (i >= code.size() || (code[i] != '+' && code[i] != '-'))
      throw Error(ErrorKind::MalformedToken, "missing crossing sign at offset " + std::to_string(start));
    const int sign = code[i] == '+' ? 1 : -1;
    ++i;
    passages.push_back({label, kind == 'O', sign});
    skip_separators();
  }

  struct Partial {
    int over = -1, under = -1, sign = 0;
  };
  std::map<int, Partial> seen;
  for (int p = 0; p < static_cast<int>(passages.size()); ++p) {
    const Passage& pass = passages[p];
    Partial& entry = seen[pass.label];
    int& slot = pass.over ? entry.over : entry.under;
    if (slot != -1)
      throw Error(ErrorKind::LabelMismatch,
                  "crossing " + std::to_string(pass.label) + " has two " + (pass.over ? "over" : "under") + "-passages");
    slot = p;
    if (entry.sign != 0 && entry.sign != pass.sign)
      throw Error(ErrorKind::LabelMismatch, "crossing " + std::to_string(pass.label) + " has inconsistent signs");
    entry.sign = pass.sign;
  }
  std::vector<Arrow> arrows;
  for (const auto& [label, entry] : seen) {
    if (entry.over == -1 || entry.under == -1)
      throw Error(ErrorKind::LabelMismatch, "crossing " + std::to_string(label) + " lacks an over- or under-passage");
    arrows.push_back({label, entry.over, entry.under, entry.sign});
  }
  return GaussDiagramK(std::move(arrows));
}

std::string to_gauss_code(const GaussDiagramK& g) {
  std::vector<std::string> tokens(2 * g.crossing_count());
  for (const auto& a : g.arrows()) {
    const std::string tail = std::to_string(a.label) + (a.sign > 0 ? "+" : "-");
    tokens[a.over_position] = "O" + tail;
    tokens[a.under_position] = "U" + tail;
  }
  std::string out;
  for (const auto& t : tokens) out += t;
  return out;
}

GaussDiagramK switch_crossings(const GaussDiagramK& g, const std::set<int>& labels) {
  for (int l : labels) g.arrow(l);
  std::vector<Arrow> arrows = g.arrows();
  for (auto& a : arrows) {
    if (!labels.count(a.label)) continue;
    std::swap(a.over_position, a.under_position);
    a.sign = -a.sign;
  }
  return GaussDiagramK(std::move(arrows));
}

GaussDiagramK rotate_basepoint(const GaussDiagramK& g, int steps) {
  const int n = 2 * g.crossing_count();
  if (n == 0) return g;
  const int shift = ((steps % n) + n) % n;
  std::vector<Arrow> arrows = g.arrows();
  for (auto& a : arrows) {
    a.over_position = (a.over_position - shift + n) % n;
    a.under_position = (a.under_position - shift + n) % n;
  }
  return GaussDiagramK(std::move(arrows));
}

GaussDiagramK mirror(const GaussDiagramK& g) {
  std::set<int> all;
  for (const auto& a : g.arrows()) all.insert(a.label);
  return switch_crossings(g, all);
}

std::int64_t x_pairing(const GaussDiagramK& g) {
  const auto& arrows = g.arrows();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = i + 1; j < arrows.size(); ++j)
      if (interleaved(arrows[i], arrows[j])) total += arrows[i].sign * arrows[j].sign;
  return total;
}

std::set<int> descending_set(const GaussDiagramK& g) {
  std::set<int> out;
  for (const auto& a : g.arrows())
    if (a.under_position < a.over_position) out.insert(a.label);
  return out;
}

bool is_descending(const GaussDiagramK& g) { return descending_set(g).empty(); }

std::int64_t v2(const GaussDiagramK& g) {
  const std::int64_t diff = x_pairing(g) - x_pairing(switch_crossings(g, descending_set(g)));
  if (diff % 4 != 0)
    throw Error(ErrorKind::NonIntegerResult, "pairing difference " + std::to_string(diff) + " is not divisible by 4");
  return diff / 4;
}

}  // namespace haefliger
