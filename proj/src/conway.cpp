#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "haefliger/error.hpp"
#include "haefliger/gauss_code.hpp"

namespace haefliger {

namespace {

enum Slot { OverIn = 0, OverOut = 1, UnderIn = 2, UnderOut = 3 };

/// Oriented crossing of a link diagram. Each edge id occurs once as an
/// outgoing slot and once as an incoming slot over the whole diagram.
struct PdCrossing {
  std::array<int, 4> edge{};
  int sign = 1;
};

struct LinkDiagram {
  std::vector<PdCrossing> crossings;
  int free_loops = 0;
};

using Poly = std::vector<std::int64_t>;

LinkDiagram from_gauss(const GaussDiagramK& g) {
  LinkDiagram d;
  const int n = 2 * g.crossing_count();
  if (n == 0) {
    d.free_loops = 1;
    return d;
  }
  for (const auto& a : g.arrows()) {
    PdCrossing c;
    c.edge[OverIn] = (a.over_position + n - 1) % n;
    c.edge[OverOut] = a.over_position;
    c.edge[UnderIn] = (a.under_position + n - 1) % n;
    c.edge[UnderOut] = a.under_position;
    c.sign = a.sign;
    d.crossings.push_back(c);
  }
  return d;
}

// Counter-clockwise order of the four slots around a crossing.
constexpr std::array<Slot, 4> kPositiveRotation{OverOut, UnderOut, OverIn, UnderIn};
constexpr std::array<Slot, 4> kNegativeRotation{OverOut, UnderIn, OverIn, UnderOut};

int count_faces(const LinkDiagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  // Where each edge starts and ends, as half-edge ids 4*c + slot.
  std::map<int, int> start, end;
  for (int c = 0; c < n; ++c) {
    start[d.crossings[c].edge[OverOut]] = 4 * c + OverOut;
    start[d.crossings[c].edge[UnderOut]] = 4 * c + UnderOut;
    end[d.crossings[c].edge[OverIn]] = 4 * c + OverIn;
    end[d.crossings[c].edge[UnderIn]] = 4 * c + UnderIn;
  }
  auto opposite = [&](int h) {
    const int slot = h % 4;
    const int e = d.crossings[h / 4].edge[slot];
    return (slot == OverOut || slot == UnderOut) ? end.at(e) : start.at(e);
  };
  auto rotate = [&](int h) {
    const int c = h / 4;
    const auto& rot = d.crossings[c].sign > 0 ? kPositiveRotation : kNegativeRotation;
    const auto it = std::find(rot.begin(), rot.end(), static_cast<Slot>(h % 4));
    return 4 * c + rot[(it - rot.begin() + 1) % 4];
  };
  std::vector<bool> seen(4 * n, false);
  int faces = 0;
  for (int h = 0; h < 4 * n; ++h) {
    if (seen[h]) continue;
    ++faces;
    for (int x = h; !seen[x]; x = rotate(opposite(x))) seen[x] = true;
  }
  return faces;
}

struct Traversal {
  int components = 0;
  int first_bad = -1;  // index of the first crossing first met from below
};

Traversal traverse(const LinkDiagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  // Edge -> (crossing, strand is over) at its end.
  std::map<int, std::pair<int, bool>> arrive;
  for (int c = 0; c < n; ++c) {
    arrive[d.crossings[c].edge[OverIn]] = {c, true};
    arrive[d.crossings[c].edge[UnderIn]] = {c, false};
  }
  std::map<int, bool> visited;
  for (const auto& [e, _] : arrive) visited[e] = false;
  std::vector<int> first_seen_over(n, -1);

  Traversal t;
  t.components = d.free_loops;
  for (auto& [start, done] : visited) {
    if (done) continue;
    ++t.components;
    int e = start;
    while (!visited[e]) {
      visited[e] = true;
      const auto [c, over] = arrive.at(e);
      if (first_seen_over[c] == -1) {
        first_seen_over[c] = over ? 1 : 0;
        if (!over && t.first_bad == -1) t.first_bad = c;
      }
      e = d.crossings[c].edge[over ? OverOut : UnderOut];
    }
  }
  return t;
}

LinkDiagram switched(const LinkDiagram& d, int c) {
  LinkDiagram out = d;
  auto& x = out.crossings[c];
  std::swap(x.edge[OverIn], x.edge[UnderIn]);
  std::swap(x.edge[OverOut], x.edge[UnderOut]);
  x.sign = -x.sign;
  return out;
}

/// Oriented smoothing: the incoming over-strand continues along the outgoing
/// under-strand and vice versa.
LinkDiagram smoothed(const LinkDiagram& d, int c) {
  LinkDiagram out = d;
  const PdCrossing x = d.crossings[c];
  out.crossings.erase(out.crossings.begin() + c);

  std::array<std::pair<int, int>, 2> joins{{{x.edge[OverIn], x.edge[UnderOut]}, {x.edge[UnderIn], x.edge[OverOut]}}};
  auto rename = [&](int from, int to) {
    for (auto& y : out.crossings)
      for (auto& e : y.edge)
        if (e == from) e = to;
    for (auto& [a, b] : joins) {
      if (a == from) a = to;
      if (b == from) b = to;
    }
  };
  for (std::size_t j = 0; j < joins.size(); ++j) {
    const auto [keep, merged] = joins[j];
    if (keep == merged)
      ++out.free_loops;
    else
      rename(merged, keep);
  }
  return out;
}

std::string key_of(const LinkDiagram& d) {
  std::string key = std::to_string(d.free_loops) + ":";
  for (const auto& c : d.crossings) {
    for (int e : c.edge) key += std::to_string(e) + ",";
    key += c.sign > 0 ? "+;" : "-;";
  }
  return key;
}

void add_into(Poly& acc, const Poly& p, int shift, int factor) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += factor * p[i];
}

Poly conway(const LinkDiagram& d, std::map<std::string, Poly>& memo) {
  const std::string key = key_of(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const Traversal t = traverse(d);
  Poly result;
  if (t.first_bad == -1) {
    // Descending diagrams with stacked components are trivial links.
    result = {t.components == 1 ? 1 : 0};
  } else {
    const int c = t.first_bad;
    const int sign = d.crossings[c].sign;
    // nabla(L+) - nabla(L-) = z nabla(L0)
    result = conway(switched(d, c), memo);
    add_into(result, conway(smoothed(d, c), memo), 1, sign);
  }
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  memo.emplace(key, result);
  return result;
}

}  // namespace

bool is_planar(const GaussDiagramK& g) {
  const int n = g.crossing_count();
  if (n == 0) return true;
  // Euler characteristic of the diagram's cell structure: V - E + F = 2.
  return n - 2 * n + count_faces(from_gauss(g)) == 2;
}

std::vector<std::int64_t> conway_polynomial(const GaussDiagramK& g) {
  if (!is_planar(g)) throw Error(ErrorKind::NonRealizable, "Gauss code admits no planar realization");
  std::map<std::string, Poly> memo;
  return conway(from_gauss(g), memo);
}

std::int64_t conway_a2_oracle(const GaussDiagramK& g) {
  const auto p = conway_polynomial(g);
  return p.size() > 2 ? p[2] : 0;
}

}  // namespace haefliger
