#include "haefliger/calculus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "haefliger/error.hpp"

namespace haefliger {

namespace {

int parity_sign(LiftId a, LiftId b) { return (a.level + b.level) % 2 == 0 ? 1 : -1; }

}  // namespace

std::int64_t signed_linking_sum(const CrossingDiagram& d) {
  std::int64_t total = 0;
  for (const auto& [key, value] : d.lk_entries()) total += parity_sign(key.first, key.second) * value;
  return total;
}

Rational delta_h_full(const CrossingDiagram& d, const CrossingSet& s) {
  CrossingDiagram switched = crossing_change(d, s);
  return Rational(signed_linking_sum(d) - signed_linking_sum(switched), 4);
}

Rational delta_h_reduced(const CrossingDiagram& d, const CrossingSet& s) {
  check_crossing_set(d, s);
  std::int64_t total = 0;
  for (const auto& [key, value] : d.lk_entries()) {
    bool first_in = s.count(key.first.crossing) > 0;
    bool second_in = s.count(key.second.crossing) > 0;
    if (first_in != second_in) total += parity_sign(key.first, key.second) * value;
  }
  return Rational(total, 2);
}

Rational i_x_dirac(const CrossingDiagram& d) {
  std::int64_t writhes = 0;
  for (const auto& [lift, value] : d.writhe_entries()) writhes += value;
  return Rational(signed_linking_sum(d), 2) + Rational(writhes, 4);
}

AlternatingSum v_alternating(const Rational& h0, const CrossingDiagram& d, const std::vector<int>& crossings) {
  std::set<int> distinct;
  for (int i : crossings) {
    if (i < 1 || i > d.m())
      throw Error(ErrorKind::IndexOutOfRange, "crossing " + std::to_string(i) + " outside 1.." + std::to_string(d.m()));
    if (!distinct.insert(i).second) throw Error(ErrorKind::DuplicateIndex, "crossing " + std::to_string(i) + " repeated");
  }
  if (crossings.size() > 24) throw Error(ErrorKind::InvalidParams, "too many crossings for subset enumeration");

  std::vector<int> sorted(distinct.begin(), distinct.end());
  const std::size_t n = sorted.size();

  AlternatingSum out;
  out.value = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    SubsetTerm term;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::uint64_t{1} << b)) term.subset.push_back(sorted[b]);
    CrossingSet s(term.subset.begin(), term.subset.end());
    term.value = h0 - delta_h_full(d, s);
    out.value += term.subset.size() % 2 == 0 ? term.value : -term.value;
    out.terms.push_back(std::move(term));
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const SubsetTerm& a, const SubsetTerm& b) { return a.subset < b.subset; });
  return out;
}

Rational e_invariant(const Rational& h_of_f, const CrossingDiagram& d) {
  return h_of_f - Rational(signed_linking_sum(d), 4);
}

Rational e_jump(const HomotopyEvent& ev, int k) {
  if (k < 1) throw Error(ErrorKind::InconsistentEvent, "k must be positive");
  if (ev.sign != 1 && ev.sign != -1) throw Error(ErrorKind::InconsistentEvent, "event sign must be +1 or -1");
  switch (ev.kind) {
    case EventKind::DefiniteTangency:
      return 0;
    case EventKind::IndefiniteTangency: {
      if (ev.index < 1 || ev.index > 2 * k - 1)
        throw Error(ErrorKind::InconsistentEvent,
                    "index " + std::to_string(ev.index) + " outside 1.." + std::to_string(2 * k - 1));
      bool extreme = ev.index == 1 || ev.index == 2 * k - 1;
      if (!extreme || !ev.joins_components) return 0;
      return Rational(static_cast<std::int64_t>(ev.sign) * (ev.lk00 + ev.lk11), 4);
    }
    case EventKind::TriplePoint:
      if (ev.pattern == TriplePattern::IEqJ || ev.pattern == TriplePattern::JEqP) return 0;
      return Rational(ev.sign, 4);
  }
  throw Error(ErrorKind::InconsistentEvent, "unknown event kind");
}

Rational smale_from_h(const Rational& h) { return Rational(-12) * h; }

MuraiOhbaCertificate murai_ohba_certificate(const PolyCurve& l0, const PolyCurve& l1, const ProjectionAxis& axis) {
  const int lk = linking_number_pl(l0, l1, axis);
  RawDiagram raw;
  raw.k = 1;
  raw.m = 2;
  raw.lk = {{{1, 0}, {2, 0}, lk}, {{1, 1}, {2, 1}, lk}};
  MuraiOhbaCertificate cert;
  cert.diagram = validate_diagram(raw);
  cert.switched = {1};
  cert.delta_h = delta_h_reduced(cert.diagram, cert.switched);
  cert.link_lk = lk;
  if (cert.delta_h != Rational(lk)) throw std::logic_error("single-crossing certificate does not reproduce lk");
  return cert;
}

}  // namespace haefliger
