#include <chrono>
#include <algorithm>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>

#include "haefliger/calculus.hpp"
#include "haefliger/error.hpp"
#include "haefliger/gauss_code.hpp"
#include "haefliger/generator.hpp"
#include "test_support.hpp"

using namespace haefliger;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Outcome generator_value() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int k = 1; k <= 3; ++k)
    if (delta_h_reduced(generator_diagram(k), {1}) != Rational(1)) o.pass = false;
  const double ms = ms_since(t0);
  if (ms >= 1.0) o.pass = false;
  o.detail = "k=1..3 gives 1, " + std::to_string(ms) + " ms";
  return o;
}

Outcome generator_end_to_end() {
  Outcome o;
  const auto t0 = Clock::now();
  GeneratorReport r;
  try {
    r = verify_generator(BorromeanParams{}, 64);
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  const double ms = ms_since(t0);
  std::set<std::pair<int, int>> hopf;
  for (const auto& [a, b] : generator_hopf_pairs())
    hopf.insert({2 * (a.crossing - 1) + a.level, 2 * (b.crossing - 1) + b.level});
  int pairs = 0, unit = 0;
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b) {
      ++pairs;
      const int v = r.linking[a][b];
      if (hopf.count({a, b})) {
        unit += std::abs(v) == 1;
        if (std::abs(v) != 1) o.pass = false;
      } else if (v != 0) {
        o.pass = false;
      }
    }
  if (pairs != 66 || unit != 6 || r.h != Rational(1) || ms >= 5000) o.pass = false;
  o.detail = std::to_string(pairs) + " pairs, " + std::to_string(unit) + " Hopf, H = " + to_string(r.h) + ", " +
             std::to_string(ms) + " ms";
  return o;
}

Outcome formula_equivalence() {
  Outcome o;
  std::mt19937_64 rng(testing::test_seed());
  int checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    CrossingDiagram d = validate_diagram(testing::random_raw_diagram(rng, 6, 5));
    std::vector<CrossingSet> sets{testing::random_subset(rng, d.m())};
    for (int i = 1; i <= d.m(); ++i) sets.push_back({i});
    for (const auto& s : sets) {
      ++checks;
      if (delta_h_full(d, s) != delta_h_reduced(d, s)) o.pass = false;
    }
  }
  o.detail = std::to_string(checks) + " exact comparisons";
  return o;
}

Outcome order_two() {
  Outcome o;
  std::mt19937_64 rng(testing::test_seed() + 1);
  std::uniform_int_distribution<int> base(-100, 100);
  for (int trial = 0; trial < 1000; ++trial) {
    RawDiagram raw = testing::random_raw_diagram(rng, 6, 5);
    raw.m = std::max(raw.m, 3);
    CrossingDiagram d = validate_diagram(raw);
    std::vector<int> all;
    for (int i = 1; i <= d.m(); ++i) all.push_back(i);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(3);
    Rational h0(base(rng), 1 + static_cast<int>(rng() % 12));
    if (v_alternating(h0, d, all).value != Rational(0)) o.pass = false;
  }
  const Rational witness = v_alternating(Rational(0), generator_diagram(1), {1, 4}).value;
  if (witness == Rational(0)) o.pass = false;
  o.detail = "1000 triples vanish, generator A={1,4} gives " + to_string(witness);
  return o;
}

Outcome murai_ohba() {
  Outcome o;
  MuraiOhbaCertificate hopf = murai_ohba_certificate(testing::unit_square(), testing::threading_rectangle());
  if (hopf.delta_h != Rational(1) || hopf.link_lk != 1) o.pass = false;
  o.detail = "Hopf " + to_string(hopf.delta_h);
  for (int n = 1; n <= 3; ++n) {
    MuraiOhbaCertificate c = murai_ohba_certificate(testing::torus_link_component(n, 0),
                                                    testing::torus_link_component(n, 1), random_axis(n));
    if (c.delta_h != Rational(n)) o.pass = false;
    o.detail += ", T(2," + std::to_string(2 * n) + ") " + to_string(c.delta_h);
  }
  return o;
}

Outcome linking_engine() {
  Outcome o;
  std::mt19937_64 rng(testing::test_seed() + 2);
  double worst = 0;
  int axes = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto [m, n] = testing::random_link(rng, 8);
    const int lk = linking_number_any_axis(m, n, ProjectionAxis{}, rng());
    worst = std::max(worst, std::abs(gauss_linking_quadrature(m, n, 128) - lk));
    for (int a = 0; a < 5;) {
      try {
        if (linking_number_pl(m, n, random_axis(rng())) != lk) o.pass = false;
        ++a;
        ++axes;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonGenericProjection) {
          o.pass = false;
          ++a;
        }
      }
    }
  }
  if (worst >= 1e-3) o.pass = false;
  std::ostringstream s;
  s << "50 links, max |quadrature - lk| = " << worst << ", " << axes << " generic axes agree";
  o.detail = s.str();
  return o;
}

Outcome jump_table() {
  Outcome o;
  HomotopyEvent ev;
  ev.kind = EventKind::DefiniteTangency;
  if (e_jump(ev, 1) != Rational(0)) o.pass = false;
  ev.kind = EventKind::IndefiniteTangency;
  ev.joins_components = true;
  for (int n : {1, 2, 10, 1000000})
    for (int s : {1, -1}) {
      ev.lk00 = ev.lk11 = n;
      ev.sign = s;
      if (e_jump(ev, 1) != Rational(s * n, 2)) o.pass = false;
    }
  ev.kind = EventKind::TriplePoint;
  for (int s : {1, -1}) {
    ev.sign = s;
    for (auto p : {TriplePattern::AllDistinct, TriplePattern::PEqI, TriplePattern::AllEqual}) {
      ev.pattern = p;
      if (e_jump(ev, 1) != Rational(s, 4)) o.pass = false;
    }
    for (auto p : {TriplePattern::IEqJ, TriplePattern::JEqP}) {
      ev.pattern = p;
      if (e_jump(ev, 1) != Rational(0)) o.pass = false;
    }
  }
  o.detail = "definite, indefinite (n up to 10^6) and all five triple point patterns";
  return o;
}

Outcome classical_v2() {
  Outcome o;
  if (v2(parse_gauss_code("")) != 0 || v2(parse_gauss_code("O1+U1+")) != 0) o.pass = false;
  if (v2(parse_gauss_code("O1+U2+O3+U1+O2+U3+")) != 1) o.pass = false;
  if (v2(parse_gauss_code("U1+O2-U4-O1+U3+O4-U2-O3+")) != -1) o.pass = false;
  int agree = 0;
  double slowest = 0;
  for (const auto& k : testing::knot_corpus()) {
    GaussDiagramK g = testing::braid_closure(k.strands, k.word);
    const auto t0 = Clock::now();
    const auto value = v2(g);
    const double ms = ms_since(t0);
    slowest = std::max(slowest, ms);
    if (value == conway_a2_oracle(g)) ++agree;
    else o.pass = false;
  }
  if (agree < 10 || slowest >= 1000) o.pass = false;
  o.detail = "unknot 0, trefoil 1, figure-eight -1, " + std::to_string(agree) + " knots agree with a2, slowest " +
             std::to_string(slowest) + " ms";
  return o;
}

Outcome jacobian_determinant() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string values;
  for (int k = 1; k <= 4; ++k) {
    const auto det = jacobian_det(k);
    values += (k > 1 ? "," : "") + std::to_string(det);
    if (det != -1) o.pass = false;
  }
  const double ms = ms_since(t0);
  if (ms >= 100) o.pass = false;
  o.detail = "det for k=1..4 = " + values + " (expected -1 each), " + std::to_string(ms) + " ms";
  return o;
}

Outcome e_well_defined() {
  Outcome o;
  std::mt19937_64 rng(testing::test_seed() + 3);
  std::uniform_int_distribution<int> base(-100, 100);
  for (int trial = 0; trial < 1000; ++trial) {
    CrossingDiagram d = validate_diagram(testing::random_raw_diagram(rng, 6, 5));
    CrossingSet s = testing::random_subset(rng, d.m());
    Rational h(base(rng), 4);
    if (e_invariant(h, d) != e_invariant(h - delta_h_full(d, s), crossing_change(d, s))) o.pass = false;
  }
  o.detail = "1000 random (d, S)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    bool known_conflict;
  };
  const std::vector<Criterion> criteria{
      {"generator value", generator_value, false},
      {"generator end-to-end", generator_end_to_end, false},
      {"formula equivalence", formula_equivalence, false},
      {"order two", order_two, false},
      {"murai-ohba", murai_ohba, false},
      {"linking engine", linking_engine, false},
      {"jump table", jump_table, false},
      {"classical v2", classical_v2, false},
      {"jacobian determinant", jacobian_determinant, true},
      {"E well-defined", e_well_defined, false},
  };

  int passed = 0, unexpected = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail;
    if (!o.pass && c.known_conflict) std::cout << " [known conflict, see README]";
    std::cout << "\n";
    passed += o.pass;
    unexpected += !o.pass && !c.known_conflict;
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed\n";
  return unexpected == 0 ? 0 : 1;
}
