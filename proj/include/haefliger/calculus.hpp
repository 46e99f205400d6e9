#pragma once

#include <cstdint>
#include <vector>

#include "haefliger/diagram.hpp"
#include "haefliger/linking.hpp"
#include "haefliger/rational.hpp"

namespace haefliger {

/// sum over (i,e) < (j,e') of (-1)^(e+e') lk(L_i^e, L_j^e').
std::int64_t signed_linking_sum(const CrossingDiagram& d);

/// H(f) - H(f_S) as the difference of the signed linking sums of f and f_S,
/// divided by 4.
Rational delta_h_full(const CrossingDiagram& d, const CrossingSet& s);

/// H(f) - H(f_S) as half the signed sum over pairs with exactly one crossing
/// in S.
Rational delta_h_reduced(const CrossingDiagram& d, const CrossingSet& s);

/// Dirac-limit value of the two-edge graph integral:
/// (1/2) * signed_linking_sum + (1/4) * sum of writhes.
Rational i_x_dirac(const CrossingDiagram& d);

struct SubsetTerm {
  std::vector<int> subset;
  Rational value;  // u(f_S) = h0 - delta_h_full(d, S)
};

struct AlternatingSum {
  Rational value;
  std::vector<SubsetTerm> terms;  // lexicographic order of the sorted subsets
};

/// V_{s+1}(H)(f) = sum over S in A of (-1)^|S| u(f_S), with u(f) = h0 given
/// and u(f_S) obtained from the crossing-change formula.
/// Throws DuplicateIndex or IndexOutOfRange.
AlternatingSum v_alternating(const Rational& h0, const CrossingDiagram& d, const std::vector<int>& crossings);

/// Invariant of the generic immersion p o f: H(f) - signed_linking_sum / 4.
Rational e_invariant(const Rational& h_of_f, const CrossingDiagram& d);

enum class EventKind { DefiniteTangency, IndefiniteTangency, TriplePoint };

/// How the three sheets' double point components through a triple point
/// coincide.
enum class TriplePattern { AllDistinct, IEqJ, PEqI, JEqP, AllEqual };

/// Codimension-one event met by a generic regular homotopy of liftable
/// immersions. Only the fields relevant to `kind` are read.
struct HomotopyEvent {
  EventKind kind = EventKind::DefiniteTangency;
  int index = 1;                  // index of the quadratic form, 1..2k-1
  bool joins_components = false;  // tangency merges two double point components
  int lk00 = 0;                   // lk(L_i^0, L_j^0) of the merged components
  int lk11 = 0;                   // lk(L_i^1, L_j^1)
  TriplePattern pattern = TriplePattern::AllDistinct;
  int sign = 1;
};

/// Jump E(g_t) - E(g_{-t}) across the event. Throws InconsistentEvent.
Rational e_jump(const HomotopyEvent& ev, int k);

/// Smale invariant of an embedding S^3 -> R^6 factoring through R^5.
Rational smale_from_h(const Rational& h);

struct MuraiOhbaCertificate {
  CrossingDiagram diagram;
  CrossingSet switched;
  Rational delta_h;
  int link_lk = 0;
};

/// Linking shadow of a single-crossing unknotting: two separated copies of
/// the link L0 u L1 as the double point sets of two crossings, unknotted by
/// switching crossing 1. delta_h equals lk(L0, L1).
MuraiOhbaCertificate murai_ohba_certificate(const PolyCurve& l0, const PolyCurve& l1,
                                            const ProjectionAxis& axis = ProjectionAxis{});

/// The (16k-4)x(16k-4) Jacobian of the Gauss-map product at a Dirac pole,
/// rows grouped by the tangent spaces of S^{6k-1} x S^{6k-1} x S^{4k-2} and
/// columns by the coordinates of the four configuration points.
std::vector<std::vector<int>> jacobian_matrix(int k);

/// Exact determinant of jacobian_matrix(k) (fraction-free elimination).
std::int64_t jacobian_det(int k);

}  // namespace haefliger
