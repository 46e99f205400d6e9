#pragma once

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace haefliger {

/// One preimage component L_i^level of crossing i. Level 1 sits above level 0.
///
/// The defaulted ordering is lexicographic on (crossing, level), which is
/// exactly the pair order used by the crossing-change formulas:
/// (i,e) < (j,e') iff i < j, or i == j with e = 0 and e' = 1.
struct LiftId {
  int crossing = 1;
  int level = 0;

  friend auto operator<=>(const LiftId&, const LiftId&) = default;
};

/// Unordered pair of distinct lifts, stored with `first < second`.
using LiftPair = std::pair<LiftId, LiftId>;

using CrossingSet = std::set<int>;

struct LkEntry {
  LiftId a;
  LiftId b;
  int value = 0;
};

struct WritheEntry {
  LiftId lift;
  int value = 0;
};

/// Unchecked diagram data as read from a file or assembled by hand.
struct RawDiagram {
  int k = 1;
  int m = 0;
  std::vector<LkEntry> lk;
  std::vector<WritheEntry> writhe;
};

/// Linking-data shadow of an almost-planar embedding R^{4k-1} -> R^{6k}:
/// m crossings, a symmetric linking matrix over the 2m lifts and optional
/// writhes. Missing entries are zero; zero entries are never stored, so two
/// diagrams with the same data compare equal.
class CrossingDiagram {
public:
  CrossingDiagram() = default;

  int k() const noexcept { return k_; }
  int m() const noexcept { return m_; }

  int lk(LiftId a, LiftId b) const;
  int writhe(LiftId lift) const;

  /// Nonzero linking entries keyed by ordered pair (first < second).
  const std::map<LiftPair, int>& lk_entries() const noexcept { return lk_; }
  const std::map<LiftId, int>& writhe_entries() const noexcept { return writhe_; }

  RawDiagram to_raw() const;

  friend bool operator==(const CrossingDiagram&, const CrossingDiagram&) = default;

private:
  friend CrossingDiagram validate_diagram(const RawDiagram& raw);
  friend CrossingDiagram crossing_change(const CrossingDiagram& d, const CrossingSet& s);

  int k_ = 1;
  int m_ = 0;
  std::map<LiftPair, int> lk_;
  std::map<LiftId, int> writhe_;
};

LiftPair make_lift_pair(LiftId a, LiftId b);

/// Checks ranges and symmetry and builds the canonical diagram.
/// Throws IndexOutOfRange, AsymmetricEntry or InvalidEntry.
CrossingDiagram validate_diagram(const RawDiagram& raw);

/// Diagram of f_S: for every i in S the two levels of crossing i trade places
/// in every linking and writhe key. Values and m are unchanged.
CrossingDiagram crossing_change(const CrossingDiagram& d, const CrossingSet& s);

/// Throws IndexOutOfRange unless every element of `s` lies in 1..m.
void check_crossing_set(const CrossingDiagram& d, const CrossingSet& s);

}  // namespace haefliger
