#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace haefliger {

/// A crossing of a classical knot diagram seen as an arrow on the based
/// circle, from the over-passage to the under-passage.
struct Arrow {
  int label = 0;
  int over_position = 0;
  int under_position = 0;
  int sign = 1;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Based Gauss diagram: 2n passage positions 0..2n-1 in traversal order from
/// the basepoint, each used by exactly one arrow endpoint. Arrows are kept
/// sorted by label.
class GaussDiagramK {
public:
  GaussDiagramK() = default;
  /// Throws LabelMismatch unless positions form a permutation of 0..2n-1 and
  /// signs are +-1.
  explicit GaussDiagramK(std::vector<Arrow> arrows);

  int crossing_count() const noexcept { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(int label) const;

  friend bool operator==(const GaussDiagramK&, const GaussDiagramK&) = default;

private:
  std::vector<Arrow> arrows_;
};

/// Parses an extended Gauss code such as "O1+U2+O3+U1+O2+U3+". Tokens may be
/// separated by whitespace or commas. Throws MalformedToken or LabelMismatch.
GaussDiagramK parse_gauss_code(std::string_view code);

/// Inverse of parse_gauss_code (no separators).
std::string to_gauss_code(const GaussDiagramK& g);

/// Crossing changes at the given labels: over and under swap, sign flips.
GaussDiagramK switch_crossings(const GaussDiagramK& g, const std::set<int>& labels);

/// Moves the basepoint forward by `steps` passages.
GaussDiagramK rotate_basepoint(const GaussDiagramK& g, int steps);

/// Mirror image: every crossing changed.
GaussDiagramK mirror(const GaussDiagramK& g);

/// Sum of e1*e2 over unordered pairs of arrows whose endpoints interleave
/// on the circle. Independent of arrow directions and of the basepoint.
std::int64_t x_pairing(const GaussDiagramK& g);

/// Labels first met as an under-passage when walking from the basepoint.
std::set<int> descending_set(const GaussDiagramK& g);

bool is_descending(const GaussDiagramK& g);

/// Casson invariant from the crossing-change formula against the descending
/// diagram: (x_pairing(G) - x_pairing(G_desc)) / 4. Throws NonIntegerResult.
std::int64_t v2(const GaussDiagramK& g);

/// Conway polynomial coefficients (index = power of z) computed by the skein
/// relation on the planar diagram reconstructed from the code.
/// Throws NonRealizable when the code has no planar realization.
std::vector<std::int64_t> conway_polynomial(const GaussDiagramK& g);

/// z^2 coefficient of the Conway polynomial.
std::int64_t conway_a2_oracle(const GaussDiagramK& g);

/// True when the signed code determines a planar (genus 0) diagram.
bool is_planar(const GaussDiagramK& g);

}  // namespace haefliger
