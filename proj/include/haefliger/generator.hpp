#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "haefliger/diagram.hpp"
#include "haefliger/linking.hpp"
#include "haefliger/rational.hpp"

namespace haefliger {

/// Sizes of the Borromean spheres X, Y, Z. Requires 2 * beta < alpha.
struct BorromeanParams {
  Rational alpha{4};
  Rational beta{1};
  int k = 1;
};

enum class AmbientSphere { X, Y, Z };

const char* to_string(AmbientSphere s);

/// The six Hopf pairs formed by the twelve double point sets of Haefliger's
/// generator, in the order (L_1^1,L_6^1), (L_2^0,L_5^0), (L_1^0,L_4^0),
/// (L_2^1,L_3^1), (L_3^0,L_6^0), (L_4^1,L_5^1).
const std::array<LiftPair, 6>& generator_hopf_pairs();

/// m = 6 diagram whose only linking entries are the six Hopf pairs, each +1.
CrossingDiagram generator_diagram(int k);

/// One double point circle L_i^e for k = 1. In R^6 = (R^2)^3 it is the round
/// circle `center + radius * (cos t, sin t)` in the coordinate plane `plane`
/// (0 = x, 1 = y, 2 = z). `curve` is its n-gon image in the chart of its
/// sphere, with the three charts placed far apart in R^3.
struct DoublePointCircle {
  LiftId lift;
  AmbientSphere sphere = AmbientSphere::X;
  std::array<double, 6> center{};
  int plane = 0;
  double radius = 0;
  PolyCurve curve;
};

/// The twelve circles, ordered L_1^0, L_1^1, L_2^0, ..., L_6^1.
/// Throws InvalidParams unless k = 1, 2 * beta < alpha and resolution >= 3.
std::vector<DoublePointCircle> generator_double_point_curves(const BorromeanParams& params, int resolution = 64);

struct GeneratorReport {
  std::array<std::array<int, 12>, 12> linking{};  // indexed by 2*(i-1) + e
  int nonzero_pairs = 0;
  int global_sign = 0;  // common value of the six Hopf entries
  Rational h;           // H of the generator (unknotted at A_1)
  std::array<Rational, 6> single_switch{};  // delta_h_reduced at S = {i}
};

/// Computes all 66 PL linking numbers of the generator's double point circles,
/// checks them against generator_diagram(1) up to a global sign and evaluates
/// H at the unknotting crossing A_1. Throws std::runtime_error if the computed
/// matrix disagrees with the diagram.
GeneratorReport verify_generator(const BorromeanParams& params, int resolution = 64, std::uint64_t seed = 1);

}  // namespace haefliger
