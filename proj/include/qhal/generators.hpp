#pragma once

// Named windows and seeded random inputs.

#include <cstdint>
#include <random>
#include <string>

#include "qhal/functions.hpp"
#include "qhal/operators.hpp"

namespace qhal {

/// Portable normal variates (Box-Muller over mt19937_64) so seeded output does
/// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double normal();
  cd complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// L-periodization of exp(-pi t^2 / L), unit norm.
Signal gaussian_window(const Dimension& dim);
Signal delta_window(const Dimension& dim);
/// Constant, unit norm.
Signal ones_window(const Dimension& dim);
/// Indicator of {0..width-1}, unit norm.
Signal box_window(const Dimension& dim, int width);
Signal random_signal(const Dimension& dim, Rng& rng);

/// Throws InvalidArgument for unknown names. Names: gauss, delta, ones, box<k>, random.
Signal named_window(const std::string& name, const Dimension& dim, Rng& rng);

FiniteOperator random_operator(const Dimension& dim, Rng& rng);
/// Sum of `rank` random rank-one operators.
FiniteOperator random_rank_operator(const Dimension& dim, int rank, Rng& rng);
/// Random F_W supported on the centered box {-r..r}^2. Requires odd L.
FiniteOperator random_underspread_operator(const Dimension& dim, int radius, Rng& rng);
/// rho of the Gaussian exp(-pi |z|^2 / L) on phase space; F_W has no zeros.
FiniteOperator gaussian_spreading_operator(const Dimension& dim);

LatticeSequence random_sequence(const Lattice& lattice, Rng& rng);

}  // namespace qhal
