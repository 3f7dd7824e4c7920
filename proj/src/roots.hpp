#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qhal/phase_space.hpp"

namespace qhal::detail {

// Table of e^{2 pi i k / L}, indexed by k mod L.
class Roots {
 public:
  explicit Roots(const Dimension& dim) : dim_(dim), table_(dim.L()) {
    const double step = 2.0 * std::numbers::pi / dim.L();
    for (int k = 0; k < dim.L(); ++k) table_[k] = std::polar(1.0, step * k);
  }

  std::complex<double> operator()(long long k) const { return table_[dim_.mod(k)]; }

 private:
  Dimension dim_;
  std::vector<std::complex<double>> table_;
};

}  // namespace qhal::detail
