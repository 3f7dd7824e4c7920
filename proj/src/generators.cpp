#include "qhal/generators.hpp"

#include <cmath>
#include <numbers>

#include "qhal/analysis.hpp"
#include "qhal/transforms.hpp"

namespace qhal {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

cd Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cd(re, im) / std::numbers::sqrt2;
}

namespace {

Signal normalized(Signal s) {
  const double n = s.norm();
  if (n > 0.0) s /= n;
  return s;
}

}  // namespace

Signal gaussian_window(const Dimension& dim) {
  const int L = dim.L();
  Signal g(L);
  for (int t = 0; t < L; ++t) {
    double acc = 0.0;
    for (int k = -4; k <= 4; ++k) {
      const double x = t + static_cast<double>(k) * L;
      acc += std::exp(-std::numbers::pi * x * x / L);
    }
    g(t) = acc;
  }
  return normalized(std::move(g));
}

Signal delta_window(const Dimension& dim) {
  Signal d = Signal::Zero(dim.L());
  d(0) = 1.0;
  return d;
}

Signal ones_window(const Dimension& dim) { return normalized(Signal::Ones(dim.L())); }

Signal box_window(const Dimension& dim, int width) {
  if (width < 1 || width > dim.L()) throw Error(ErrorCode::kInvalidArgument, "box width must be in 1..L");
  Signal b = Signal::Zero(dim.L());
  b.head(width).setOnes();
  return normalized(std::move(b));
}

Signal random_signal(const Dimension& dim, Rng& rng) {
  Signal s(dim.L());
  for (int t = 0; t < dim.L(); ++t) s(t) = rng.complex_normal();
  return s;
}

Signal named_window(const std::string& name, const Dimension& dim, Rng& rng) {
  if (name == "gauss" || name == "gaussian") return gaussian_window(dim);
  if (name == "delta") return delta_window(dim);
  if (name == "ones") return ones_window(dim);
  if (name == "random") return normalized(random_signal(dim, rng));
  if (name.rfind("box", 0) == 0 && name.size() > 3) {
    try {
      return box_window(dim, std::stoi(name.substr(3)));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown window '" + name + "' (gauss, delta, ones, box<k>, random)");
}

FiniteOperator random_operator(const Dimension& dim, Rng& rng) {
  const int L = dim.L();
  Eigen::MatrixXcd M(L, L);
  for (int u = 0; u < L; ++u)
    for (int t = 0; t < L; ++t) M(t, u) = rng.complex_normal();
  return FiniteOperator(std::move(M));
}

FiniteOperator random_rank_operator(const Dimension& dim, int rank, Rng& rng) {
  if (rank < 1) throw Error(ErrorCode::kInvalidArgument, "rank must be positive");
  FiniteOperator S = FiniteOperator::zero(dim);
  for (int k = 0; k < rank; ++k) {
    const Signal xi = random_signal(dim, rng);
    const Signal phi = random_signal(dim, rng);
    S += rank_one(xi, phi);
  }
  return S;
}

FiniteOperator random_underspread_operator(const Dimension& dim, int radius, Rng& rng) {
  dim.require_odd();
  PhaseFunction F(dim);
  for (const auto& z : centered_box(radius, dim)) F.at(z) = rng.complex_normal();
  return inverse_fourier_wigner(F);
}

FiniteOperator gaussian_spreading_operator(const Dimension& dim) {
  dim.require_odd();
  const int L = dim.L();
  PhaseFunction F(dim);
  for (int m = 0; m < L; ++m)
    for (int n = 0; n < L; ++n) {
      const double dm = std::min(m, L - m);
      const double dn = std::min(n, L - n);
      F.values()(m, n) = std::exp(-std::numbers::pi * (dm * dm + dn * dn) / L);
    }
  return inverse_fourier_wigner(F);
}

LatticeSequence random_sequence(const Lattice& lattice, Rng& rng) {
  LatticeSequence c(lattice);
  for (int i = 0; i < lattice.size(); ++i) c.values()(i) = rng.complex_normal();
  return c;
}

}  // namespace qhal
