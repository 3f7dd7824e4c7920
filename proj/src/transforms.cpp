#include "qhal/transforms.hpp"

#include "roots.hpp"

namespace qhal {

namespace {

// W(j, k) = e^{sign 2 pi i jk / L}
Eigen::MatrixXcd dft_kernel(const Dimension& dim, int sign) {
  const int L = dim.L();
  detail::Roots root(dim);
  Eigen::MatrixXcd W(L, L);
  for (int j = 0; j < L; ++j)
    for (int k = 0; k < L; ++k) W(j, k) = root(static_cast<long long>(sign) * j * k);
  return W;
}

void require_signal_pair(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "signals must have equal length");
}

}  // namespace

PhaseFunction stft(const Signal& psi, const Signal& phi) {
  require_signal_pair(psi, phi);
  const Dimension dim(static_cast<int>(psi.size()));
  const int L = dim.L();
  // H(m, t) = psi(t) conj(phi(t - m)); each row is then Fourier transformed in t.
  Eigen::MatrixXcd H(L, L);
  for (int m = 0; m < L; ++m)
    for (int t = 0; t < L; ++t) H(m, t) = psi(t) * std::conj(phi(dim.mod(t - m)));
  return PhaseFunction(dim, H * dft_kernel(dim, -1));
}

LatticeSequence spectrogram_samples(const Signal& xi, const Signal& phi, const Lattice& lattice) {
  require_signal_pair(xi, phi);
  if (xi.size() != lattice.L()) throw Error(ErrorCode::kDimensionMismatch, "signal length differs from lattice L");
  const PhaseFunction V = stft(xi, phi);
  LatticeSequence out(lattice);
  for (int i = 0; i < lattice.size(); ++i) out.values()(i) = std::norm(V.at(lattice.points()[i]));
  return out;
}

PhaseFunction symplectic_dft(const PhaseFunction& f) {
  const Dimension& dim = f.dim();
  // sigma(z, z') = n m' - m n' separates into a DFT in n' (sign +, frequency m)
  // followed by a DFT in m' (sign -, frequency n).
  const Eigen::MatrixXcd G = f.values() * dft_kernel(dim, +1);  // G(m', m)
  Eigen::MatrixXcd F = G.transpose() * dft_kernel(dim, -1);       // F(m, n)
  F /= static_cast<double>(dim.L());
  return PhaseFunction(dim, std::move(F));
}

PhaseFunction fourier_wigner(const FiniteOperator& S) {
  const Dimension dim = S.dim();
  dim.require_odd();
  const int L = dim.L();
  const long long s = dim.half();
  detail::Roots root(dim);
  PhaseFunction F(dim);
  for (int m = 0; m < L; ++m)
    for (int n = 0; n < L; ++n) {
      // tr(pi(m,n)^* S) = sum_t e^{-2 pi i n (t+m)/L} S(t+m, t)
      cd acc = 0.0;
      for (int t = 0; t < L; ++t) {
        const int r = dim.mod(t + m);
        acc += root(-static_cast<long long>(n) * r) * S(r, t);
      }
      F.values()(m, n) = root(s * m * n) * acc;
    }
  return F;
}

FiniteOperator inverse_fourier_wigner(const PhaseFunction& F) {
  const Dimension& dim = F.dim();
  dim.require_odd();
  const int L = dim.L();
  const long long s = dim.half();
  detail::Roots root(dim);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(L, L);
  for (int m = 0; m < L; ++m)
    for (int n = 0; n < L; ++n) {
      const cd coeff = root(-s * m * n) * F.values()(m, n) / static_cast<double>(L);
      if (coeff == 0.0) continue;
      for (int t = 0; t < L; ++t) {
        const int r = dim.mod(t + m);
        M(r, t) += coeff * root(static_cast<long long>(n) * r);
      }
    }
  return FiniteOperator(std::move(M));
}

QuotientFunction symplectic_fourier_series(const LatticeSequence& c) {
  const Lattice& lattice = c.lattice();
  const Dimension& dim = lattice.dim();
  detail::Roots root(dim);
  QuotientFunction F(quotient_reps(adjoint_lattice(lattice)));
  const auto& reps = F.quotient().reps();
  for (std::size_t r = 0; r < reps.size(); ++r) {
    cd acc = 0.0;
    for (int i = 0; i < lattice.size(); ++i)
      acc += c.values()(i) * root(symplectic_form(lattice.points()[i], reps[r], dim));
    F.values()(static_cast<Eigen::Index>(r)) = acc;
  }
  return F;
}

LatticeSequence inverse_symplectic_fourier_series(const QuotientFunction& F, const Lattice& lattice) {
  const Dimension& dim = lattice.dim();
  if (!(F.quotient().lattice().same_points(adjoint_lattice(lattice))))
    throw Error(ErrorCode::kLatticeMismatch, "quotient function does not live on Z_L^2 / adjoint(lattice)");
  detail::Roots root(dim);
  const auto& reps = F.quotient().reps();
  LatticeSequence c(lattice);
  for (int i = 0; i < lattice.size(); ++i) {
    cd acc = 0.0;
    for (std::size_t r = 0; r < reps.size(); ++r)
      acc += F.values()(static_cast<Eigen::Index>(r)) * root(-symplectic_form(lattice.points()[i], reps[r], dim));
    c.values()(i) = acc / static_cast<double>(lattice.size());
  }
  return c;
}

double periodization_constant(const Lattice& adjoint) {
  return static_cast<double>(adjoint.L()) / static_cast<double>(adjoint.size());
}

QuotientFunction periodize(const PhaseFunction& f, const Lattice& adjoint) {
  const Dimension& dim = adjoint.dim();
  if (!(f.dim() == dim)) throw Error(ErrorCode::kDimensionMismatch, "phase function and lattice differ in L");
  const double kappa = periodization_constant(adjoint);
  QuotientFunction P(quotient_reps(adjoint));
  const auto& reps = P.quotient().reps();
  for (std::size_t r = 0; r < reps.size(); ++r) {
    cd acc = 0.0;
    for (const auto& mu : adjoint.points()) acc += f.at(add(reps[r], mu, dim));
    P.values()(static_cast<Eigen::Index>(r)) = kappa * acc;
  }
  return P;
}

PhaseFunction multiply(const PhaseFunction& a, const PhaseFunction& b) {
  if (!(a.dim() == b.dim())) throw Error(ErrorCode::kDimensionMismatch, "phase functions differ in L");
  return PhaseFunction(a.dim(), a.values().cwiseProduct(b.values()));
}

}  // namespace qhal
