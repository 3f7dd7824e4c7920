#include "qhal/operators.hpp"

#include <cmath>
#include <limits>

#include "qhal/transforms.hpp"
#include "roots.hpp"

namespace qhal {

FiniteOperator::FiniteOperator(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols())
    throw Error(ErrorCode::kDimensionMismatch, "operator matrix must be square");
  Dimension check(static_cast<int>(matrix_.rows()));
  (void)check;
}

FiniteOperator FiniteOperator::zero(const Dimension& dim) {
  return FiniteOperator(Eigen::MatrixXcd::Zero(dim.L(), dim.L()));
}

FiniteOperator FiniteOperator::identity(const Dimension& dim) {
  return FiniteOperator(Eigen::MatrixXcd::Identity(dim.L(), dim.L()));
}

Signal FiniteOperator::apply(const Signal& psi) const {
  if (psi.size() != L()) throw Error(ErrorCode::kDimensionMismatch, "signal length differs from operator size");
  return matrix_ * psi;
}

FiniteOperator& FiniteOperator::operator+=(const FiniteOperator& other) {
  require_same_dim(*this, other);
  matrix_ += other.matrix_;
  return *this;
}

FiniteOperator& FiniteOperator::operator-=(const FiniteOperator& other) {
  require_same_dim(*this, other);
  matrix_ -= other.matrix_;
  return *this;
}

FiniteOperator& FiniteOperator::operator*=(cd scale) {
  matrix_ *= scale;
  return *this;
}

FiniteOperator operator*(const FiniteOperator& a, const FiniteOperator& b) {
  require_same_dim(a, b);
  return FiniteOperator(a.matrix_ * b.matrix_);
}

void require_same_dim(const FiniteOperator& a, const FiniteOperator& b) {
  if (a.L() != b.L())
    throw Error(ErrorCode::kDimensionMismatch,
                "operators of size " + std::to_string(a.L()) + " and " + std::to_string(b.L()));
}

FiniteOperator tf_shift(PhasePoint z, const Dimension& dim) {
  const int L = dim.L();
  detail::Roots root(dim);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(L, L);
  for (int t = 0; t < L; ++t) M(t, dim.mod(t - z.m)) = root(static_cast<long long>(z.n) * t);
  return FiniteOperator(std::move(M));
}

Signal tf_shift_apply(PhasePoint z, const Signal& psi) {
  const Dimension dim(static_cast<int>(psi.size()));
  detail::Roots root(dim);
  Signal out(dim.L());
  for (int t = 0; t < dim.L(); ++t) out(t) = root(static_cast<long long>(z.n) * t) * psi(dim.mod(t - z.m));
  return out;
}

FiniteOperator translate(const FiniteOperator& S, PhasePoint lambda) {
  const Dimension dim = S.dim();
  const int L = dim.L();
  detail::Roots root(dim);
  const int m = dim.mod(lambda.m);
  const long long n = dim.mod(lambda.n);
  // (pi S pi^*)(t, u) = e^{2 pi i n (t - u)/L} S(t - m, u - m)
  Eigen::MatrixXcd out(L, L);
  for (int u = 0; u < L; ++u) {
    const int su = dim.mod(u - m);
    for (int t = 0; t < L; ++t) out(t, u) = root(n * (t - u)) * S(dim.mod(t - m), su);
  }
  return FiniteOperator(std::move(out));
}

FiniteOperator parity_check(const FiniteOperator& S) {
  const Dimension dim = S.dim();
  const int L = dim.L();
  Eigen::MatrixXcd out(L, L);
  for (int u = 0; u < L; ++u)
    for (int t = 0; t < L; ++t) out(t, u) = S(dim.mod(-t), dim.mod(-u));
  return FiniteOperator(std::move(out));
}

Signal parity(const Signal& psi) {
  const Dimension dim(static_cast<int>(psi.size()));
  Signal out(dim.L());
  for (int t = 0; t < dim.L(); ++t) out(t) = psi(dim.mod(-t));
  return out;
}

FiniteOperator rank_one(const Signal& xi, const Signal& phi) {
  if (xi.size() != phi.size()) throw Error(ErrorCode::kDimensionMismatch, "rank_one needs equal lengths");
  return FiniteOperator(xi * phi.adjoint());
}

cd trace(const FiniteOperator& S) { return S.matrix().trace(); }

cd hs_inner(const FiniteOperator& S, const FiniteOperator& T) {
  require_same_dim(S, T);
  // sum_{ij} S_ij conj(T_ij)
  return (S.matrix().array() * T.matrix().array().conjugate()).sum();
}

double hs_norm(const FiniteOperator& S) { return S.matrix().norm(); }

cd inner(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "inner product needs equal lengths");
  return b.dot(a);  // Eigen conjugates the left operand
}

Eigen::VectorXd singular_values(const FiniteOperator& S) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(S.matrix());
  return svd.singularValues();
}

double schatten_norm(const FiniteOperator& S, double p) {
  if (!(p >= 1.0)) throw Error(ErrorCode::kBadExponent, "Schatten exponent must be >= 1");
  const Eigen::VectorXd s = singular_values(S);
  if (std::isinf(p)) return s.size() ? s(0) : 0.0;
  if (s.size() == 0 || s(0) == 0.0) return 0.0;
  // Scale by the largest singular value to avoid overflow for large p.
  const double top = s(0);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i) / top, p);
  return top * std::pow(acc, 1.0 / p);
}

PhaseFunction weyl_symbol(const FiniteOperator& S) { return symplectic_dft(fourier_wigner(S)); }

}  // namespace qhal
