#pragma once

// Dense operators on C^L: time-frequency shifts, operator translation,
// parity, traces, Hilbert-Schmidt structure and Schatten norms.

#include <Eigen/Dense>

#include "qhal/functions.hpp"

namespace qhal {

/// An L x L complex matrix; row = output index, column = input index.
class FiniteOperator {
 public:
  explicit FiniteOperator(Eigen::MatrixXcd matrix);

  static FiniteOperator zero(const Dimension& dim);
  static FiniteOperator identity(const Dimension& dim);

  Dimension dim() const { return Dimension(static_cast<int>(matrix_.rows())); }
  int L() const noexcept { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  cd operator()(int row, int col) const { return matrix_(row, col); }

  FiniteOperator adjoint() const { return FiniteOperator(matrix_.adjoint()); }
  Signal apply(const Signal& psi) const;

  FiniteOperator& operator+=(const FiniteOperator& other);
  FiniteOperator& operator-=(const FiniteOperator& other);
  FiniteOperator& operator*=(cd scale);

  friend FiniteOperator operator+(FiniteOperator a, const FiniteOperator& b) { return a += b; }
  friend FiniteOperator operator-(FiniteOperator a, const FiniteOperator& b) { return a -= b; }
  friend FiniteOperator operator*(cd s, FiniteOperator a) { return a *= s; }
  /// Composition.
  friend FiniteOperator operator*(const FiniteOperator& a, const FiniteOperator& b);

 private:
  Eigen::MatrixXcd matrix_;
};

void require_same_dim(const FiniteOperator& a, const FiniteOperator& b);

/// (pi(m,n) psi)(t) = e^{2 pi i n t / L} psi(t - m).
FiniteOperator tf_shift(PhasePoint z, const Dimension& dim);
Signal tf_shift_apply(PhasePoint z, const Signal& psi);

/// pi(lambda) S pi(lambda)^*, computed entrywise in O(L^2).
FiniteOperator translate(const FiniteOperator& S, PhasePoint lambda);

/// P S P with (P psi)(t) = psi(-t).
FiniteOperator parity_check(const FiniteOperator& S);
Signal parity(const Signal& psi);

/// xi (x) phi : psi -> <psi, phi> xi.
FiniteOperator rank_one(const Signal& xi, const Signal& phi);

cd trace(const FiniteOperator& S);
/// tr(S T^*).
cd hs_inner(const FiniteOperator& S, const FiniteOperator& T);
double hs_norm(const FiniteOperator& S);
/// Sum_t a(t) conj(b(t)).
cd inner(const Signal& a, const Signal& b);

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const FiniteOperator& S);
/// l^p norm of the singular values; p = infinity gives the operator norm.
/// Throws BadExponent for p < 1.
double schatten_norm(const FiniteOperator& S, double p);

/// a_S with symplectic_dft(a_S) = fourier_wigner(S). Requires odd L.
PhaseFunction weyl_symbol(const FiniteOperator& S);

}  // namespace qhal
