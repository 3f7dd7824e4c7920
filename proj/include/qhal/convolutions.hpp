#pragma once

// Lattice convolutions between sequences and operators, Gabor multipliers and
// the synthesis map.

#include "qhal/functions.hpp"
#include "qhal/operators.hpp"

namespace qhal {

/// c *_Lambda S = sum_lambda c(lambda) alpha_lambda(S).
FiniteOperator seq_op_conv(const LatticeSequence& c, const FiniteOperator& S);

/// (S *_Lambda T)(lambda) = tr(S alpha_lambda(T-check)).
LatticeSequence op_op_conv(const FiniteOperator& S, const FiniteOperator& T, const Lattice& lattice);

/// Group convolution over the lattice; throws LatticeMismatch for different lattices.
LatticeSequence seq_seq_conv(const LatticeSequence& c, const LatticeSequence& d);

/// m *_Lambda (xi (x) phi): psi -> sum_lambda m(lambda) V_phi psi(lambda) pi(lambda) xi.
FiniteOperator gabor_multiplier(const LatticeSequence& mask, const Signal& phi, const Signal& xi);
/// The same operator applied to psi by analysis, masking and synthesis.
Signal apply_gabor_multiplier(const LatticeSequence& mask, const Signal& phi, const Signal& xi, const Signal& psi);

/// lambda -> <S pi(lambda) phi1, pi(lambda) phi2>.
LatticeSequence lower_symbol(const FiniteOperator& S, const Signal& phi1, const Signal& phi2, const Lattice& lattice);

/// max |c * (S * T) - (c * S) * T| over the lattice.
double associativity_defect(const LatticeSequence& c, const FiniteOperator& S, const FiniteOperator& T);
/// max entry of |(c * d) * T - c * (d * T)|.
double associativity_defect(const LatticeSequence& c, const LatticeSequence& d, const FiniteOperator& T);

/// F_sigma^Lambda(c)(z) F_W(S)(z); equals fourier_wigner(seq_op_conv(c, S)). Requires odd L.
PhaseFunction fw_of_seq_op_conv(const LatticeSequence& c, const FiniteOperator& S);

/// periodize(F_W(S) F_W(T), Lambda°); equals symplectic_fourier_series(op_op_conv(S, T, lattice)).
QuotientFunction fs_of_op_op_conv(const FiniteOperator& S, const FiniteOperator& T, const Lattice& lattice);

/// D_S : l^2(Lambda) -> HS as an explicit L^2 x N_Lambda matrix. Column j is the
/// row-major vectorization of alpha_{lambda_j}(S).
class SynthesisMap {
 public:
  SynthesisMap(Lattice lattice, FiniteOperator generator);

  const Lattice& lattice() const noexcept { return lattice_; }
  const FiniteOperator& generator() const noexcept { return generator_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

  FiniteOperator apply(const LatticeSequence& c) const;

 private:
  Lattice lattice_;
  FiniteOperator generator_;
  Eigen::MatrixXcd matrix_;
};

Eigen::VectorXcd vectorize(const FiniteOperator& S);

}  // namespace qhal
