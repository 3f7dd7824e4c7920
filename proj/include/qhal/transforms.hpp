#pragma once

// Fourier-type maps on the finite phase space.
//
// Normalizations (all exact in the finite model):
//   symplectic_dft      F(z) = (1/L) sum_{z'} f(z') e^{-2 pi i sigma(z,z')/L}, unitary and involutive
//   fourier_wigner      F_W(S)(m,n) = e^{2 pi i s mn/L} tr(pi(m,n)^* S), s = (L+1)/2
//   symplectic series   F(z) = sum_{lambda} c(lambda) e^{2 pi i sigma(lambda,z)/L}, no prefactor
//   periodize           P(f)(z) = (N_Lambda / L) sum_{mu in Lambda°} f(z + mu)
// With these, sum_lambda F_sigma(f)(lambda) e^{2 pi i sigma(lambda,z)/L} = periodize(f)(z).

#include "qhal/functions.hpp"
#include "qhal/operators.hpp"

namespace qhal {

/// V_phi psi(z) = <psi, pi(z) phi>.
PhaseFunction stft(const Signal& psi, const Signal& phi);

/// |V_phi xi(lambda)|^2 on the lattice points.
LatticeSequence spectrogram_samples(const Signal& xi, const Signal& phi, const Lattice& lattice);

PhaseFunction symplectic_dft(const PhaseFunction& f);

/// Requires odd L.
PhaseFunction fourier_wigner(const FiniteOperator& S);
/// S = (1/L) sum_z e^{-2 pi i s mn/L} F(z) pi(z). Requires odd L.
FiniteOperator inverse_fourier_wigner(const PhaseFunction& F);

/// Lives on Z_L^2 / adjoint_lattice(c.lattice()).
QuotientFunction symplectic_fourier_series(const LatticeSequence& c);
/// Throws LatticeMismatch unless F lives on Z_L^2 / adjoint_lattice(lattice).
LatticeSequence inverse_symplectic_fourier_series(const QuotientFunction& F, const Lattice& lattice);

/// `adjoint` is the lattice summed over (Lambda°); the prefactor is N_Lambda / L = L / N_{Lambda°}.
QuotientFunction periodize(const PhaseFunction& f, const Lattice& adjoint);
double periodization_constant(const Lattice& adjoint);

/// Pointwise product.
PhaseFunction multiply(const PhaseFunction& a, const PhaseFunction& b);

}  // namespace qhal
