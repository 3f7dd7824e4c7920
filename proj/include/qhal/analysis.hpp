#pragma once

// Riesz diagnostics, the biorthogonal system, best approximation, mask
// recovery, Tauberian kernel diagnostics and underspread division.

#include <vector>

#include "qhal/convolutions.hpp"
#include "qhal/functions.hpp"
#include "qhal/operators.hpp"

namespace qhal {

struct AnalysisOptions {
  /// A symbol value counts as zero below zero_tol * max(symbol).
  double zero_tol = 1e-10;
  /// Singular values below rank_tol * sigma_max are treated as zero.
  double rank_tol = 1e-12;
};

struct RieszReport {
  double lower = 0.0;  // A
  double upper = 0.0;  // B
  /// F_sigma^Lambda(S *_Lambda S-check^*) on Z_L^2 / Lambda°.
  QuotientFunction symbol;
  std::vector<PhasePoint> zero_cosets;
  std::vector<double> gram_eigenvalues;  // ascending
  double max_imag_residue = 0.0;
  /// max |sorted eigenvalues - sorted symbol values|
  double spectral_mismatch = 0.0;

  bool is_riesz() const noexcept { return zero_cosets.empty(); }
};

RieszReport riesz_report(const FiniteOperator& S, const Lattice& lattice, const AnalysisOptions& opts = {});

/// Gram matrix G(i, j) = (S *_Lambda S-check^*)(lambda_i - lambda_j).
Eigen::MatrixXcd gram_matrix(const FiniteOperator& S, const Lattice& lattice);

/// Symplectic Fourier coefficients b of 1 / symbol. Throws NotRiesz.
LatticeSequence biorthogonal_coefficients(const FiniteOperator& S, const Lattice& lattice,
                                          const AnalysisOptions& opts = {});
/// R = b *_Lambda S-check^*, so that S *_Lambda R = delta_0. Throws NotRiesz.
FiniteOperator biorthogonal_generator(const FiniteOperator& S, const Lattice& lattice,
                                      const AnalysisOptions& opts = {});

struct ApproxReport {
  LatticeSequence mask;
  FiniteOperator approximant;
  double residual_hs = 0.0;
  double orthogonality_defect = 0.0;
  /// max |mask - mask from the quotient formula|
  double formula_deviation = 0.0;
};

/// HS-orthogonal projection of T onto span{alpha_lambda(S)}. Throws NotRiesz.
ApproxReport best_approximation(const FiniteOperator& T, const FiniteOperator& S, const Lattice& lattice,
                                const AnalysisOptions& opts = {});

struct MaskRecovery {
  LatticeSequence mask;
  /// ||G - mask *_Lambda S||_HS; nonzero when G is outside the model class.
  double residual_hs = 0.0;
};

MaskRecovery recover_mask(const FiniteOperator& G, const FiniteOperator& S, const Lattice& lattice,
                          const AnalysisOptions& opts = {});

struct TauberianReport {
  std::vector<PhasePoint> zero_cosets;
  int rank = 0;
  int kernel_dim = 0;
  int lattice_size = 0;
  int hs_dim = 0;
  /// kernel_dim == |zero_cosets|
  bool consistent = false;
  /// rank == L^2; impossible whenever lattice_size < L^2.
  bool spans_hs = false;
};

/// Over a finite quotient "no zeros", "zeros on a null set" and "zeros on no
/// open set" coincide, so one diagnostic covers all three forms.
TauberianReport tauberian_diagnostics(const FiniteOperator& S, const Lattice& lattice, const AnalysisOptions& opts = {});

/// ||(T *_Lambda R) *_Lambda S - T *_Lambda (R *_Lambda S)||_HS with R the biorthogonal generator.
double association_deviation(const FiniteOperator& T, const FiniteOperator& S, const Lattice& lattice,
                             const AnalysisOptions& opts = {});

struct NonAssociativityWitness {
  FiniteOperator T;  // probe minus its projection onto the span of translates
  double deviation = 0.0;
  double t_norm = 0.0;
};

/// Throws FullLattice when N_Lambda = L^2, NotRiesz when S fails the Riesz condition.
NonAssociativityWitness nonassociativity_witness(const FiniteOperator& S, const Lattice& lattice,
                                                 const FiniteOperator& probe, const AnalysisOptions& opts = {});

struct UnderspreadOptions {
  double support_tol = 1e-12;   // relative to max |F_W(S)|
  double division_tol = 1e-10;  // relative to max |F_W(T)|
};

struct UnderspreadResult {
  FiniteOperator A;
  /// ||S - (S *_Lambda T) *_Lambda A||_HS / ||S||_HS
  double relative_error = 0.0;
};

/// Solves S = (S *_Lambda T) *_Lambda A with F_W(A) = 1_domain / (kappa F_W(T)), kappa = N_Lambda / L.
/// The domain must meet each coset of Lambda° at most once. Throws SupportViolation,
/// DivisionByZero, EvenDimension or InvalidArgument (domain).
UnderspreadResult underspread_divide(const FiniteOperator& S, const FiniteOperator& T, const Lattice& lattice,
                                     const std::vector<PhasePoint>& domain, const UnderspreadOptions& opts = {});

/// {-r..r}^2 reduced mod L.
std::vector<PhasePoint> centered_box(int radius, const Dimension& dim);

}  // namespace qhal
