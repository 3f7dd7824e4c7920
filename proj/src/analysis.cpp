#include "qhal/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "qhal/transforms.hpp"

namespace qhal {

namespace {

// Symbol of the Gram matrix: P_{Lambda°}(|F_W(S)|^2) = F_sigma^Lambda(S *_Lambda S-check^*).
QuotientFunction gram_symbol(const FiniteOperator& S, const Lattice& lattice) {
  return fs_of_op_op_conv(S, parity_check(S.adjoint()), lattice);
}

std::vector<PhasePoint> zero_cosets_of(const QuotientFunction& symbol, double zero_tol) {
  const Eigen::VectorXd re = symbol.values().real();
  const double top = re.size() ? re.maxCoeff() : 0.0;
  std::vector<PhasePoint> zeros;
  for (Eigen::Index r = 0; r < re.size(); ++r)
    if (!(top > 0.0) || re(r) < zero_tol * top) zeros.push_back(symbol.quotient().reps()[static_cast<std::size_t>(r)]);
  return zeros;
}

// 1 / symbol; the symbol is real, so drop the rounding residue in the imaginary part.
QuotientFunction inverted_symbol(const FiniteOperator& S, const Lattice& lattice, const AnalysisOptions& opts) {
  QuotientFunction symbol = gram_symbol(S, lattice);
  const auto zeros = zero_cosets_of(symbol, opts.zero_tol);
  if (!zeros.empty())
    throw Error(ErrorCode::kNotRiesz, "translates are not a Riesz sequence: Gram symbol vanishes on " +
                                          std::to_string(zeros.size()) + " coset(s)");
  for (Eigen::Index r = 0; r < symbol.values().size(); ++r) symbol.values()(r) = 1.0 / symbol.values()(r).real();
  return symbol;
}

}  // namespace

Eigen::MatrixXcd gram_matrix(const FiniteOperator& S, const Lattice& lattice) {
  const LatticeSequence g = op_op_conv(S, parity_check(S.adjoint()), lattice);
  const Dimension& dim = lattice.dim();
  const int N = lattice.size();
  Eigen::MatrixXcd G(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      G(i, j) = g.values()(lattice.index_of(sub(lattice.points()[i], lattice.points()[j], dim)));
  return G;
}

RieszReport riesz_report(const FiniteOperator& S, const Lattice& lattice, const AnalysisOptions& opts) {
  S.dim().require_odd();
  RieszReport report{.symbol = gram_symbol(S, lattice)};
  const Eigen::VectorXcd& sym = report.symbol.values();
  report.max_imag_residue = sym.imag().cwiseAbs().maxCoeff();
  report.lower = sym.real().minCoeff();
  report.upper = sym.real().maxCoeff();
  report.zero_cosets = zero_cosets_of(report.symbol, opts.zero_tol);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram_matrix(S, lattice), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  report.gram_eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(report.gram_eigenvalues.begin(), report.gram_eigenvalues.end());

  std::vector<double> sorted(static_cast<std::size_t>(sym.size()));
  for (Eigen::Index r = 0; r < sym.size(); ++r) sorted[static_cast<std::size_t>(r)] = sym(r).real();
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    report.spectral_mismatch = std::max(report.spectral_mismatch, std::abs(sorted[i] - report.gram_eigenvalues[i]));
  return report;
}

LatticeSequence biorthogonal_coefficients(const FiniteOperator& S, const Lattice& lattice, const AnalysisOptions& opts) {
  S.dim().require_odd();
  return inverse_symplectic_fourier_series(inverted_symbol(S, lattice, opts), lattice);
}

FiniteOperator biorthogonal_generator(const FiniteOperator& S, const Lattice& lattice, const AnalysisOptions& opts) {
  return seq_op_conv(biorthogonal_coefficients(S, lattice, opts), parity_check(S.adjoint()));
}

ApproxReport best_approximation(const FiniteOperator& T, const FiniteOperator& S, const Lattice& lattice,
                                const AnalysisOptions& opts) {
  require_same_dim(T, S);
  const FiniteOperator R = biorthogonal_generator(S, lattice, opts);
  LatticeSequence mask = op_op_conv(T, R, lattice);
  FiniteOperator approximant = seq_op_conv(mask, S);
  const FiniteOperator residual = T - approximant;

  double defect = 0.0;
  for (const auto& lambda : lattice.points())
    defect = std::max(defect, std::abs(hs_inner(residual, translate(S, lambda))));

  // Quotient-side formula: P[conj(F_W S) F_W T] / P[|F_W S|^2].
  const Lattice adj = adjoint_lattice(lattice);
  const PhaseFunction fs = fourier_wigner(S);
  const PhaseFunction ft = fourier_wigner(T);
  QuotientFunction ratio = periodize(PhaseFunction(fs.dim(), fs.values().conjugate().cwiseProduct(ft.values())), adj);
  const QuotientFunction den =
      periodize(PhaseFunction(fs.dim(), fs.values().cwiseAbs2().cast<cd>()), adj);
  ratio.values() = ratio.values().cwiseQuotient(den.values());
  const LatticeSequence fourier_mask = inverse_symplectic_fourier_series(ratio, lattice);

  ApproxReport report{.mask = std::move(mask), .approximant = std::move(approximant)};
  report.residual_hs = hs_norm(residual);
  report.orthogonality_defect = defect;
  report.formula_deviation = (report.mask.values() - fourier_mask.values()).cwiseAbs().maxCoeff();
  return report;
}

MaskRecovery recover_mask(const FiniteOperator& G, const FiniteOperator& S, const Lattice& lattice,
                          const AnalysisOptions& opts) {
  require_same_dim(G, S);
  const FiniteOperator R = biorthogonal_generator(S, lattice, opts);
  MaskRecovery out{.mask = op_op_conv(G, R, lattice)};
  out.residual_hs = hs_norm(G - seq_op_conv(out.mask, S));
  return out;
}

TauberianReport tauberian_diagnostics(const FiniteOperator& S, const Lattice& lattice, const AnalysisOptions& opts) {
  S.dim().require_odd();
  TauberianReport report;
  report.zero_cosets = zero_cosets_of(gram_symbol(S, lattice), opts.zero_tol);
  report.lattice_size = lattice.size();
  report.hs_dim = S.L() * S.L();

  const SynthesisMap D(lattice, S);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(D.matrix());
  const Eigen::VectorXd& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  report.rank = 0;
  if (top > 0.0)
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > opts.rank_tol * top) ++report.rank;
  report.kernel_dim = report.lattice_size - report.rank;
  report.consistent = report.kernel_dim == static_cast<int>(report.zero_cosets.size());
  report.spans_hs = report.rank == report.hs_dim;
  return report;
}

double association_deviation(const FiniteOperator& T, const FiniteOperator& S, const Lattice& lattice,
                             const AnalysisOptions& opts) {
  require_same_dim(T, S);
  const FiniteOperator R = biorthogonal_generator(S, lattice, opts);
  const FiniteOperator left = seq_op_conv(op_op_conv(T, R, lattice), S);
  const FiniteOperator right = seq_op_conv(op_op_conv(R, S, lattice), T);
  return hs_norm(left - right);
}

NonAssociativityWitness nonassociativity_witness(const FiniteOperator& S, const Lattice& lattice,
                                                 const FiniteOperator& probe, const AnalysisOptions& opts) {
  require_same_dim(S, probe);
  if (lattice.size() == S.L() * S.L())
    throw Error(ErrorCode::kFullLattice, "translates over the full group span HS; no witness exists");
  FiniteOperator T = probe - best_approximation(probe, S, lattice, opts).approximant;
  NonAssociativityWitness w{.T = T};
  w.t_norm = hs_norm(T);
  w.deviation = association_deviation(T, S, lattice, opts);
  return w;
}

std::vector<PhasePoint> centered_box(int radius, const Dimension& dim) {
  if (radius < 0 || 2 * radius + 1 > dim.L())
    throw Error(ErrorCode::kInvalidArgument, "box radius " + std::to_string(radius) + " does not fit in Z_L");
  std::vector<PhasePoint> out;
  for (int m = -radius; m <= radius; ++m)
    for (int n = -radius; n <= radius; ++n) out.push_back(reduce({m, n}, dim));
  return out;
}

UnderspreadResult underspread_divide(const FiniteOperator& S, const FiniteOperator& T, const Lattice& lattice,
                                     const std::vector<PhasePoint>& domain, const UnderspreadOptions& opts) {
  require_same_dim(S, T);
  const Dimension dim = S.dim();
  dim.require_odd();
  if (lattice.L() != dim.L()) throw Error(ErrorCode::kDimensionMismatch, "lattice and operators differ in L");

  const Lattice adj = adjoint_lattice(lattice);
  const QuotientIndex quotient(adj);
  std::vector<char> in_domain(static_cast<std::size_t>(dim.L()) * dim.L(), 0);
  std::vector<char> coset_used(static_cast<std::size_t>(quotient.size()), 0);
  for (const auto& p : domain) {
    const PhasePoint z = reduce(p, dim);
    char& used = coset_used[static_cast<std::size_t>(quotient.coset_of(z))];
    if (used) throw Error(ErrorCode::kInvalidArgument, "domain meets a coset of the adjoint lattice twice");
    used = 1;
    in_domain[static_cast<std::size_t>(flat_index(z, dim))] = 1;
  }

  const PhaseFunction fs = fourier_wigner(S);
  const double s_max = fs.values().cwiseAbs().maxCoeff();
  const PhaseFunction ft = fourier_wigner(T);
  const double t_max = ft.values().cwiseAbs().maxCoeff();
  const double kappa = periodization_constant(adj);

  PhaseFunction fa(dim);
  for (int m = 0; m < dim.L(); ++m)
    for (int n = 0; n < dim.L(); ++n) {
      const bool inside = in_domain[static_cast<std::size_t>(flat_index({m, n}, dim))];
      if (!inside) {
        if (std::abs(fs.values()(m, n)) > opts.support_tol * s_max)
          throw Error(ErrorCode::kSupportViolation, "F_W(S) is nonzero at (" + std::to_string(m) + "," +
                                                        std::to_string(n) + ") outside the domain");
        continue;
      }
      const cd denom = ft.values()(m, n);
      if (!(std::abs(denom) > opts.division_tol * t_max))
        throw Error(ErrorCode::kDivisionByZero, "F_W(T) vanishes at (" + std::to_string(m) + "," +
                                                    std::to_string(n) + ") inside the domain");
      fa.values()(m, n) = 1.0 / (kappa * denom);
    }

  UnderspreadResult out{.A = inverse_fourier_wigner(fa)};
  const FiniteOperator recon = seq_op_conv(op_op_conv(S, T, lattice), out.A);
  const double s_norm = hs_norm(S);
  out.relative_error = hs_norm(S - recon) / (s_norm > 0.0 ? s_norm : 1.0);
  return out;
}

}  // namespace qhal
