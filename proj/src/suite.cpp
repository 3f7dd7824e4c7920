#include "qhal/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qhal/analysis.hpp"
#include "qhal/convolutions.hpp"
#include "qhal/generators.hpp"
#include "qhal/transforms.hpp"

namespace qhal {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
}

FiniteOperator unit_random(const Dimension& dim, Rng& rng) {
  FiniteOperator S = random_operator(dim, rng);
  return cd(1.0 / hs_norm(S)) * S;
}

class CaseRunner {
 public:
  CaseRunner(const SuiteCase& c, std::uint64_t seed)
      : dim_(c.L),
        lattice_(make_separable_lattice(c.a, c.b, dim_)),
        adj_(adjoint_lattice(lattice_)),
        rng_(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(c.L) * 1000003ULL + c.a * 1009ULL + c.b))),
        label_("L=" + std::to_string(c.L) + " lattice=" + std::to_string(c.a) + "x" + std::to_string(c.b)) {}

  std::vector<SuiteRow> run() {
    phase_space_checks();
    operator_checks();
    transform_checks();
    convolution_checks();
    analysis_checks();
    return std::move(rows_);
  }

 private:
  void record(const std::string& check, double deviation, double tolerance) {
    const bool ok = std::isfinite(deviation) && deviation <= tolerance;
    rows_.push_back({label_, check, deviation, tolerance, ok});
  }

  void phase_space_checks() {
    const int L = dim_.L();
    record("phase_space.adjoint_size_product", std::abs(lattice_.size() * adj_.size() - L * L), 0.0);
    record("phase_space.double_adjoint", adjoint_lattice(adj_).same_points(lattice_) ? 0.0 : 1.0, 0.0);

    double dev = 0.0;
    for (int m = 0; m < L; ++m)
      for (int n = 0; n < L; ++n) {
        cd acc = 0.0;
        for (const auto& l : lattice_.points())
          acc += std::polar(1.0, 2.0 * std::numbers::pi * symplectic_form(l, {m, n}, dim_) / L);
        const double expect = adj_.contains({m, n}) ? lattice_.size() : 0.0;
        dev = std::max(dev, std::abs(acc - expect));
      }
    record("phase_space.character_sum", dev, 1e-9);

    const QuotientIndex q(adj_);
    std::vector<int> hits(static_cast<std::size_t>(L) * L, 0);
    for (const auto& r : q.reps())
      for (const auto& mu : adj_.points()) ++hits[static_cast<std::size_t>(flat_index(add(r, mu, dim_), dim_))];
    const double bad = static_cast<double>(std::count_if(hits.begin(), hits.end(), [](int h) { return h != 1; }));
    record("phase_space.quotient_transversal", bad, 0.0);
  }

  void operator_checks() {
    const int L = dim_.L();
    std::vector<FiniteOperator> shifts;
    shifts.reserve(static_cast<std::size_t>(L) * L);
    for (int m = 0; m < L; ++m)
      for (int n = 0; n < L; ++n) shifts.push_back(tf_shift({m, n}, dim_));
    double dev = 0.0;
    for (std::size_t i = 0; i < shifts.size(); ++i)
      for (std::size_t j = 0; j < shifts.size(); ++j)
        dev = std::max(dev, std::abs(hs_inner(shifts[i], shifts[j]) / static_cast<double>(L) - (i == j ? 1.0 : 0.0)));
    record("operators.tf_shift_orthonormal_basis", dev, 1e-12);

    const FiniteOperator S = unit_random(dim_, rng_);
    const FiniteOperator T = unit_random(dim_, rng_);
    dev = 0.0;
    double star = 0.0;
    for (const auto& l : lattice_.points()) {
      dev = std::max(dev, std::abs(hs_norm(translate(S, l)) - 1.0));
      star = std::max(star, max_abs(translate(S, l).adjoint().matrix() - translate(S.adjoint(), l).matrix()));
    }
    record("operators.translate_isometry", dev, 1e-12);
    record("operators.translate_star_homomorphism", star, 1e-13);
    record("operators.parity_adjoint_commute",
           max_abs(parity_check(S.adjoint()).matrix() - parity_check(S).adjoint().matrix()), 0.0);

    const double ps[] = {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};
    double violation = 0.0;
    for (int i = 0; i + 1 < 5; ++i) violation = std::max(violation, schatten_norm(S, ps[i + 1]) - schatten_norm(S, ps[i]));
    record("operators.schatten_monotone", violation, 1e-12);

    const Eigen::VectorXd sv = singular_values(S);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(S.matrix().adjoint() * S.matrix(), Eigen::EigenvaluesOnly);
    Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().reverse();
    record("operators.svd_matches_eigen", (sv - root).cwiseAbs().maxCoeff() / sv(0), 1e-9);

    const PhaseFunction as = weyl_symbol(S), at = weyl_symbol(T);
    const cd via_symbols = (as.values().array() * at.values().array().conjugate()).sum() / static_cast<double>(L);
    record("operators.weyl_unitary", std::abs(hs_inner(S, T) - via_symbols), 1e-12);
  }

  void transform_checks() {
    const int L = dim_.L();
    PhaseFunction f(dim_);
    for (int m = 0; m < L; ++m)
      for (int n = 0; n < L; ++n) f.values()(m, n) = rng_.complex_normal();
    const PhaseFunction Ff = symplectic_dft(f);
    record("transforms.sdft_involution", max_abs(symplectic_dft(Ff).values() - f.values()), 1e-12);
    record("transforms.sdft_plancherel",
           std::abs(Ff.values().squaredNorm() - f.values().squaredNorm()) / f.values().squaredNorm(), 1e-12);

    const FiniteOperator S = unit_random(dim_, rng_);
    const FiniteOperator T = unit_random(dim_, rng_);
    const PhaseFunction fs = fourier_wigner(S), ft = fourier_wigner(T);
    record("transforms.fw_roundtrip", max_abs(inverse_fourier_wigner(fs).matrix() - S.matrix()), 1e-12);
    const cd plan = (fs.values().array() * ft.values().array().conjugate()).sum() / static_cast<double>(L);
    record("transforms.fw_plancherel", std::abs(hs_inner(S, T) - plan), 1e-12);

    double dev = 0.0;
    for (int lm = 0; lm < L; ++lm)
      for (int ln = 0; ln < L; ++ln) {
        const PhaseFunction moved = fourier_wigner(translate(S, {lm, ln}));
        for (int m = 0; m < L; ++m)
          for (int n = 0; n < L; ++n) {
            const cd chi = std::polar(1.0, 2.0 * std::numbers::pi * symplectic_form({lm, ln}, {m, n}, dim_) / L);
            dev = std::max(dev, std::abs(moved.values()(m, n) - chi * fs.values()(m, n)));
          }
      }
    record("transforms.modulation_covariance", dev, 1e-11);

    // Poisson summation against the plain character sum.
    const QuotientFunction per = periodize(f, adj_);
    dev = 0.0;
    for (const auto& z : per.quotient().reps()) {
      cd acc = 0.0;
      for (const auto& l : lattice_.points())
        acc += Ff.at(l) * std::polar(1.0, 2.0 * std::numbers::pi * symplectic_form(l, z, dim_) / L);
      dev = std::max(dev, std::abs(acc - per.at(z)));
    }
    record("transforms.poisson_summation", dev, 1e-10);

    const Signal psi = random_signal(dim_, rng_), phi = random_signal(dim_, rng_);
    const PhaseFunction V = stft(psi, phi);
    const PhaseFunction W = fourier_wigner(rank_one(psi, phi));
    dev = 0.0;
    for (int m = 0; m < L; ++m)
      for (int n = 0; n < L; ++n) {
        const cd phase = std::polar(1.0, 2.0 * std::numbers::pi * dim_.mod(static_cast<long long>(dim_.half()) * m * n) / L);
        dev = std::max(dev, std::abs(W.values()(m, n) - phase * V.values()(m, n)));
      }
    record("transforms.stft_matches_fw_rank_one", dev, 1e-11);

    const Signal psi2 = random_signal(dim_, rng_), phi2 = random_signal(dim_, rng_);
    const cd lhs = (V.values().array() * stft(psi2, phi2).values().array().conjugate()).sum();
    const cd rhs = static_cast<double>(L) * inner(psi, psi2) * std::conj(inner(phi, phi2));
    record("transforms.moyal", std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), 1e-11);
  }

  void convolution_checks() {
    const FiniteOperator S = unit_random(dim_, rng_);
    const FiniteOperator T = unit_random(dim_, rng_);
    const FiniteOperator U = unit_random(dim_, rng_);
    const LatticeSequence c = random_sequence(lattice_, rng_);
    const LatticeSequence d = random_sequence(lattice_, rng_);
    const cd a(0.7, -0.2), b(-1.1, 0.4);

    record("convolutions.commutativity",
           max_abs(op_op_conv(S, T, lattice_).values() - op_op_conv(T, S, lattice_).values()), 1e-12);

    const FiniteOperator mix = a * S + b * U;
    double bil = max_abs(op_op_conv(mix, T, lattice_).values() -
                         (a * op_op_conv(S, T, lattice_).values() + b * op_op_conv(U, T, lattice_).values()));
    LatticeSequence cd_mix(lattice_, a * c.values() + b * d.values());
    bil = std::max(bil, max_abs(seq_op_conv(cd_mix, S).matrix() -
                                (a * seq_op_conv(c, S).matrix() + b * seq_op_conv(d, S).matrix())));
    record("convolutions.bilinearity", bil, 1e-11);

    const FiniteOperator cs = seq_op_conv(c, S);
    const double l1 = c.values().cwiseAbs().sum();
    double excess = 0.0;
    for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()})
      excess = std::max(excess, schatten_norm(cs, p) / (l1 * schatten_norm(S, p)) - 1.0);
    record("convolutions.young_l1_bound", std::max(0.0, excess), 1e-12);

    const LatticeSequence adj_rel = op_op_conv(T, parity_check(S.adjoint()), lattice_);
    double dev = 0.0;
    for (int i = 0; i < lattice_.size(); ++i)
      dev = std::max(dev, std::abs(hs_inner(T, translate(S, lattice_.points()[i])) - adj_rel.values()(i)));
    record("convolutions.adjoint_relation", dev, 1e-12);

    const cd bracket_op = hs_inner(seq_op_conv(c, S), T);
    const cd bracket_seq = adj_rel.values().dot(c.values());  // sum c conj(T * S-check^*)
    record("convolutions.duality_bracket", std::abs(bracket_op - bracket_seq), 1e-11);

    const Lattice full = make_full_lattice(dim_);
    const LatticeSequence on_full = op_op_conv(S, T, full);
    const LatticeSequence on_lattice = op_op_conv(S, T, lattice_);
    dev = 0.0;
    for (int i = 0; i < lattice_.size(); ++i)
      dev = std::max(dev, std::abs(on_full.at(lattice_.points()[i]) - on_lattice.values()(i)));
    record("convolutions.restriction_consistency", dev, 0.0);

    record("convolutions.associativity_seq_op_op", associativity_defect(c, S, T), 1e-11);
    record("convolutions.associativity_seq_seq_op", associativity_defect(c, d, T), 1e-11);

    record("convolutions.fw_modulation_law",
           max_abs(fw_of_seq_op_conv(c, S).values() - fourier_wigner(seq_op_conv(c, S)).values()), 1e-11);
    record("convolutions.orthogonality_identity",
           max_abs(fs_of_op_op_conv(S, T, lattice_).values() -
                   symplectic_fourier_series(op_op_conv(S, T, lattice_)).values()),
           1e-10);

    // Fundamental identity of Gabor analysis.
    const Signal x1 = random_signal(dim_, rng_), x2 = random_signal(dim_, rng_);
    const Signal p1 = random_signal(dim_, rng_), p2 = random_signal(dim_, rng_);
    const PhaseFunction v21 = stft(x1, p2), v12 = stft(x2, p1);
    const PhaseFunction vx = stft(x1, x2), vp = stft(p2, p1);
    cd lhs = 0.0, rhs = 0.0;
    for (const auto& l : lattice_.points()) lhs += v21.at(l) * std::conj(v12.at(l));
    for (const auto& mu : adj_.points()) rhs += vx.at(mu) * std::conj(vp.at(mu));
    rhs *= periodization_constant(adj_);
    record("convolutions.fundamental_identity", std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), 1e-10);
  }

  void analysis_checks() {
    const int L = dim_.L();
    const FiniteOperator S = unit_random(dim_, rng_);
    const RieszReport rep = riesz_report(S, lattice_);
    record("analysis.gram_spectrum_equals_symbol", rep.spectral_mismatch / std::max(1.0, rep.upper), 1e-9);
    const TauberianReport tau = tauberian_diagnostics(S, lattice_);
    const bool equiv = (rep.lower > 0.0 && rep.is_riesz()) == (tau.rank == lattice_.size()) && tau.consistent;
    record("analysis.riesz_iff_full_rank", equiv ? 0.0 : 1.0, 0.0);
    if (!rep.is_riesz()) {
      record("analysis.riesz_condition", 1.0, 0.0);
      return;
    }

    const FiniteOperator R = biorthogonal_generator(S, lattice_);
    const LatticeSequence sr = op_op_conv(S, R, lattice_);
    record("analysis.biorthogonality",
           max_abs(sr.values() - LatticeSequence::delta(lattice_).values()), 1e-10);

    const FiniteOperator in_span = seq_op_conv(random_sequence(lattice_, rng_), S);
    record("analysis.span_reconstruction",
           hs_norm(in_span - seq_op_conv(op_op_conv(in_span, R, lattice_), S)) / hs_norm(in_span), 1e-10);

    double dev = 0.0;
    for (const auto& l : lattice_.points()) {
      const LatticeSequence delta = LatticeSequence::delta(lattice_, l);
      dev = std::max(dev, max_abs(recover_mask(seq_op_conv(delta, S), S, lattice_).mask.values() - delta.values()));
    }
    record("analysis.mask_roundtrip_delta_basis", dev, 1e-10);

    const FiniteOperator target = unit_random(dim_, rng_);
    const ApproxReport ap = best_approximation(target, S, lattice_);
    record("analysis.best_approximation_orthogonality", ap.orthogonality_defect, 1e-9);
    record("analysis.best_approximation_formulas_agree", ap.formula_deviation, 1e-9);
    record("analysis.best_approximation_idempotent",
           max_abs(best_approximation(ap.approximant, S, lattice_).mask.values() - ap.mask.values()), 1e-10);

    double band = 0.0;
    double lo1 = std::numeric_limits<double>::infinity(), loinf = lo1;
    for (int k = 0; k < 100; ++k) {
      const LatticeSequence c = random_sequence(lattice_, rng_);
      const FiniteOperator cs = seq_op_conv(c, S);
      const double r2 = cs.matrix().squaredNorm() / c.values().squaredNorm();
      band = std::max({band, rep.lower - r2, r2 - rep.upper});
      lo1 = std::min(lo1, schatten_norm(cs, 1.0) / c.values().cwiseAbs().sum());
      loinf = std::min(loinf, schatten_norm(cs, std::numeric_limits<double>::infinity()) / c.values().cwiseAbs().maxCoeff());
    }
    record("analysis.riesz_bounds_l2", std::max(0.0, band) / rep.upper, 1e-9);
    record("analysis.lp_ratio_positive", (lo1 > 0.0 && loinf > 0.0) ? 0.0 : 1.0, 0.0);

    if (lattice_.size() < L * L) {
      const NonAssociativityWitness w = nonassociativity_witness(S, lattice_, unit_random(dim_, rng_));
      record("analysis.nonassociativity_witness", std::max(0.0, 0.5 - w.deviation / w.t_norm), 0.0);
    }

    auto steps = adj_.separable_steps();
    if (steps && steps->first % 2 == 1 && steps->second % 2 == 1) {
      const std::vector<PhasePoint> domain = fundamental_domain(adj_, true);
      PhaseFunction F(dim_);
      for (const auto& z : domain) F.at(z) = rng_.complex_normal();
      const FiniteOperator spread = inverse_fourier_wigner(F);
      const UnderspreadResult u = underspread_divide(spread, gaussian_spreading_operator(dim_), lattice_, domain);
      record("analysis.underspread_reconstruction", u.relative_error, 1e-9);
    }
  }

  Dimension dim_;
  Lattice lattice_;
  Lattice adj_;
  Rng rng_;
  std::string label_;
  std::vector<SuiteRow> rows_;
};

}  // namespace

std::vector<SuiteCase> standard_suite_cases() { return {{9, 3, 3}, {15, 3, 5}, {15, 5, 5}}; }

std::vector<SuiteRow> run_suite(const std::vector<SuiteCase>& cases, std::uint64_t seed) {
  std::vector<SuiteRow> rows;
  for (const auto& c : cases) {
    Dimension(c.L).require_odd();
    auto part = CaseRunner(c, seed).run();
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

}  // namespace qhal
