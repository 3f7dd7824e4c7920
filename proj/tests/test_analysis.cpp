#include <algorithm>
#include <limits>

#include "doctest.h"
#include "oracle.hpp"
#include "qhal/analysis.hpp"
#include "qhal/generators.hpp"
#include "qhal/transforms.hpp"

using namespace qhal;

namespace {

std::vector<oracle::Pt> pts_of(const Lattice& lat) {
  std::vector<oracle::Pt> out;
  for (const auto& p : lat.points()) out.push_back({static_cast<int>(p.m), static_cast<int>(p.n)});
  return out;
}

template <class F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

// Synthesis matrix built column-major from explicit conjugations.
Eigen::MatrixXcd synthesis_oracle(const FiniteOperator& S, const Lattice& lat) {
  const int L = S.L();
  const auto pts = pts_of(lat);
  Eigen::MatrixXcd D(L * L, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const Eigen::MatrixXcd Y = oracle::translate(S.matrix(), pts[j].m, pts[j].n);
    D.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXcd>(Y.data(), L * L);
  }
  return D;
}

// T minus its least-squares projection onto span{alpha_lambda(S)}.
Eigen::MatrixXcd orthogonal_part(const Eigen::MatrixXcd& T, const FiniteOperator& S, const Lattice& lat) {
  const Eigen::VectorXcd c = oracle::least_squares_mask(T, S.matrix(), pts_of(lat));
  return T - oracle::seq_op_conv(pts_of(lat), c, S.matrix());
}

}  // namespace

TEST_CASE("riesz_report: identity on the full group is degenerate") {
  const Dimension d5(5);
  const RieszReport r = riesz_report(FiniteOperator::identity(d5), make_full_lattice(d5));
  CHECK(r.lower == doctest::Approx(0.0));
  CHECK(r.upper == doctest::Approx(125.0));
  CHECK(!r.is_riesz());
  CHECK(r.zero_cosets.size() == 24);
  REQUIRE(r.gram_eigenvalues.size() == 25);
  CHECK(r.gram_eigenvalues.back() == doctest::Approx(125.0));
  for (int i = 0; i < 24; ++i) CHECK(std::abs(r.gram_eigenvalues[static_cast<std::size_t>(i)]) < 1e-10);
  CHECK(oracle::max_abs(gram_matrix(FiniteOperator::identity(d5), make_full_lattice(d5)) -
                        Eigen::MatrixXcd::Constant(25, 25, 5.0)) < 1e-12);
}

TEST_CASE("riesz_report: rank-one generator, spectral match and scaling") {
  Rng rng(81);
  const Dimension d9(9);
  const Lattice lat = make_separable_lattice(3, 3, d9);
  Signal g = random_signal(d9, rng);
  g /= g.norm();
  CHECK(oracle::stft(g, g).cwiseAbs().minCoeff() > 0.0);
  const FiniteOperator S = rank_one(g, g);
  const RieszReport r = riesz_report(S, lat);
  CHECK(r.lower > 0.0);
  CHECK(r.is_riesz());
  CHECK(r.upper >= r.lower);
  CHECK(r.spectral_mismatch < 1e-9);
  CHECK(r.max_imag_residue < 1e-10);

  // independent Gram matrix: D^* D from an oracle synthesis matrix
  const Eigen::MatrixXcd D = synthesis_oracle(S, lat);
  CHECK(oracle::max_abs(gram_matrix(S, lat) - D.adjoint() * D) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(D.adjoint() * D, Eigen::EigenvaluesOnly);
  std::vector<double> sym;
  for (int i = 0; i < r.symbol.size(); ++i) sym.push_back(r.symbol.values()(i).real());
  std::sort(sym.begin(), sym.end());
  for (std::size_t i = 0; i < sym.size(); ++i) CHECK(std::abs(sym[i] - eig.eigenvalues()(static_cast<Eigen::Index>(i))) < 1e-9);
  CHECK(r.lower == doctest::Approx(sym.front()));
  CHECK(r.upper == doctest::Approx(sym.back()));

  const RieszReport twice = riesz_report(FiniteOperator(2.0 * S.matrix()), lat);
  CHECK(oracle::max_abs(twice.symbol.values() - 4.0 * r.symbol.values()) < 1e-11);
  CHECK(twice.zero_cosets == r.zero_cosets);

  expect_code(ErrorCode::kEvenDimension, [] {
    const Dimension d8(8);
    riesz_report(FiniteOperator::identity(d8), make_separable_lattice(2, 2, d8));
  });
}

TEST_CASE("riesz symbol equals Gram eigenvalues over many random cases") {
  Rng rng(82);
  for (auto [L, a, b] : {std::tuple{9, 3, 3}, std::tuple{15, 3, 5}, std::tuple{15, 5, 5}, std::tuple{9, 1, 3}, std::tuple{7, 1, 1}}) {
    const Dimension dim(L);
    const Lattice lat = make_separable_lattice(a, b, dim);
    for (int k = 0; k < 3; ++k) {
      const RieszReport r = riesz_report(random_rank_operator(dim, 1 + k, rng), lat);
      CHECK(r.spectral_mismatch < 1e-9);
      CHECK(r.max_imag_residue < 1e-10);
      CHECK(r.is_riesz() == (r.lower > 1e-10 * r.upper));
    }
  }
}

TEST_CASE("biorthogonal generator") {
  Rng rng(83);
  const Dimension d9(9);
  const FiniteOperator S = random_rank_operator(d9, 3, rng);

  const Lattice one = make_separable_lattice(9, 9, d9);
  const FiniteOperator R1 = biorthogonal_generator(S, one);
  const double n2 = hs_inner(S, S).real();
  CHECK(oracle::max_abs(R1.matrix() - parity_check(S.adjoint()).matrix() / n2) < 1e-13);
  CHECK(std::abs(op_op_conv(S, R1, one).at({0, 0}) - 1.0) < 1e-13);

  const Lattice lat = make_separable_lattice(3, 3, d9);
  const FiniteOperator R = biorthogonal_generator(S, lat);
  CHECK(oracle::max_abs(op_op_conv(S, R, lat).values() - LatticeSequence::delta(lat).values()) < 1e-10);
  // independent check through the oracle convolution
  for (const auto& p : pts_of(lat))
    CHECK(std::abs(oracle::op_op_conv_at(S.matrix(), R.matrix(), p) - ((p.m == 0 && p.n == 0) ? 1.0 : 0.0)) < 1e-10);

  const LatticeSequence c = random_sequence(lat, rng);
  const FiniteOperator T = seq_op_conv(c, S);
  CHECK(oracle::max_abs(seq_op_conv(op_op_conv(T, R, lat), S).matrix() - T.matrix()) < 1e-10);

  const LatticeSequence b = biorthogonal_coefficients(S, lat);
  double dev = 0.0;
  for (const auto& p : lat.points()) dev = std::max(dev, std::abs(b.at(neg(p, d9)) - std::conj(b.at(p))));
  CHECK(dev < 1e-12);

  expect_code(ErrorCode::kNotRiesz, [&] { biorthogonal_generator(FiniteOperator::zero(d9), lat); });
  expect_code(ErrorCode::kNotRiesz, [&] { biorthogonal_generator(FiniteOperator::identity(d9), make_full_lattice(d9)); });
}

TEST_CASE("best_approximation") {
  Rng rng(84);
  const Dimension d15(15);
  const Lattice lat = make_separable_lattice(3, 5, d15);
  const FiniteOperator S = random_rank_operator(d15, 3, rng);
  REQUIRE(riesz_report(S, lat).is_riesz());

  const LatticeSequence c0 = random_sequence(lat, rng);
  const ApproxReport in_span = best_approximation(seq_op_conv(c0, S), S, lat);
  CHECK(oracle::max_abs(in_span.mask.values() - c0.values()) < 1e-9);
  CHECK(in_span.residual_hs < 1e-9);

  const Eigen::MatrixXcd perp = orthogonal_part(oracle::random_matrix(15, rng), S, lat);
  const ApproxReport orth = best_approximation(FiniteOperator(perp), S, lat);
  CHECK(oracle::max_abs(orth.mask.values()) < 1e-9);
  CHECK(orth.residual_hs == doctest::Approx(perp.norm()).epsilon(1e-9));

  const FiniteOperator T = random_operator(d15, rng);
  const ApproxReport rep = best_approximation(T, S, lat);
  const Eigen::VectorXcd ls = oracle::least_squares_mask(T.matrix(), S.matrix(), pts_of(lat));
  CHECK(oracle::max_abs(rep.mask.values() - ls) < 1e-9);
  CHECK(rep.orthogonality_defect < 1e-9);
  CHECK(rep.formula_deviation < 1e-9);
  CHECK(oracle::max_abs(rep.approximant.matrix() - seq_op_conv(rep.mask, S).matrix()) < 1e-10);
  CHECK(rep.residual_hs == doctest::Approx((T.matrix() - rep.approximant.matrix()).norm()).epsilon(1e-10));
  for (const auto& p : lat.points())
    CHECK(std::abs(hs_inner(FiniteOperator(T.matrix() - rep.approximant.matrix()), translate(S, p))) < 1e-9);

  const ApproxReport again = best_approximation(rep.approximant, S, lat);
  CHECK(oracle::max_abs(again.mask.values() - rep.mask.values()) < 1e-10);

  expect_code(ErrorCode::kNotRiesz, [&] { best_approximation(T, FiniteOperator::zero(d15), lat); });
}

TEST_CASE("recover_mask") {
  Rng rng(85);
  const Dimension d9(9);
  const Lattice lat = make_separable_lattice(3, 3, d9);
  const FiniteOperator S = random_rank_operator(d9, 2, rng);
  REQUIRE(riesz_report(S, lat).is_riesz());

  CHECK(oracle::max_abs(recover_mask(S, S, lat).mask.values() - LatticeSequence::delta(lat).values()) < 1e-10);

  const LatticeSequence c = random_sequence(lat, rng);
  const FiniteOperator G = seq_op_conv(c, S);
  const MaskRecovery exact = recover_mask(G, S, lat);
  CHECK(oracle::max_abs(exact.mask.values() - c.values()) < 1e-10);
  CHECK(exact.residual_hs < 1e-9);

  const Eigen::MatrixXcd noise = 1e-3 * oracle::random_matrix(9, rng);
  const FiniteOperator noisy(G.matrix() + noise);
  const MaskRecovery r = recover_mask(noisy, S, lat);
  const Eigen::MatrixXcd defect = orthogonal_part(noise, S, lat);
  CHECK(r.residual_hs == doctest::Approx(defect.norm()).epsilon(1e-8));
  const Eigen::VectorXcd projected = oracle::least_squares_mask(noisy.matrix(), S.matrix(), pts_of(lat));
  CHECK(oracle::max_abs(r.mask.values() - projected) < 1e-10);
}

TEST_CASE("recover_mask inverts seq_op_conv on the delta basis (L <= 9)") {
  Rng rng(86);
  for (auto [L, a, b] : {std::tuple{9, 3, 3}, std::tuple{7, 7, 1}, std::tuple{5, 1, 1}, std::tuple{9, 9, 3}}) {
    const Dimension dim(L);
    const Lattice lat = make_separable_lattice(a, b, dim);
    const FiniteOperator S = random_operator(dim, rng);
    REQUIRE(riesz_report(S, lat).is_riesz());
    double dev = 0.0;
    for (const auto& p : lat.points()) {
      const LatticeSequence d = LatticeSequence::delta(lat, p);
      dev = std::max(dev, oracle::max_abs(recover_mask(seq_op_conv(d, S), S, lat).mask.values() - d.values()));
    }
    CHECK(dev < 1e-9);
  }
}

TEST_CASE("tauberian_diagnostics") {
  Rng rng(87);
  const Dimension d9(9);
  const Lattice lat = make_separable_lattice(3, 3, d9);

  const TauberianReport zero = tauberian_diagnostics(FiniteOperator::zero(d9), lat);
  CHECK(zero.kernel_dim == lat.size());
  CHECK(zero.rank == 0);
  CHECK(static_cast<int>(zero.zero_cosets.size()) == lat.size());
  CHECK(zero.consistent);

  const TauberianReport good = tauberian_diagnostics(random_operator(d9, rng), lat);
  CHECK(good.kernel_dim == 0);
  CHECK(good.zero_cosets.empty());
  CHECK(good.rank == lat.size());
  CHECK(good.consistent);
  CHECK(!good.spans_hs);
  CHECK(good.hs_dim == 81);

  // F_W vanishing on exactly one coset of the adjoint lattice
  const Lattice adj = adjoint_lattice(lat);
  const QuotientIndex q(adj);
  for (int which : {0, 4}) {
    PhaseFunction F(d9, oracle::random_matrix(9, rng));
    const PhasePoint rep = q.reps()[static_cast<std::size_t>(which)];
    for (const auto& mu : adj.points()) F.at(add(rep, mu, d9)) = 0.0;
    const FiniteOperator S = inverse_fourier_wigner(F);
    const TauberianReport t = tauberian_diagnostics(S, lat);
    CHECK(t.kernel_dim == 1);
    CHECK(t.zero_cosets.size() == 1);
    CHECK(t.consistent);
    // independent rank of the oracle synthesis matrix
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(synthesis_oracle(S, lat));
    const auto sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > 1e-10 * sv(0);
    CHECK(rank == lat.size() - 1);
  }

  const Lattice full = make_full_lattice(Dimension(5));
  const TauberianReport spans = tauberian_diagnostics(random_operator(Dimension(5), rng), full);
  CHECK(spans.spans_hs);
  CHECK(spans.kernel_dim == 0);
}

TEST_CASE("non-associativity witness") {
  Rng rng(88);
  const Dimension d9(9);
  const Lattice lat = make_separable_lattice(3, 3, d9);
  const FiniteOperator S = random_rank_operator(d9, 2, rng);
  REQUIRE(riesz_report(S, lat).is_riesz());

  const FiniteOperator probe = random_operator(d9, rng);
  const NonAssociativityWitness w = nonassociativity_witness(S, lat, probe);
  const Eigen::MatrixXcd perp = orthogonal_part(probe.matrix(), S, lat);
  CHECK(oracle::max_abs(w.T.matrix() - perp) < 1e-9);
  CHECK(w.t_norm == doctest::Approx(perp.norm()).epsilon(1e-9));
  CHECK(w.deviation == doctest::Approx(w.t_norm).epsilon(1e-9));
  CHECK(w.deviation > w.t_norm / 2);
  const ApproxReport a = best_approximation(probe, S, lat);
  CHECK(w.deviation == doctest::Approx((probe.matrix() - a.approximant.matrix()).norm()).epsilon(1e-9));

  CHECK(association_deviation(seq_op_conv(random_sequence(lat, rng), S), S, lat) < 1e-10);

  const Dimension d5(5);
  expect_code(ErrorCode::kFullLattice,
              [&] { nonassociativity_witness(random_operator(d5, rng), make_full_lattice(d5), FiniteOperator::identity(d5)); });
  expect_code(ErrorCode::kNotRiesz, [&] { nonassociativity_witness(FiniteOperator::zero(d9), lat, probe); });
}

TEST_CASE("underspread_divide") {
  Rng rng(89);
  const Dimension d15(15);
  const Lattice lat = make_separable_lattice(3, 3, d15);
  const Lattice adj = adjoint_lattice(lat);
  CHECK(adj.separable_steps() == std::optional<std::pair<int, int>>{{5, 5}});
  const std::vector<PhasePoint> domain = fundamental_domain(adj, true);
  const FiniteOperator T = gaussian_spreading_operator(d15);

  // a single spreading coefficient at the origin
  const FiniteOperator S0(cd(0.7, -0.2) * Eigen::MatrixXcd::Identity(15, 15));
  const UnderspreadResult r0 = underspread_divide(S0, T, lat, domain);
  CHECK(r0.relative_error < 1e-12);
  CHECK(oracle::max_abs(seq_op_conv(op_op_conv(S0, T, lat), r0.A).matrix() - S0.matrix()) < 1e-11);

  for (int k = 0; k < 5; ++k) {
    const FiniteOperator S = random_underspread_operator(d15, 1, rng);
    const PhaseFunction F = fourier_wigner(S);
    for (int m = 0; m < 15; ++m)
      for (int n = 0; n < 15; ++n) {
        const bool inside = (m <= 1 || m >= 14) && (n <= 1 || n >= 14);
        if (!inside) CHECK(std::abs(F.at({m, n})) < 1e-12);
      }
    const UnderspreadResult r = underspread_divide(S, T, lat, domain);
    CHECK(r.relative_error < 1e-9);
    // recompute with the brute-force convolutions
    const auto pts = pts_of(lat);
    Eigen::VectorXcd c(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) c(static_cast<Eigen::Index>(i)) = oracle::op_op_conv_at(S.matrix(), T.matrix(), pts[i]);
    const Eigen::MatrixXcd back = oracle::seq_op_conv(pts, c, r.A.matrix());
    CHECK((back - S.matrix()).norm() < 1e-9 * S.matrix().norm());

    const UnderspreadResult small = underspread_divide(S, T, lat, centered_box(1, d15));
    CHECK(small.relative_error < 1e-9);
  }

  const FiniteOperator wide = random_underspread_operator(d15, 3, rng);
  expect_code(ErrorCode::kSupportViolation, [&] { underspread_divide(wide, T, lat, domain); });

  PhaseFunction holed = fourier_wigner(T);
  holed.at({1, 0}) = 0.0;
  const FiniteOperator T0 = inverse_fourier_wigner(holed);
  expect_code(ErrorCode::kDivisionByZero,
              [&] { underspread_divide(random_underspread_operator(d15, 1, rng), T0, lat, domain); });

  expect_code(ErrorCode::kInvalidArgument,
              [&] { underspread_divide(S0, T, lat, centered_box(3, d15)); });
  const Dimension d8(8);
  expect_code(ErrorCode::kEvenDimension, [&] {
    underspread_divide(FiniteOperator::identity(d8), FiniteOperator::identity(d8), make_separable_lattice(2, 2, d8),
                       {{0, 0}});
  });
}

TEST_CASE("synthesis ratios stay inside the Riesz band") {
  Rng rng(90);
  const Dimension d9(9);
  const Lattice lat = make_separable_lattice(3, 3, d9);
  const FiniteOperator S = random_rank_operator(d9, 2, rng);
  const RieszReport r = riesz_report(S, lat);
  REQUIRE(r.is_riesz());
  double min1 = std::numeric_limits<double>::infinity(), max1 = 0.0;
  double mininf = std::numeric_limits<double>::infinity(), maxinf = 0.0;
  for (int k = 0; k < 100; ++k) {
    const LatticeSequence c = random_sequence(lat, rng);
    const FiniteOperator C = seq_op_conv(c, S);
    const double ratio2 = schatten_norm(C, 2.0) / c.values().norm();
    CHECK(ratio2 * ratio2 >= r.lower * (1 - 1e-10));
    CHECK(ratio2 * ratio2 <= r.upper * (1 + 1e-10));
    const double q1 = schatten_norm(C, 1.0) / c.values().cwiseAbs().sum();
    const double qi = schatten_norm(C, std::numeric_limits<double>::infinity()) / c.values().cwiseAbs().maxCoeff();
    min1 = std::min(min1, q1);
    max1 = std::max(max1, q1);
    mininf = std::min(mininf, qi);
    maxinf = std::max(maxinf, qi);
  }
  CHECK(min1 > 0.0);
  CHECK(std::isfinite(max1));
  CHECK(mininf > 0.0);
  CHECK(std::isfinite(maxinf));
}
