// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "qhal/analysis.hpp"
#include "qhal/convolutions.hpp"
#include "qhal/generators.hpp"
#include "qhal/transforms.hpp"

#ifndef QHAL_CLI_PATH
#error "QHAL_CLI_PATH must name the qhal executable"
#endif

using namespace qhal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst ratio deviation / tolerance over many comparisons.
class Meter {
 public:
  void observe(double deviation, double tolerance, const std::string& where) {
    const double ratio = deviation / tolerance;
    if (!(ratio < 1.0)) {
      pass_ = false;
      if (first_failure_.empty()) {
        std::ostringstream ss;
        ss << where << ": " << deviation << " >= " << tolerance;
        first_failure_ = ss.str();
      }
    }
    if (ratio > worst_ratio_ || worst_where_.empty()) {
      worst_ratio_ = ratio;
      worst_dev_ = deviation;
      worst_where_ = where;
    }
    ++count_;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (first_failure_.empty()) first_failure_ = what;
    }
    ++count_;
  }
  Outcome outcome() const {
    std::ostringstream ss;
    ss << count_ << " checks";
    if (!worst_where_.empty()) ss << ", worst " << worst_dev_ << " at " << worst_where_;
    if (!pass_) ss << "; first failure: " << first_failure_;
    return {pass_, ss.str()};
  }

 private:
  bool pass_ = true;
  long count_ = 0;
  double worst_ratio_ = 0.0, worst_dev_ = 0.0;
  std::string worst_where_, first_failure_;
};

std::vector<oracle::Pt> pts_of(const Lattice& lat) {
  std::vector<oracle::Pt> out;
  for (const auto& p : lat.points()) out.push_back({static_cast<int>(p.m), static_cast<int>(p.n)});
  return out;
}

std::vector<std::pair<int, int>> divisor_pairs(int L) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= L; ++a)
    for (int b = 1; b <= L; ++b)
      if (L % a == 0 && L % b == 0) out.emplace_back(a, b);
  return out;
}

std::string tag(int L, int a, int b) {
  return "L=" + std::to_string(L) + " " + std::to_string(a) + "x" + std::to_string(b);
}

FiniteOperator unit_operator(const Dimension& dim, Rng& rng) {
  FiniteOperator S = random_operator(dim, rng);
  return FiniteOperator(S.matrix() / S.matrix().norm());
}

Signal unit_signal(const Dimension& dim, Rng& rng) {
  Signal v = random_signal(dim, rng);
  return v / v.norm();
}

template <class F>
bool raises(ErrorCode code, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// 1. Fourier series of S * T equals the periodized product of spreading functions.
Outcome poisson_orthogonality() {
  Meter meter;
  Rng rng(1001);
  for (int L : {9, 15}) {
    const Dimension dim(L);
    for (int pair = 0; pair < 20; ++pair) {
      const FiniteOperator S = random_operator(dim, rng), T = random_operator(dim, rng);
      const Eigen::MatrixXcd prod =
          oracle::fourier_wigner(S.matrix()).cwiseProduct(oracle::fourier_wigner(T.matrix()));
      for (auto [a, b] : divisor_pairs(L)) {
        const Lattice lat = make_separable_lattice(a, b, dim);
        const QuotientFunction lhs = symplectic_fourier_series(op_op_conv(S, T, lat));
        const auto adj = oracle::annihilator(L, pts_of(lat));
        const double kappa = static_cast<double>(lat.size()) / L;
        Eigen::MatrixXcd rhs(L, L);
        for (int m = 0; m < L; ++m)
          for (int n = 0; n < L; ++n) {
            cd acc = 0.0;
            for (const auto& mu : adj) acc += prod(oracle::md(m + mu.m, L), oracle::md(n + mu.n, L));
            rhs(m, n) = kappa * acc;
          }
        const double scale = std::max(1.0, oracle::max_abs(rhs));
        double dev = 0.0;
        for (int m = 0; m < L; ++m)
          for (int n = 0; n < L; ++n) dev = std::max(dev, std::abs(lhs.at({m, n}) - rhs(m, n)));
        meter.observe(dev, 1e-10 * scale, tag(L, a, b));
      }
    }
  }
  return meter.outcome();
}

// 2. Fundamental identity of Gabor analysis, rank-one case.
Outcome fundamental_identity() {
  Meter meter;
  Rng rng(1002);
  const int L = 15;
  const Dimension dim(L);
  const Lattice lat = make_separable_lattice(3, 5, dim);
  const auto pts = pts_of(lat);
  const auto adj = oracle::annihilator(L, pts);
  const double kappa = static_cast<double>(pts.size()) / L;
  for (int k = 0; k < 50; ++k) {
    const Signal x1 = random_signal(dim, rng), x2 = random_signal(dim, rng);
    const Signal f1 = random_signal(dim, rng), f2 = random_signal(dim, rng);
    const Eigen::MatrixXcd A1 = oracle::stft(x1, f2), A2 = oracle::stft(x2, f1);
    const Eigen::MatrixXcd B1 = oracle::stft(x1, x2), B2 = oracle::stft(f2, f1);
    cd lhs = 0.0, rhs = 0.0;
    for (const auto& p : pts) lhs += A1(p.m, p.n) * std::conj(A2(p.m, p.n));
    for (const auto& p : adj) rhs += B1(p.m, p.n) * std::conj(B2(p.m, p.n));
    rhs *= kappa;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    meter.observe(std::abs(lhs - rhs), 1e-10 * scale, "quadruple " + std::to_string(k));

    // the same sum through the library's convolution and quotient function
    const QuotientFunction fs = fs_of_op_op_conv(rank_one(x1, x2), parity_check(rank_one(f1, f2)), lat);
    meter.observe(std::abs(fs.at({0, 0}) - lhs), 1e-10 * scale, "library route " + std::to_string(k));
  }
  return meter.outcome();
}

// 3. F_W(c * S) = F_sigma(c) F_W(S).
Outcome modulation_law() {
  Meter meter;
  Rng rng(1003);
  const int L = 9;
  const Dimension dim(L);
  for (auto [a, b] : divisor_pairs(L)) {
    const Lattice lat = make_separable_lattice(a, b, dim);
    const auto pts = pts_of(lat);
    const FiniteOperator S = unit_operator(dim, rng);
    const Eigen::MatrixXcd FS = oracle::fourier_wigner(S.matrix());
    auto compare = [&](const LatticeSequence& c, const std::string& what) {
      const PhaseFunction lhs = fourier_wigner(seq_op_conv(c, S));
      double dev = 0.0;
      for (int m = 0; m < L; ++m)
        for (int n = 0; n < L; ++n)
          dev = std::max(dev, std::abs(lhs.at({m, n}) - oracle::series_at(pts, c.values(), {m, n}, L) * FS(m, n)));
      meter.observe(dev, 1e-11, tag(L, a, b) + " " + what);
    };
    for (const auto& p : lat.points()) compare(LatticeSequence::delta(lat, p), "delta");
    for (int k = 0; k < 20; ++k) compare(random_sequence(lat, rng), "random");
  }
  return meter.outcome();
}

// 4. Both associativity identities, and the non-associativity witness.
Outcome associativity() {
  Meter meter;
  Rng rng(1004);
  for (auto [L, a, b] : {std::tuple{9, 3, 3}, std::tuple{9, 1, 9}, std::tuple{15, 3, 5}, std::tuple{15, 5, 5}}) {
    const Dimension dim(L);
    const Lattice lat = make_separable_lattice(a, b, dim);
    for (int k = 0; k < 10; ++k) {
      const LatticeSequence c = random_sequence(lat, rng), d = random_sequence(lat, rng);
      const FiniteOperator S = random_operator(dim, rng), T = random_operator(dim, rng);
      meter.observe(associativity_defect(c, S, T), 1e-11, tag(L, a, b) + " (c*S)*T");
      meter.observe(associativity_defect(c, d, T), 1e-11, tag(L, a, b) + " (c*d)*T");
    }
    if (lat.size() < L * L) {
      const FiniteOperator S = random_rank_operator(dim, 2, rng);
      const NonAssociativityWitness w = nonassociativity_witness(S, lat, random_operator(dim, rng));
      meter.require(w.t_norm > 0.0 && w.deviation >= 0.5 * w.t_norm,
                    tag(L, a, b) + " witness deviation " + std::to_string(w.deviation) + " vs ||T|| " +
                        std::to_string(w.t_norm));
    }
  }
  return meter.outcome();
}

Eigen::Index svd_rank(const Eigen::MatrixXcd& D, double rel) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(D);
  const auto sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv(i) > rel * sv(0);
  return r;
}

// 5. Gram eigenvalues equal symbol values; Riesz iff the synthesis map has full column rank.
Outcome gram_spectrum() {
  Meter meter;
  Rng rng(1005);
  const AnalysisOptions opts;
  for (auto [L, a, b] : {std::tuple{9, 3, 3}, std::tuple{9, 1, 3}, std::tuple{9, 9, 9}, std::tuple{15, 3, 5},
                         std::tuple{15, 5, 5}, std::tuple{7, 1, 1}}) {
    const Dimension dim(L);
    const Lattice lat = make_separable_lattice(a, b, dim);
    const Lattice adj = adjoint_lattice(lat);
    std::vector<FiniteOperator> gens;
    for (int k = 0; k < 10; ++k) gens.push_back(random_rank_operator(dim, 1 + k % L, rng));
    // degenerate generators: identity, and spreading functions vanishing on a coset
    gens.push_back(FiniteOperator::identity(dim));
    const QuotientIndex q(adj);
    PhaseFunction F(dim, oracle::random_matrix(L, rng));
    for (const auto& mu : adj.points()) F.at(mu) = 0.0;
    gens.push_back(inverse_fourier_wigner(F));

    for (std::size_t g = 0; g < gens.size(); ++g) {
      const RieszReport r = riesz_report(gens[g], lat, opts);
      std::vector<double> sym;
      for (int i = 0; i < r.symbol.size(); ++i) sym.push_back(r.symbol.values()(i).real());
      std::sort(sym.begin(), sym.end());
      // eigenvalues from an independently assembled Gram matrix
      const Eigen::MatrixXcd D = [&] {
        Eigen::MatrixXcd M(L * L, lat.size());
        const auto pts = pts_of(lat);
        for (std::size_t j = 0; j < pts.size(); ++j) {
          const Eigen::MatrixXcd Y = oracle::translate(gens[g].matrix(), pts[j].m, pts[j].n);
          M.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXcd>(Y.data(), L * L);
        }
        return M;
      }();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(D.adjoint() * D, Eigen::EigenvaluesOnly);
      double dev = 0.0;
      for (std::size_t i = 0; i < sym.size(); ++i)
        dev = std::max(dev, std::abs(sym[i] - eig.eigenvalues()(static_cast<Eigen::Index>(i))));
      const double scale = std::max(1.0, std::abs(sym.back()));
      meter.observe(dev, 1e-9 * scale, tag(L, a, b) + " generator " + std::to_string(g));

      const bool full_rank = svd_rank(D, opts.rank_tol) == lat.size();
      meter.require((r.lower > opts.zero_tol * r.upper) == full_rank,
                    tag(L, a, b) + " generator " + std::to_string(g) + ": A>0 disagrees with SVD rank");
    }
  }
  return meter.outcome();
}

// 6. Biorthogonality, reconstruction in the span, and mask round trip on the delta basis.
Outcome biorthogonality() {
  Meter meter;
  Rng rng(1006);
  for (auto [L, a, b] : {std::tuple{9, 3, 3}, std::tuple{9, 3, 1}, std::tuple{15, 3, 5}, std::tuple{15, 5, 5}}) {
    const Dimension dim(L);
    const Lattice lat = make_separable_lattice(a, b, dim);
    const auto pts = pts_of(lat);
    const FiniteOperator S = random_rank_operator(dim, 3, rng);
    const FiniteOperator R = biorthogonal_generator(S, lat);
    double dev = 0.0;
    for (const auto& p : pts)
      dev = std::max(dev, std::abs(oracle::op_op_conv_at(S.matrix(), R.matrix(), p) - ((p.m == 0 && p.n == 0) ? 1.0 : 0.0)));
    meter.observe(dev, 1e-10, tag(L, a, b) + " S*R = delta");

    for (int k = 0; k < 20; ++k) {
      const LatticeSequence c = random_sequence(lat, rng);
      const FiniteOperator T = seq_op_conv(c, S);
      const FiniteOperator back = seq_op_conv(op_op_conv(T, R, lat), S);
      meter.observe(oracle::max_abs(back.matrix() - T.matrix()), 1e-10 * std::max(1.0, oracle::max_abs(T.matrix())),
                    tag(L, a, b) + " T = (T*R)*S");
    }
    for (const auto& p : lat.points()) {
      const LatticeSequence d = LatticeSequence::delta(lat, p);
      const MaskRecovery rec = recover_mask(seq_op_conv(d, S), S, lat);
      meter.observe(oracle::max_abs(rec.mask.values() - d.values()), 1e-10, tag(L, a, b) + " delta round trip");
    }
  }
  return meter.outcome();
}

// 7. Best approximation: time side, Fourier side and dense least squares agree.
Outcome best_approximation_agreement() {
  Meter meter;
  Rng rng(1007);
  for (auto [L, a, b] : {std::tuple{15, 3, 5}, std::tuple{9, 3, 3}, std::tuple{15, 5, 3}}) {
    const Dimension dim(L);
    const Lattice lat = make_separable_lattice(a, b, dim);
    const Lattice adj = adjoint_lattice(lat);
    const auto pts = pts_of(lat);
    for (int k = 0; k < 5; ++k) {
      const FiniteOperator S = random_rank_operator(dim, 3, rng);
      const FiniteOperator T = random_operator(dim, rng);
      const ApproxReport rep = best_approximation(T, S, lat);

      // Fourier side: P[conj(F_W S) F_W T] / P|F_W S|^2, then inverse series
      const Eigen::MatrixXcd FS = oracle::fourier_wigner(S.matrix()), FT = oracle::fourier_wigner(T.matrix());
      const QuotientFunction num = periodize(PhaseFunction(dim, FS.conjugate().cwiseProduct(FT)), adj);
      const QuotientFunction den = periodize(PhaseFunction(dim, FS.cwiseAbs2().cast<cd>()), adj);
      const QuotientFunction ratio(num.quotient(), num.values().cwiseQuotient(den.values()));
      const LatticeSequence fourier_mask = inverse_symplectic_fourier_series(ratio, lat);

      const Eigen::VectorXcd ls = oracle::least_squares_mask(T.matrix(), S.matrix(), pts);
      const std::string where = tag(L, a, b) + " pair " + std::to_string(k);
      meter.observe(oracle::max_abs(rep.mask.values() - ls), 1e-9, where + " time vs lsq");
      meter.observe(oracle::max_abs(fourier_mask.values() - ls), 1e-9, where + " fourier vs lsq");
      meter.observe(oracle::max_abs(rep.mask.values() - fourier_mask.values()), 1e-9, where + " time vs fourier");

      const Eigen::MatrixXcd resid = T.matrix() - oracle::seq_op_conv(pts, rep.mask.values(), S.matrix());
      double defect = 0.0;
      for (const auto& p : pts)
        defect = std::max(defect, std::abs((resid.array() * oracle::translate(S.matrix(), p.m, p.n).array().conjugate()).sum()));
      meter.observe(defect, 1e-9, where + " orthogonality");
    }
  }
  return meter.outcome();
}

// 8. Underspread division at L = 15 with Lambda° = 5Z x 5Z.
Outcome underspread() {
  Meter meter;
  Rng rng(1008);
  const int L = 15;
  const Dimension dim(L);
  const Lattice lat = make_separable_lattice(3, 3, dim);
  const Lattice adj = adjoint_lattice(lat);
  meter.require(adj.separable_steps() == std::optional<std::pair<int, int>>{{5, 5}}, "adjoint of 3x3 is 5x5");
  const std::vector<PhasePoint> domain = fundamental_domain(adj, true);
  const auto pts = pts_of(lat);
  for (int k = 0; k < 20; ++k) {
    const FiniteOperator S = random_underspread_operator(dim, 1 + k % 2, rng);
    const FiniteOperator T = k % 2 == 0 ? gaussian_spreading_operator(dim) : random_operator(dim, rng);
    const UnderspreadResult r = underspread_divide(S, T, lat, domain);
    // recompute (S * T) * A by brute force
    Eigen::VectorXcd c(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
      c(static_cast<Eigen::Index>(i)) = oracle::op_op_conv_at(S.matrix(), T.matrix(), pts[i]);
    const Eigen::MatrixXcd back = oracle::seq_op_conv(pts, c, r.A.matrix());
    const double rel = (back - S.matrix()).norm() / S.matrix().norm();
    meter.observe(rel, 1e-9, "pair " + std::to_string(k));
    meter.observe(r.relative_error, 1e-9, "reported " + std::to_string(k));
  }
  const FiniteOperator T = gaussian_spreading_operator(dim);
  meter.require(raises(ErrorCode::kSupportViolation,
                       [&] { underspread_divide(random_underspread_operator(dim, 3, rng), T, lat, domain); }),
                "oversized support raises SupportViolation");
  PhaseFunction holed = fourier_wigner(T);
  holed.at({2, -1}) = 0.0;
  const FiniteOperator T0 = inverse_fourier_wigner(holed);
  meter.require(raises(ErrorCode::kDivisionByZero,
                       [&] { underspread_divide(random_underspread_operator(dim, 1, rng), T0, lat, domain); }),
                "vanishing F_W(T) raises DivisionByZero");
  return meter.outcome();
}

// 9. Transform infrastructure on unit-norm random inputs.
Outcome transforms() {
  Meter meter;
  Rng rng(1009);
  for (int L : {5, 9, 15}) {
    const Dimension dim(L);
    for (int k = 0; k < 5; ++k) {
      const std::string where = "L=" + std::to_string(L);
      Eigen::MatrixXcd fm = oracle::random_matrix(L, rng);
      fm /= fm.norm();
      const PhaseFunction f(dim, fm);
      meter.observe(oracle::max_abs(symplectic_dft(symplectic_dft(f)).values() - fm), 1e-11, where + " sdft involution");
      meter.observe(oracle::max_abs(symplectic_dft(f).values() - oracle::sdft(fm)), 1e-11, where + " sdft vs direct sum");

      const FiniteOperator S = unit_operator(dim, rng), T = unit_operator(dim, rng);
      meter.observe(oracle::max_abs(inverse_fourier_wigner(fourier_wigner(S)).matrix() - S.matrix()), 1e-11,
                    where + " F_W round trip");
      const Eigen::MatrixXcd FS = oracle::fourier_wigner(S.matrix()), FT = oracle::fourier_wigner(T.matrix());
      meter.observe(oracle::max_abs(fourier_wigner(S).values() - FS), 1e-11, where + " F_W vs trace formula");
      const cd plancherel = (FS.array() * FT.array().conjugate()).sum() / static_cast<double>(L);
      meter.observe(std::abs(hs_inner(S, T) - plancherel), 1e-11, where + " F_W Plancherel");

      const Signal p1 = unit_signal(dim, rng), p2 = unit_signal(dim, rng);
      const Signal g1 = unit_signal(dim, rng), g2 = unit_signal(dim, rng);
      const cd moyal = (stft(p1, g1).values().array() * stft(p2, g2).values().array().conjugate()).sum();
      // Eigen's dot conjugates its left side, so <a, b> = b.dot(a)
      const cd expect = static_cast<double>(L) * p2.dot(p1) * std::conj(g2.dot(g1));
      meter.observe(std::abs(moyal - expect), 1e-11, where + " Moyal");
    }
  }
  return meter.outcome();
}

// 10. The CLI suite passes and is byte-for-byte reproducible.
Outcome cli_determinism() {
  Meter meter;
  const auto dir = std::filesystem::temp_directory_path() / ("qhal_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string first = (dir / "first.json").string(), second = (dir / "second.json").string();
  const std::string cli = QHAL_CLI_PATH;

  const auto start = std::chrono::steady_clock::now();
  const int rc1 = std::system(("\"" + cli + "\" suite --seed 7 --json \"" + first + "\" > /dev/null").c_str());
  const int rc2 = std::system(("\"" + cli + "\" suite --seed 7 --json \"" + second + "\" > /dev/null").c_str());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp(first), b = slurp(second);
  meter.require(rc1 == 0 && rc2 == 0, "suite exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2));
  meter.require(!a.empty() && a == b, "JSON reports differ or are empty");
  meter.require(a.find("\"passed\": true") != std::string::npos, "suite JSON does not report passed");
  meter.require(seconds < 60.0, "two suite runs took " + std::to_string(seconds) + " s");
  std::filesystem::remove_all(dir);

  Outcome out = meter.outcome();
  std::ostringstream ss;
  ss << out.detail << ", " << a.size() << " bytes identical, " << seconds << " s for two runs";
  out.detail = ss.str();
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Poisson/orthogonality: series of S*T = periodized F_W(S)F_W(T)", poisson_orthogonality},
      {"fundamental identity of Gabor analysis", fundamental_identity},
      {"modulation law F_W(c*S) = F_sigma(c) F_W(S)", modulation_law},
      {"associativity identities and non-associativity witness", associativity},
      {"Gram spectrum = Riesz symbol; A>0 iff full rank", gram_spectrum},
      {"biorthogonality, reconstruction and mask round trip", biorthogonality},
      {"best approximation: three routes agree, residual orthogonal", best_approximation_agreement},
      {"underspread division and its preconditions", underspread},
      {"transform infrastructure", transforms},
      {"CLI suite determinism and runtime", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %zu: %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
