// extern "C" wrapper over the C++ core. Exceptions never cross this boundary.

#include "qhal/qhal.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "qhal/analysis.hpp"
#include "qhal/convolutions.hpp"
#include "qhal/generators.hpp"
#include "qhal/io.hpp"
#include "qhal/suite.hpp"
#include "qhal/transforms.hpp"

struct qhal_lattice {
  qhal::Lattice value;
};
struct qhal_operator {
  qhal::FiniteOperator value;
};
struct qhal_sequence {
  qhal::LatticeSequence value;
};
struct qhal_riesz {
  qhal::RieszReport value;
};
struct qhal_suite {
  std::vector<qhal::SuiteRow> rows;
};

namespace {

thread_local std::string g_last_error;

template <class F>
int guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return QHAL_OK;
  } catch (const qhal::Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QHAL_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QHAL_INTERNAL_ERROR;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw qhal::Error(qhal::ErrorCode::kInvalidArgument, what);
}

#define QHAL_REQUIRE_PTR(p) require((p) != nullptr, #p " must not be null")

qhal::Signal read_signal(int L, const double* data) {
  QHAL_REQUIRE_PTR(data);
  qhal::Signal s(L);
  for (int t = 0; t < L; ++t) s(t) = {data[2 * t], data[2 * t + 1]};
  return s;
}

void write_complex(const qhal::cd* begin, std::size_t count, double* out) {
  for (std::size_t i = 0; i < count; ++i) {
    out[2 * i] = begin[i].real();
    out[2 * i + 1] = begin[i].imag();
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<qhal::PhasePoint> read_points(const int* pairs, std::size_t count) {
  if (count) QHAL_REQUIRE_PTR(pairs);
  std::vector<qhal::PhasePoint> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back({pairs[2 * i], pairs[2 * i + 1]});
  return pts;
}

qhal::AnalysisOptions analysis_options(double zero_tol) {
  qhal::AnalysisOptions opts;
  if (zero_tol > 0.0) opts.zero_tol = zero_tol;
  return opts;
}

template <class Handle, class Value>
void emit(Handle** out, Value&& value) {
  QHAL_REQUIRE_PTR(out);
  *out = new Handle{std::forward<Value>(value)};
}

}  // namespace

extern "C" {

const char* qhal_last_error(void) { return g_last_error.c_str(); }

const char* qhal_status_name(int status) {
  if (status == QHAL_INTERNAL_ERROR) return "InternalError";
  if (status < 0 || status > QHAL_IO_ERROR) return "Unknown";
  return qhal::error_name(static_cast<qhal::ErrorCode>(status));
}

void qhal_string_free(char* s) { std::free(s); }

/* ---- lattices ---- */

int qhal_lattice_separable(int L, int a, int b, qhal_lattice** out) {
  return guarded([&] { emit(out, qhal::make_separable_lattice(a, b, qhal::Dimension(L))); });
}

int qhal_lattice_general(int L, const int* gens, size_t count, qhal_lattice** out) {
  return guarded([&] { emit(out, qhal::make_general_lattice(read_points(gens, count), qhal::Dimension(L))); });
}

int qhal_lattice_parse(const char* text, qhal_lattice** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(text);
    emit(out, qhal::lattice_from_text(text));
  });
}

int qhal_lattice_to_text(const qhal_lattice* lattice, char** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(lattice);
    QHAL_REQUIRE_PTR(out);
    *out = dup_string(qhal::lattice_to_text(lattice->value));
  });
}

int qhal_lattice_adjoint(const qhal_lattice* lattice, qhal_lattice** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(lattice);
    emit(out, qhal::adjoint_lattice(lattice->value));
  });
}

int qhal_lattice_L(const qhal_lattice* lattice) { return lattice ? lattice->value.L() : 0; }

size_t qhal_lattice_size(const qhal_lattice* lattice) {
  return lattice ? static_cast<size_t>(lattice->value.size()) : 0;
}

int qhal_lattice_point(const qhal_lattice* lattice, size_t index, int* m, int* n) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(lattice);
    require(index < lattice->value.points().size(), "lattice point index out of range");
    const auto z = lattice->value.points()[index];
    if (m) *m = z.m;
    if (n) *n = z.n;
  });
}

size_t qhal_lattice_generator_count(const qhal_lattice* lattice) {
  return lattice ? lattice->value.generators().size() : 0;
}

int qhal_lattice_generator(const qhal_lattice* lattice, size_t index, int* m, int* n) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(lattice);
    require(index < lattice->value.generators().size(), "generator index out of range");
    const auto z = lattice->value.generators()[index];
    if (m) *m = z.m;
    if (n) *n = z.n;
  });
}

int qhal_lattice_separable_steps(const qhal_lattice* lattice, int* a, int* b) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(lattice);
    auto steps = lattice->value.separable_steps();
    if (!steps) throw qhal::Error(qhal::ErrorCode::kNotSeparable, "lattice is not of the form aZ x bZ");
    if (a) *a = steps->first;
    if (b) *b = steps->second;
  });
}

void qhal_lattice_free(qhal_lattice* lattice) { delete lattice; }

/* ---- signals ---- */

int qhal_window(int L, const char* name, uint64_t seed, double* out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(name);
    QHAL_REQUIRE_PTR(out);
    qhal::Rng rng(seed);
    const qhal::Signal w = qhal::named_window(name, qhal::Dimension(L), rng);
    write_complex(w.data(), static_cast<std::size_t>(w.size()), out);
  });
}

int qhal_signal_load(const char* path, double* out, int capacity, int* L_out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(path);
    const qhal::Signal s = qhal::signal_from_text(qhal::read_text_file(path));
    if (L_out) *L_out = static_cast<int>(s.size());
    if (out) {
      require(capacity >= s.size(), "signal buffer too small");
      write_complex(s.data(), static_cast<std::size_t>(s.size()), out);
    }
  });
}

int qhal_signal_save(const char* path, int L, const double* data) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(path);
    qhal::write_text_file(path, qhal::signal_to_text(read_signal(qhal::Dimension(L).L(), data)));
  });
}

/* ---- operators ---- */

int qhal_operator_from_data(int L, const double* data, qhal_operator** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(data);
    const qhal::Dimension dim(L);
    Eigen::MatrixXcd M(L, L);
    for (int t = 0; t < L; ++t)
      for (int u = 0; u < L; ++u) M(t, u) = {data[2 * (t * L + u)], data[2 * (t * L + u) + 1]};
    emit(out, qhal::FiniteOperator(std::move(M)));
  });
}

int qhal_operator_zero(int L, qhal_operator** out) {
  return guarded([&] { emit(out, qhal::FiniteOperator::zero(qhal::Dimension(L))); });
}

int qhal_operator_identity(int L, qhal_operator** out) {
  return guarded([&] { emit(out, qhal::FiniteOperator::identity(qhal::Dimension(L))); });
}

int qhal_operator_rank_one(int L, const double* xi, const double* phi, qhal_operator** out) {
  return guarded([&] {
    const qhal::Dimension dim(L);
    emit(out, qhal::rank_one(read_signal(L, xi), read_signal(L, phi)));
  });
}

int qhal_operator_random(int L, int rank, uint64_t seed, qhal_operator** out) {
  return guarded([&] {
    const qhal::Dimension dim(L);
    qhal::Rng rng(seed);
    emit(out, rank <= 0 ? qhal::random_operator(dim, rng) : qhal::random_rank_operator(dim, rank, rng));
  });
}

int qhal_operator_random_underspread(int L, int radius, uint64_t seed, qhal_operator** out) {
  return guarded([&] {
    qhal::Rng rng(seed);
    emit(out, qhal::random_underspread_operator(qhal::Dimension(L), radius, rng));
  });
}

int qhal_operator_gaussian_spreading(int L, qhal_operator** out) {
  return guarded([&] { emit(out, qhal::gaussian_spreading_operator(qhal::Dimension(L))); });
}

int qhal_operator_load(const char* path, qhal_operator** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(path);
    emit(out, qhal::operator_from_text(qhal::read_text_file(path)));
  });
}

int qhal_operator_save(const qhal_operator* op, const char* path) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(op);
    QHAL_REQUIRE_PTR(path);
    qhal::write_text_file(path, qhal::operator_to_text(op->value));
  });
}

int qhal_operator_L(const qhal_operator* op) { return op ? op->value.L() : 0; }

int qhal_operator_data(const qhal_operator* op, double* out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(op);
    QHAL_REQUIRE_PTR(out);
    const int L = op->value.L();
    for (int t = 0; t < L; ++t)
      for (int u = 0; u < L; ++u) {
        out[2 * (t * L + u)] = op->value(t, u).real();
        out[2 * (t * L + u) + 1] = op->value(t, u).imag();
      }
  });
}

int qhal_operator_tf_shift(int L, int m, int n, qhal_operator** out) {
  return guarded([&] { emit(out, qhal::tf_shift({m, n}, qhal::Dimension(L))); });
}

int qhal_operator_translate(const qhal_operator* op, int m, int n, qhal_operator** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(op);
    emit(out, qhal::translate(op->value, {m, n}));
  });
}

int qhal_operator_parity_check(const qhal_operator* op, qhal_operator** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(op);
    emit(out, qhal::parity_check(op->value));
  });
}

int qhal_operator_adjoint(const qhal_operator* op, qhal_operator** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(op);
    emit(out, op->value.adjoint());
  });
}

int qhal_operator_axpby(double are, double aim, const qhal_operator* x, double bre, double bim,
                        const qhal_operator* y, qhal_operator** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(x);
    QHAL_REQUIRE_PTR(y);
    emit(out, qhal::cd(are, aim) * x->value + qhal::cd(bre, bim) * y->value);
  });
}

int qhal_operator_hs_inner(const qhal_operator* a, const qhal_operator* b, double* re, double* im) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(a);
    QHAL_REQUIRE_PTR(b);
    const qhal::cd v = qhal::hs_inner(a->value, b->value);
    if (re) *re = v.real();
    if (im) *im = v.imag();
  });
}

int qhal_operator_schatten_norm(const qhal_operator* op, double p, double* out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(op);
    QHAL_REQUIRE_PTR(out);
    *out = qhal::schatten_norm(op->value, p);
  });
}

int qhal_operator_fourier_wigner(const qhal_operator* op, double* out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(op);
    QHAL_REQUIRE_PTR(out);
    const qhal::PhaseFunction F = qhal::fourier_wigner(op->value);
    const int L = F.L();
    for (int m = 0; m < L; ++m)
      for (int n = 0; n < L; ++n) {
        out[2 * (m * L + n)] = F.values()(m, n).real();
        out[2 * (m * L + n) + 1] = F.values()(m, n).imag();
      }
  });
}

void qhal_operator_free(qhal_operator* op) { delete op; }

/* ---- sequences ---- */

int qhal_sequence_create(const qhal_lattice* lattice, const double* values, qhal_sequence** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(lattice);
    qhal::LatticeSequence c(lattice->value);
    if (values)
      for (int i = 0; i < c.size(); ++i) c.values()(i) = {values[2 * i], values[2 * i + 1]};
    emit(out, std::move(c));
  });
}

int qhal_sequence_delta(const qhal_lattice* lattice, int m, int n, qhal_sequence** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(lattice);
    emit(out, qhal::LatticeSequence::delta(lattice->value, {m, n}));
  });
}

int qhal_sequence_constant(const qhal_lattice* lattice, double re, double im, qhal_sequence** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(lattice);
    emit(out, qhal::LatticeSequence::constant(lattice->value, {re, im}));
  });
}

int qhal_sequence_random(const qhal_lattice* lattice, uint64_t seed, qhal_sequence** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(lattice);
    qhal::Rng rng(seed);
    emit(out, qhal::random_sequence(lattice->value, rng));
  });
}

int qhal_sequence_load(const char* path, qhal_sequence** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(path);
    emit(out, qhal::sequence_from_text(qhal::read_text_file(path)));
  });
}

int qhal_sequence_save(const qhal_sequence* seq, const char* path) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(seq);
    QHAL_REQUIRE_PTR(path);
    qhal::write_text_file(path, qhal::sequence_to_text(seq->value));
  });
}

size_t qhal_sequence_size(const qhal_sequence* seq) { return seq ? static_cast<size_t>(seq->value.size()) : 0; }

int qhal_sequence_values(const qhal_sequence* seq, double* out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(seq);
    QHAL_REQUIRE_PTR(out);
    write_complex(seq->value.values().data(), static_cast<std::size_t>(seq->value.size()), out);
  });
}

int qhal_sequence_lattice(const qhal_sequence* seq, qhal_lattice** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(seq);
    emit(out, seq->value.lattice());
  });
}

void qhal_sequence_free(qhal_sequence* seq) { delete seq; }

/* ---- convolutions ---- */

int qhal_seq_op_conv(const qhal_sequence* c, const qhal_operator* S, qhal_operator** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(c);
    QHAL_REQUIRE_PTR(S);
    emit(out, qhal::seq_op_conv(c->value, S->value));
  });
}

int qhal_op_op_conv(const qhal_operator* S, const qhal_operator* T, const qhal_lattice* lattice,
                    qhal_sequence** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(S);
    QHAL_REQUIRE_PTR(T);
    QHAL_REQUIRE_PTR(lattice);
    emit(out, qhal::op_op_conv(S->value, T->value, lattice->value));
  });
}

int qhal_gabor_multiplier(const qhal_sequence* mask, const double* phi, const double* xi, qhal_operator** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(mask);
    const int L = mask->value.lattice().L();
    emit(out, qhal::gabor_multiplier(mask->value, read_signal(L, phi), read_signal(L, xi)));
  });
}

/* ---- analysis ---- */

int qhal_riesz_run(const qhal_operator* S, const qhal_lattice* lattice, double zero_tol, qhal_riesz** out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(S);
    QHAL_REQUIRE_PTR(lattice);
    emit(out, qhal::riesz_report(S->value, lattice->value, analysis_options(zero_tol)));
  });
}

int qhal_riesz_bounds(const qhal_riesz* report, double* lower, double* upper) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(report);
    if (lower) *lower = report->value.lower;
    if (upper) *upper = report->value.upper;
  });
}

int qhal_riesz_residuals(const qhal_riesz* report, double* max_imag_residue, double* spectral_mismatch) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(report);
    if (max_imag_residue) *max_imag_residue = report->value.max_imag_residue;
    if (spectral_mismatch) *spectral_mismatch = report->value.spectral_mismatch;
  });
}

size_t qhal_riesz_zero_count(const qhal_riesz* report) { return report ? report->value.zero_cosets.size() : 0; }

int qhal_riesz_zero_coset(const qhal_riesz* report, size_t index, int* m, int* n) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(report);
    require(index < report->value.zero_cosets.size(), "zero coset index out of range");
    if (m) *m = report->value.zero_cosets[index].m;
    if (n) *n = report->value.zero_cosets[index].n;
  });
}

size_t qhal_riesz_eigenvalue_count(const qhal_riesz* report) {
  return report ? report->value.gram_eigenvalues.size() : 0;
}

int qhal_riesz_eigenvalues(const qhal_riesz* report, double* out) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(report);
    QHAL_REQUIRE_PTR(out);
    std::copy(report->value.gram_eigenvalues.begin(), report->value.gram_eigenvalues.end(), out);
  });
}

void qhal_riesz_free(qhal_riesz* report) { delete report; }

int qhal_best_approximation(const qhal_operator* T, const qhal_operator* S, const qhal_lattice* lattice,
                            double zero_tol, qhal_sequence** mask, qhal_operator** approximant,
                            double* residual_hs, double* orthogonality_defect, double* formula_deviation) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(T);
    QHAL_REQUIRE_PTR(S);
    QHAL_REQUIRE_PTR(lattice);
    qhal::ApproxReport r = qhal::best_approximation(T->value, S->value, lattice->value, analysis_options(zero_tol));
    if (residual_hs) *residual_hs = r.residual_hs;
    if (orthogonality_defect) *orthogonality_defect = r.orthogonality_defect;
    if (formula_deviation) *formula_deviation = r.formula_deviation;
    if (mask) emit(mask, std::move(r.mask));
    if (approximant) emit(approximant, std::move(r.approximant));
  });
}

int qhal_recover_mask(const qhal_operator* G, const qhal_operator* S, const qhal_lattice* lattice, double zero_tol,
                      qhal_sequence** mask, double* residual_hs) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(G);
    QHAL_REQUIRE_PTR(S);
    QHAL_REQUIRE_PTR(lattice);
    qhal::MaskRecovery r = qhal::recover_mask(G->value, S->value, lattice->value, analysis_options(zero_tol));
    if (residual_hs) *residual_hs = r.residual_hs;
    if (mask) emit(mask, std::move(r.mask));
  });
}

int qhal_tauberian(const qhal_operator* S, const qhal_lattice* lattice, double zero_tol, int* rank, int* kernel_dim,
                   int* zero_count, int* consistent) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(S);
    QHAL_REQUIRE_PTR(lattice);
    const qhal::TauberianReport r = qhal::tauberian_diagnostics(S->value, lattice->value, analysis_options(zero_tol));
    if (rank) *rank = r.rank;
    if (kernel_dim) *kernel_dim = r.kernel_dim;
    if (zero_count) *zero_count = static_cast<int>(r.zero_cosets.size());
    if (consistent) *consistent = r.consistent ? 1 : 0;
  });
}

int qhal_nonassociativity_witness(const qhal_operator* S, const qhal_lattice* lattice, const qhal_operator* probe,
                                  double zero_tol, qhal_operator** T, double* deviation, double* t_norm) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(S);
    QHAL_REQUIRE_PTR(lattice);
    QHAL_REQUIRE_PTR(probe);
    qhal::NonAssociativityWitness w =
        qhal::nonassociativity_witness(S->value, lattice->value, probe->value, analysis_options(zero_tol));
    if (deviation) *deviation = w.deviation;
    if (t_norm) *t_norm = w.t_norm;
    if (T) emit(T, std::move(w.T));
  });
}

int qhal_underspread_divide(const qhal_operator* S, const qhal_operator* T, const qhal_lattice* lattice,
                            const int* domain, size_t count, qhal_operator** A, double* relative_error) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(S);
    QHAL_REQUIRE_PTR(T);
    QHAL_REQUIRE_PTR(lattice);
    qhal::UnderspreadResult r =
        qhal::underspread_divide(S->value, T->value, lattice->value, read_points(domain, count));
    if (relative_error) *relative_error = r.relative_error;
    if (A) emit(A, std::move(r.A));
  });
}

/* ---- suite ---- */

int qhal_suite_run(const int* cases, size_t count, uint64_t seed, qhal_suite** out) {
  return guarded([&] {
    std::vector<qhal::SuiteCase> list;
    if (count == 0) {
      list = qhal::standard_suite_cases();
    } else {
      QHAL_REQUIRE_PTR(cases);
      for (size_t i = 0; i < count; ++i) list.push_back({cases[3 * i], cases[3 * i + 1], cases[3 * i + 2]});
    }
    QHAL_REQUIRE_PTR(out);
    *out = new qhal_suite{qhal::run_suite(list, seed)};
  });
}

size_t qhal_suite_row_count(const qhal_suite* suite) { return suite ? suite->rows.size() : 0; }

int qhal_suite_row(const qhal_suite* suite, size_t index, const char** case_label, const char** check,
                   double* deviation, double* tolerance, int* passed) {
  return guarded([&] {
    QHAL_REQUIRE_PTR(suite);
    require(index < suite->rows.size(), "suite row index out of range");
    const qhal::SuiteRow& row = suite->rows[index];
    if (case_label) *case_label = row.case_label.c_str();
    if (check) *check = row.check.c_str();
    if (deviation) *deviation = row.deviation;
    if (tolerance) *tolerance = row.tolerance;
    if (passed) *passed = row.passed ? 1 : 0;
  });
}

void qhal_suite_free(qhal_suite* suite) { delete suite; }

}  // extern "C"
