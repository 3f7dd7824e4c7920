/* C interface to libqhal: quantum harmonic analysis on the finite phase
 * space Z_L x Z_L.
 *
 * Every function returning int returns a qhal_status. On failure the message
 * of the last error on the calling thread is available from qhal_last_error().
 * Complex arrays are interleaved (re, im) doubles; operator data is row-major.
 * Handles are owned by the caller and released with the matching _free.
 */
#ifndef QHAL_QHAL_H_
#define QHAL_QHAL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define QHAL_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define QHAL_API __attribute__((visibility("default")))
#else
#  define QHAL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qhal_status {
  QHAL_OK = 0,
  QHAL_INVALID_ARGUMENT = 1,
  QHAL_NON_DIVISOR = 2,
  QHAL_NOT_SEPARABLE = 3,
  QHAL_PARITY_ERROR = 4,
  QHAL_EVEN_DIMENSION = 5,
  QHAL_BAD_EXPONENT = 6,
  QHAL_LATTICE_MISMATCH = 7,
  QHAL_DIMENSION_MISMATCH = 8,
  QHAL_NOT_RIESZ = 9,
  QHAL_FULL_LATTICE = 10,
  QHAL_SUPPORT_VIOLATION = 11,
  QHAL_DIVISION_BY_ZERO = 12,
  QHAL_PARSE_ERROR = 13,
  QHAL_IO_ERROR = 14,
  QHAL_INTERNAL_ERROR = 99
} qhal_status;

typedef struct qhal_lattice qhal_lattice;
typedef struct qhal_operator qhal_operator;
typedef struct qhal_sequence qhal_sequence;
typedef struct qhal_riesz qhal_riesz;
typedef struct qhal_suite qhal_suite;

QHAL_API const char* qhal_last_error(void);
QHAL_API const char* qhal_status_name(int status);
/* Strings returned through char** out-parameters are released with this. */
QHAL_API void qhal_string_free(char* s);

/* ---- lattices ---- */
QHAL_API int qhal_lattice_separable(int L, int a, int b, qhal_lattice** out);
/* gens holds count (m, n) pairs. */
QHAL_API int qhal_lattice_general(int L, const int* gens, size_t count, qhal_lattice** out);
QHAL_API int qhal_lattice_parse(const char* text, qhal_lattice** out);
QHAL_API int qhal_lattice_to_text(const qhal_lattice* lattice, char** out);
QHAL_API int qhal_lattice_adjoint(const qhal_lattice* lattice, qhal_lattice** out);
QHAL_API int qhal_lattice_L(const qhal_lattice* lattice);
QHAL_API size_t qhal_lattice_size(const qhal_lattice* lattice);
QHAL_API int qhal_lattice_point(const qhal_lattice* lattice, size_t index, int* m, int* n);
QHAL_API size_t qhal_lattice_generator_count(const qhal_lattice* lattice);
QHAL_API int qhal_lattice_generator(const qhal_lattice* lattice, size_t index, int* m, int* n);
/* Writes a, b when the lattice is aZ x bZ; QHAL_NOT_SEPARABLE otherwise. */
QHAL_API int qhal_lattice_separable_steps(const qhal_lattice* lattice, int* a, int* b);
QHAL_API void qhal_lattice_free(qhal_lattice* lattice);

/* ---- signals ---- */
/* Named window (gauss, delta, ones, box<k>, random) into out[2L]. */
QHAL_API int qhal_window(int L, const char* name, uint64_t seed, double* out);
/* Reads a QHAL-SIG v1 file; *L_out receives its length. out may be NULL to query L. */
QHAL_API int qhal_signal_load(const char* path, double* out, int capacity, int* L_out);
QHAL_API int qhal_signal_save(const char* path, int L, const double* data);

/* ---- operators ---- */
QHAL_API int qhal_operator_from_data(int L, const double* data, qhal_operator** out);
QHAL_API int qhal_operator_zero(int L, qhal_operator** out);
QHAL_API int qhal_operator_identity(int L, qhal_operator** out);
QHAL_API int qhal_operator_rank_one(int L, const double* xi, const double* phi, qhal_operator** out);
/* rank <= 0 gives a full random matrix. */
QHAL_API int qhal_operator_random(int L, int rank, uint64_t seed, qhal_operator** out);
QHAL_API int qhal_operator_random_underspread(int L, int radius, uint64_t seed, qhal_operator** out);
QHAL_API int qhal_operator_gaussian_spreading(int L, qhal_operator** out);
QHAL_API int qhal_operator_load(const char* path, qhal_operator** out);
QHAL_API int qhal_operator_save(const qhal_operator* op, const char* path);
QHAL_API int qhal_operator_L(const qhal_operator* op);
QHAL_API int qhal_operator_data(const qhal_operator* op, double* out);
QHAL_API int qhal_operator_tf_shift(int L, int m, int n, qhal_operator** out);
QHAL_API int qhal_operator_translate(const qhal_operator* op, int m, int n, qhal_operator** out);
QHAL_API int qhal_operator_parity_check(const qhal_operator* op, qhal_operator** out);
QHAL_API int qhal_operator_adjoint(const qhal_operator* op, qhal_operator** out);
/* out = a*x + b*y with complex a = (are, aim), b = (bre, bim). */
QHAL_API int qhal_operator_axpby(double are, double aim, const qhal_operator* x, double bre, double bim,
                                 const qhal_operator* y, qhal_operator** out);
QHAL_API int qhal_operator_hs_inner(const qhal_operator* a, const qhal_operator* b, double* re, double* im);
QHAL_API int qhal_operator_schatten_norm(const qhal_operator* op, double p, double* out);
/* F_W(S) into out[2 L^2], indexed (m, n) row-major. Odd L only. */
QHAL_API int qhal_operator_fourier_wigner(const qhal_operator* op, double* out);
QHAL_API void qhal_operator_free(qhal_operator* op);

/* ---- lattice sequences ---- */
/* values may be NULL for the zero sequence. */
QHAL_API int qhal_sequence_create(const qhal_lattice* lattice, const double* values, qhal_sequence** out);
QHAL_API int qhal_sequence_delta(const qhal_lattice* lattice, int m, int n, qhal_sequence** out);
QHAL_API int qhal_sequence_constant(const qhal_lattice* lattice, double re, double im, qhal_sequence** out);
QHAL_API int qhal_sequence_random(const qhal_lattice* lattice, uint64_t seed, qhal_sequence** out);
QHAL_API int qhal_sequence_load(const char* path, qhal_sequence** out);
QHAL_API int qhal_sequence_save(const qhal_sequence* seq, const char* path);
QHAL_API size_t qhal_sequence_size(const qhal_sequence* seq);
QHAL_API int qhal_sequence_values(const qhal_sequence* seq, double* out);
QHAL_API int qhal_sequence_lattice(const qhal_sequence* seq, qhal_lattice** out);
QHAL_API void qhal_sequence_free(qhal_sequence* seq);

/* ---- convolutions ---- */
QHAL_API int qhal_seq_op_conv(const qhal_sequence* c, const qhal_operator* S, qhal_operator** out);
QHAL_API int qhal_op_op_conv(const qhal_operator* S, const qhal_operator* T, const qhal_lattice* lattice,
                             qhal_sequence** out);
QHAL_API int qhal_gabor_multiplier(const qhal_sequence* mask, const double* phi, const double* xi,
                                   qhal_operator** out);

/* ---- analysis ---- */
QHAL_API int qhal_riesz_run(const qhal_operator* S, const qhal_lattice* lattice, double zero_tol, qhal_riesz** out);
QHAL_API int qhal_riesz_bounds(const qhal_riesz* report, double* lower, double* upper);
QHAL_API int qhal_riesz_residuals(const qhal_riesz* report, double* max_imag_residue, double* spectral_mismatch);
QHAL_API size_t qhal_riesz_zero_count(const qhal_riesz* report);
QHAL_API int qhal_riesz_zero_coset(const qhal_riesz* report, size_t index, int* m, int* n);
QHAL_API size_t qhal_riesz_eigenvalue_count(const qhal_riesz* report);
/* Ascending. */
QHAL_API int qhal_riesz_eigenvalues(const qhal_riesz* report, double* out);
QHAL_API void qhal_riesz_free(qhal_riesz* report);

QHAL_API int qhal_best_approximation(const qhal_operator* T, const qhal_operator* S, const qhal_lattice* lattice,
                                     double zero_tol, qhal_sequence** mask, qhal_operator** approximant,
                                     double* residual_hs, double* orthogonality_defect, double* formula_deviation);
QHAL_API int qhal_recover_mask(const qhal_operator* G, const qhal_operator* S, const qhal_lattice* lattice,
                               double zero_tol, qhal_sequence** mask, double* residual_hs);
QHAL_API int qhal_tauberian(const qhal_operator* S, const qhal_lattice* lattice, double zero_tol, int* rank,
                            int* kernel_dim, int* zero_count, int* consistent);
QHAL_API int qhal_nonassociativity_witness(const qhal_operator* S, const qhal_lattice* lattice,
                                           const qhal_operator* probe, double zero_tol, qhal_operator** T,
                                           double* deviation, double* t_norm);
/* domain holds count (m, n) pairs. */
QHAL_API int qhal_underspread_divide(const qhal_operator* S, const qhal_operator* T, const qhal_lattice* lattice,
                                     const int* domain, size_t count, qhal_operator** A, double* relative_error);

/* ---- identity suite ---- */
/* cases holds count (L, a, b) triples; NULL with count 0 runs the standard cases. */
QHAL_API int qhal_suite_run(const int* cases, size_t count, uint64_t seed, qhal_suite** out);
QHAL_API size_t qhal_suite_row_count(const qhal_suite* suite);
/* Strings stay valid until qhal_suite_free. */
QHAL_API int qhal_suite_row(const qhal_suite* suite, size_t index, const char** case_label, const char** check,
                            double* deviation, double* tolerance, int* passed);
QHAL_API void qhal_suite_free(qhal_suite* suite);

#ifdef __cplusplus
}
#endif

#endif /* QHAL_QHAL_H_ */
