/*
 * C interface to the LMG spectral library.
 *
 * Every function returns an lmg_status; on failure a message is available
 * from lmg_last_error() on the calling thread. Spins are passed as the
 * integer 2J. Opaque handles are created by *_new / constructor-style calls
 * and released with the matching *_free.
 */
#ifndef LMG_LMG_H
#define LMG_LMG_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LMG_BUILDING_LIBRARY)
#    define LMG_API __declspec(dllexport)
#  else
#    define LMG_API __declspec(dllimport)
#  endif
#else
#  define LMG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lmg_status {
  LMG_OK = 0,
  LMG_ERR_INVALID_ARGUMENT = 1,
  LMG_ERR_NOT_INTEGER_SPIN = 2,
  LMG_ERR_OVERFLOW_RISK = 3,
  LMG_ERR_DEGENERATE_ANISOTROPY = 4,
  LMG_ERR_DIMENSION_MISMATCH = 5,
  LMG_ERR_DIMENSION_TOO_LARGE = 6,
  LMG_ERR_NOT_SYMMETRIC = 7,
  LMG_ERR_SIGN_VIOLATION = 8,
  LMG_ERR_EMPTY_SPECTRUM = 9,
  LMG_ERR_METHOD_UNAVAILABLE = 10,
  LMG_ERR_NULL_POINTER = 11,
  LMG_ERR_BUFFER_TOO_SMALL = 12,
  LMG_ERR_INTERNAL = 13
} lmg_status;

typedef enum lmg_verdict {
  LMG_SUSY_PATTERN = 0,
  LMG_SUSY_BROKEN = 1
} lmg_verdict;

typedef enum lmg_gap_method {
  LMG_GAP_SUPERCHARGE = 0,
  LMG_GAP_TRIDIAG_ODD = 1,
  LMG_GAP_DENSE = 2
} lmg_gap_method;

typedef enum lmg_frame {
  LMG_FRAME_FACTORIZED = 0,
  LMG_FRAME_ROTATED = 1
} lmg_frame;

typedef enum lmg_hamiltonian_kind {
  LMG_H_SUSY_ROTATED = 0,
  LMG_H_FACTORIZED = 1,
  LMG_H_NONHERMITIAN = 2
} lmg_hamiltonian_kind;

LMG_API const char* lmg_version(void);
LMG_API const char* lmg_status_string(lmg_status status);
LMG_API const char* lmg_last_error(void);

/* chi1 = omega0 cosh(gamma), chi2 = omega0 sinh(gamma). */
LMG_API lmg_status lmg_params_from_chi(double chi1, double chi2, double* omega0,
                                       double* gamma);

LMG_API lmg_status lmg_legendre_p(int n, double x, double* out);

/* Dense Hamiltonian, row-major, ascending m. `capacity` is in doubles and must
 * be at least (2J+1)^2. */
LMG_API lmg_status lmg_hamiltonian_dense(lmg_hamiltonian_kind kind, int two_j,
                                         double gamma, double* out, size_t capacity);
LMG_API lmg_status lmg_hamiltonian_general(int two_j, double xi, double chi1,
                                           double chi2, double lambda, double* out,
                                           size_t capacity);

/* ---- spectra ---------------------------------------------------------- */

typedef struct lmg_spectrum lmg_spectrum;

/* Rotated supersymmetric Hamiltonian, with pairing classification. */
LMG_API lmg_status lmg_spectrum_susy(int two_j, double gamma, double pair_tol,
                                     lmg_spectrum** out);
/* General LMG Hamiltonian; no classification is attached. */
LMG_API lmg_status lmg_spectrum_general(int two_j, double xi, double chi1, double chi2,
                                        double lambda, lmg_spectrum** out);
LMG_API size_t lmg_spectrum_size(const lmg_spectrum* s);
LMG_API lmg_status lmg_spectrum_eigenvalues(const lmg_spectrum* s, double* out, size_t n);
/* 0 = zero mode, k >= 1 = k-th doublet, -1 = unpaired or unclassified. */
LMG_API lmg_status lmg_spectrum_pair_ids(const lmg_spectrum* s, int* out, size_t n);
LMG_API int lmg_spectrum_is_classified(const lmg_spectrum* s);
LMG_API lmg_status lmg_spectrum_verdict(const lmg_spectrum* s, lmg_verdict* out);
LMG_API void lmg_spectrum_free(lmg_spectrum* s);

/* ---- gap -------------------------------------------------------------- */

typedef struct lmg_gap_result {
  double gap;
  double bound; /* cosh 2 gamma */
  int satisfied;
} lmg_gap_result;

LMG_API lmg_status lmg_spectral_gap(int two_j, double gamma, lmg_gap_method method,
                                    lmg_gap_result* out);
LMG_API size_t lmg_gap_workspace_bytes(int two_j, lmg_gap_method method);

/* ---- supersymmetry checks --------------------------------------------- */

typedef struct lmg_susy_report {
  int integer_spin;
  /* superalgebra residuals (max norm); only when integer_spin */
  int algebra_checked;
  double q1_squared;
  double q2_squared;
  double anticommutator;
  double commutator;
  double h_norm;
  int algebra_pass; /* all residuals <= 1e-10 max(1, ||H||) */
  /* det factorization of the non-Hermitian form, J <= 10 */
  int charpoly_checked;
  double charpoly_residual; /* worst relative coefficient error */
  int charpoly_pass;        /* <= 1e-8 */
  /* H+ and H- related by index reversal */
  int permutation_checked;
  int permutation_equivalent;
  /* spectrum classification of the rotated Hamiltonian */
  lmg_verdict verdict;
  int has_zero_mode;
  int all_levels_paired;
  double min_eigenvalue;
} lmg_susy_report;

LMG_API lmg_status lmg_susy_check(int two_j, double gamma, double pair_tol,
                                  lmg_susy_report* out);

/* ---- ground state ----------------------------------------------------- */

typedef struct lmg_ground_state lmg_ground_state;

typedef struct lmg_ground_state_summary {
  double norm_direct;
  double norm_legendre;
  double log_norm_legendre;
  double energy_residual;
  double h_norm;
} lmg_ground_state_summary;

LMG_API lmg_status lmg_ground_state_new(int two_j, double gamma, lmg_frame frame,
                                        lmg_ground_state** out);
LMG_API size_t lmg_ground_state_size(const lmg_ground_state* g);
LMG_API lmg_status lmg_ground_state_amplitudes(const lmg_ground_state* g, double* out,
                                               size_t n);
LMG_API lmg_status lmg_ground_state_summary_get(const lmg_ground_state* g,
                                                lmg_ground_state_summary* out);
LMG_API void lmg_ground_state_free(lmg_ground_state* g);

#ifdef __cplusplus
}
#endif

#endif /* LMG_LMG_H */
