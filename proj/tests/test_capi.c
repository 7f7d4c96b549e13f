/* Exercises the public C interface from a C translation unit. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "lmg/lmg.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__,     \
              __LINE__, #cond);                                        \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static void test_basics(void) {
  double omega0 = 0, gamma = 0, p = 0;
  EXPECT(strlen(lmg_version()) > 0);
  EXPECT(strcmp(lmg_status_string(LMG_OK), "ok") == 0);
  EXPECT(strcmp(lmg_status_string(LMG_ERR_NOT_INTEGER_SPIN), "NotIntegerSpin") == 0);

  EXPECT(lmg_params_from_chi(2.0, 1.0, &omega0, &gamma) == LMG_OK);
  EXPECT(fabs(omega0 - sqrt(3.0)) < 1e-15);
  EXPECT(fabs(gamma - atanh(0.5)) < 1e-15);
  EXPECT(lmg_params_from_chi(1.0, 1.0, &omega0, &gamma) == LMG_ERR_DEGENERATE_ANISOTROPY);
  EXPECT(strlen(lmg_last_error()) > 0);
  EXPECT(lmg_params_from_chi(1.0, 0.0, NULL, &gamma) == LMG_ERR_NULL_POINTER);

  EXPECT(lmg_legendre_p(2, 1.5, &p) == LMG_OK);
  EXPECT(p == 2.875);
}

static void test_matrices(void) {
  double buf[25];
  const double g = 0.4, C = cosh(2 * g), S = sinh(2 * g);
  EXPECT(lmg_hamiltonian_dense(LMG_H_NONHERMITIAN, 4, g, buf, 25) == LMG_OK);
  EXPECT(fabs(buf[0] - 4 * C) < 1e-14);
  EXPECT(fabs(buf[1] - S) < 1e-14);
  EXPECT(fabs(buf[5] + 2 * S) < 1e-14);
  EXPECT(fabs(buf[11] + sqrt(6.0) / 2 * S) < 1e-14);
  EXPECT(lmg_hamiltonian_dense(LMG_H_SUSY_ROTATED, 4, g, buf, 24) == LMG_ERR_BUFFER_TOO_SMALL);
  EXPECT(lmg_hamiltonian_dense(LMG_H_FACTORIZED, 4, 0.0, buf, 25) == LMG_OK);
  EXPECT(buf[0] == 4.0 && buf[6] == 1.0 && buf[12] == 0.0);
  EXPECT(lmg_hamiltonian_general(2, 1.0, 1.0, 0.0, 0.5, buf, 9) == LMG_OK);
  EXPECT(buf[0] == 1.0 && buf[4] == 0.0 && buf[8] == 1.0);
  EXPECT(lmg_hamiltonian_general(2, 1.0, 1.0, 2.0, 0.5, buf, 9) == LMG_ERR_DEGENERATE_ANISOTROPY);
  EXPECT(lmg_hamiltonian_dense(LMG_H_SUSY_ROTATED, -1, g, buf, 25) == LMG_ERR_INVALID_ARGUMENT);
}

static void test_spectrum(void) {
  lmg_spectrum* s = NULL;
  double eig[5];
  int ids[5];
  lmg_verdict v;
  const double ref[5] = {0, 1, 1, 4, 4};
  const int ref_ids[5] = {0, 1, 1, 2, 2};
  size_t k;

  EXPECT(lmg_spectrum_susy(4, 0.0, 1e-8, &s) == LMG_OK);
  EXPECT(lmg_spectrum_size(s) == 5);
  EXPECT(lmg_spectrum_eigenvalues(s, eig, 5) == LMG_OK);
  EXPECT(lmg_spectrum_pair_ids(s, ids, 5) == LMG_OK);
  for (k = 0; k < 5; ++k) {
    EXPECT(fabs(eig[k] - ref[k]) < 1e-12);
    EXPECT(ids[k] == ref_ids[k]);
  }
  EXPECT(lmg_spectrum_is_classified(s) == 1);
  EXPECT(lmg_spectrum_verdict(s, &v) == LMG_OK && v == LMG_SUSY_PATTERN);
  EXPECT(lmg_spectrum_eigenvalues(s, eig, 4) == LMG_ERR_BUFFER_TOO_SMALL);
  lmg_spectrum_free(s);

  EXPECT(lmg_spectrum_susy(3, 0.5, 1e-8, &s) == LMG_OK);
  EXPECT(lmg_spectrum_verdict(s, &v) == LMG_OK && v == LMG_SUSY_BROKEN);
  lmg_spectrum_free(s);

  EXPECT(lmg_spectrum_general(4, 1.0, 2.0, 1.0, 0.7, &s) == LMG_OK);
  EXPECT(lmg_spectrum_size(s) == 5);
  EXPECT(lmg_spectrum_is_classified(s) == 0);
  EXPECT(lmg_spectrum_verdict(s, &v) == LMG_ERR_INVALID_ARGUMENT);
  lmg_spectrum_free(s);

  /* Above the dense limit integer spins use the parity blocks. */
  EXPECT(lmg_spectrum_susy(2 * 300, 0.3, 1e-8, &s) == LMG_OK);
  EXPECT(lmg_spectrum_size(s) == 601);
  EXPECT(lmg_spectrum_verdict(s, &v) == LMG_OK && v == LMG_SUSY_PATTERN);
  lmg_spectrum_free(s);
  s = NULL;
  EXPECT(lmg_spectrum_susy(601, 0.3, 1e-8, &s) == LMG_ERR_DIMENSION_TOO_LARGE);
  EXPECT(s == NULL);
  lmg_spectrum_free(NULL);
  EXPECT(lmg_spectrum_size(NULL) == 0);
}

static void test_gap(void) {
  lmg_gap_result r;
  const double ref = 0.5 * (5 * cosh(2.0) - sqrt(sinh(2.0) * sinh(2.0) + 9));
  EXPECT(lmg_spectral_gap(4, 1.0, LMG_GAP_SUPERCHARGE, &r) == LMG_OK);
  EXPECT(fabs(r.gap - ref) < 1e-12 * ref);
  EXPECT(r.satisfied == 1);
  EXPECT(lmg_spectral_gap(2000, 0.0, LMG_GAP_SUPERCHARGE, &r) == LMG_OK);
  EXPECT(fabs(r.gap - 1.0) < 1e-12);
  EXPECT(lmg_spectral_gap(2000, 0.0, LMG_GAP_TRIDIAG_ODD, &r) == LMG_OK);
  EXPECT(fabs(r.gap - 1.0) < 1e-9);
  EXPECT(lmg_spectral_gap(3, 0.2, LMG_GAP_SUPERCHARGE, &r) == LMG_ERR_NOT_INTEGER_SPIN);
  EXPECT(lmg_spectral_gap(1000, 0.2, LMG_GAP_DENSE, &r) == LMG_ERR_METHOD_UNAVAILABLE);
  EXPECT(lmg_spectral_gap(4, 0.2, (lmg_gap_method)9, &r) == LMG_ERR_METHOD_UNAVAILABLE);
  EXPECT(lmg_spectral_gap(4, 0.2, LMG_GAP_SUPERCHARGE, NULL) == LMG_ERR_NULL_POINTER);
  EXPECT(lmg_gap_workspace_bytes(2000000, LMG_GAP_SUPERCHARGE) > 0);
}

static void test_susy_check(void) {
  lmg_susy_report rep;
  EXPECT(lmg_susy_check(4, 0.7, 1e-8, &rep) == LMG_OK);
  EXPECT(rep.integer_spin && rep.algebra_pass && rep.charpoly_pass);
  EXPECT(rep.permutation_equivalent);
  EXPECT(rep.verdict == LMG_SUSY_PATTERN);
  EXPECT(rep.has_zero_mode && rep.all_levels_paired);

  EXPECT(lmg_susy_check(3, 0.5, 1e-8, &rep) == LMG_OK);
  EXPECT(!rep.integer_spin && !rep.algebra_checked);
  EXPECT(rep.verdict == LMG_SUSY_BROKEN);
  EXPECT(rep.min_eigenvalue > 1e-6);
}

static void test_ground_state(void) {
  lmg_ground_state* gs = NULL;
  lmg_ground_state_summary sum;
  double amp[21];
  EXPECT(lmg_ground_state_new(20, 1.0, LMG_FRAME_FACTORIZED, &gs) == LMG_OK);
  EXPECT(lmg_ground_state_size(gs) == 21);
  EXPECT(lmg_ground_state_amplitudes(gs, amp, 21) == LMG_OK);
  EXPECT(fabs(amp[0] - amp[20]) < 1e-12);
  EXPECT(lmg_ground_state_summary_get(gs, &sum) == LMG_OK);
  EXPECT(fabs(sum.norm_direct - 1.0) < 1e-10);
  EXPECT(sum.energy_residual <= 1e-9 * sum.h_norm);
  lmg_ground_state_free(gs);

  gs = NULL;
  EXPECT(lmg_ground_state_new(5, 1.0, LMG_FRAME_ROTATED, &gs) == LMG_ERR_NOT_INTEGER_SPIN);
  EXPECT(gs == NULL);
  EXPECT(lmg_ground_state_new(4, 1.0, (lmg_frame)7, &gs) == LMG_ERR_INVALID_ARGUMENT);
}

int main(void) {
  test_basics();
  test_matrices();
  test_spectrum();
  test_gap();
  test_susy_check();
  test_ground_state();
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return EXIT_FAILURE;
  }
  puts("C API: all expectations met");
  return EXIT_SUCCESS;
}
