#include "lmg/lmg.h"

#include <algorithm>
#include <cmath>
#include <new>
#include <string>
#include <vector>

#include "lmg/eigensolve.hpp"
#include "lmg/error.hpp"
#include "lmg/groundstate.hpp"
#include "lmg/models.hpp"
#include "lmg/susy.hpp"

struct lmg_spectrum {
  std::vector<double> eigenvalues;
  std::vector<int> pair_ids;
  bool classified = false;
  lmg::SusyVerdict verdict = lmg::SusyVerdict::SusyBroken;
};

struct lmg_ground_state {
  lmg::GroundState gs;
};

namespace {

thread_local std::string g_last_error;

constexpr int kMaxBlockSpectrumJ = 5000;

lmg_status to_status(lmg::ErrorCode code) {
  using lmg::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return LMG_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotIntegerSpin: return LMG_ERR_NOT_INTEGER_SPIN;
    case ErrorCode::OverflowRisk: return LMG_ERR_OVERFLOW_RISK;
    case ErrorCode::DegenerateAnisotropy: return LMG_ERR_DEGENERATE_ANISOTROPY;
    case ErrorCode::DimensionMismatch: return LMG_ERR_DIMENSION_MISMATCH;
    case ErrorCode::DimensionTooLarge: return LMG_ERR_DIMENSION_TOO_LARGE;
    case ErrorCode::NotSymmetric: return LMG_ERR_NOT_SYMMETRIC;
    case ErrorCode::SignViolation: return LMG_ERR_SIGN_VIOLATION;
    case ErrorCode::EmptySpectrum: return LMG_ERR_EMPTY_SPECTRUM;
    case ErrorCode::MethodUnavailable: return LMG_ERR_METHOD_UNAVAILABLE;
  }
  return LMG_ERR_INTERNAL;
}

lmg_status fail(lmg_status st, std::string msg) {
  g_last_error = std::move(msg);
  return st;
}

template <class F>
lmg_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const lmg::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LMG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LMG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LMG_ERR_INTERNAL, "unknown error");
  }
}

lmg::SpinJ spin(int two_j) {
  if (two_j < 0) throw lmg::Error(lmg::ErrorCode::InvalidArgument, "2J must be >= 0");
  return lmg::SpinJ(two_j);
}

lmg_status copy_matrix(const lmg::RealMatrix& m, double* out, size_t capacity) {
  if (!out) return fail(LMG_ERR_NULL_POINTER, "output buffer is null");
  const auto data = m.data();
  if (capacity < data.size())
    return fail(LMG_ERR_BUFFER_TOO_SMALL,
                "need " + std::to_string(data.size()) + " doubles");
  for (size_t i = 0; i < data.size(); ++i) out[i] = data[i];
  return LMG_OK;
}

template <class T>
lmg_status copy_vector(const std::vector<T>& v, T* out, size_t n) {
  if (!out) return fail(LMG_ERR_NULL_POINTER, "output buffer is null");
  if (n < v.size())
    return fail(LMG_ERR_BUFFER_TOO_SMALL, "need " + std::to_string(v.size()) + " entries");
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return LMG_OK;
}

lmg::GapMethod to_method(lmg_gap_method m) {
  switch (m) {
    case LMG_GAP_SUPERCHARGE: return lmg::GapMethod::Supercharge;
    case LMG_GAP_TRIDIAG_ODD: return lmg::GapMethod::TridiagOdd;
    case LMG_GAP_DENSE: return lmg::GapMethod::DenseOracle;
  }
  throw lmg::Error(lmg::ErrorCode::MethodUnavailable, "unknown gap method");
}

// Dense Jacobi up to J = 200; above that, integer spins go through bisection
// on the two parity blocks.
std::vector<double> susy_levels(lmg::SpinJ j, double gamma) {
  if (j.two_j() <= 400) return lmg::eig_dense_symmetric(lmg::build_susy_rotated(j, gamma));
  if (!j.is_integer_spin() || j.two_j() > 2 * kMaxBlockSpectrumJ)
    throw lmg::Error(lmg::ErrorCode::DimensionTooLarge,
                     "spectra above J = 200 need integer J <= " +
                         std::to_string(kMaxBlockSpectrumJ));
  const auto blocks = lmg::parity_blocks_susy(j, gamma);
  auto eig = lmg::eig_symtridiag(blocks.even, lmg::EigRequest::all());
  const auto odd = lmg::eig_symtridiag(blocks.odd, lmg::EigRequest::all());
  eig.insert(eig.end(), odd.begin(), odd.end());
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace

extern "C" {

const char* lmg_version(void) { return "1.0.0"; }

const char* lmg_status_string(lmg_status status) {
  switch (status) {
    case LMG_OK: return "ok";
    case LMG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case LMG_ERR_NOT_INTEGER_SPIN: return "NotIntegerSpin";
    case LMG_ERR_OVERFLOW_RISK: return "OverflowRisk";
    case LMG_ERR_DEGENERATE_ANISOTROPY: return "DegenerateAnisotropy";
    case LMG_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case LMG_ERR_DIMENSION_TOO_LARGE: return "DimensionTooLarge";
    case LMG_ERR_NOT_SYMMETRIC: return "NotSymmetric";
    case LMG_ERR_SIGN_VIOLATION: return "SignViolation";
    case LMG_ERR_EMPTY_SPECTRUM: return "EmptySpectrum";
    case LMG_ERR_METHOD_UNAVAILABLE: return "MethodUnavailable";
    case LMG_ERR_NULL_POINTER: return "NullPointer";
    case LMG_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case LMG_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* lmg_last_error(void) { return g_last_error.c_str(); }

lmg_status lmg_params_from_chi(double chi1, double chi2, double* omega0, double* gamma) {
  return guarded([&] {
    if (!omega0 || !gamma) return fail(LMG_ERR_NULL_POINTER, "output pointer is null");
    const auto p = lmg::params_from_chi(chi1, chi2);
    *omega0 = p.omega0;
    *gamma = p.gamma;
    return LMG_OK;
  });
}

lmg_status lmg_legendre_p(int n, double x, double* out) {
  return guarded([&] {
    if (!out) return fail(LMG_ERR_NULL_POINTER, "output pointer is null");
    *out = lmg::legendre_p(n, x);
    return LMG_OK;
  });
}

lmg_status lmg_hamiltonian_dense(lmg_hamiltonian_kind kind, int two_j, double gamma,
                                 double* out, size_t capacity) {
  return guarded([&] {
    const auto j = spin(two_j);
    switch (kind) {
      case LMG_H_SUSY_ROTATED: return copy_matrix(lmg::build_susy_rotated(j, gamma), out, capacity);
      case LMG_H_FACTORIZED: return copy_matrix(lmg::build_factorized(j, gamma), out, capacity);
      case LMG_H_NONHERMITIAN: return copy_matrix(lmg::build_nonhermitian(j, gamma), out, capacity);
    }
    return fail(LMG_ERR_INVALID_ARGUMENT, "unknown Hamiltonian kind");
  });
}

lmg_status lmg_hamiltonian_general(int two_j, double xi, double chi1, double chi2,
                                   double lambda, double* out, size_t capacity) {
  return guarded([&] {
    const auto p = lmg::ModelParams::from_chi(xi, chi1, chi2, lambda);
    return copy_matrix(lmg::build_lmg_general(spin(two_j), p), out, capacity);
  });
}

lmg_status lmg_spectrum_susy(int two_j, double gamma, double pair_tol, lmg_spectrum** out) {
  return guarded([&] {
    if (!out) return fail(LMG_ERR_NULL_POINTER, "output handle is null");
    *out = nullptr;
    const auto j = spin(two_j);
    auto eig = susy_levels(j, gamma);
    auto rep = lmg::classify_spectrum(eig, j, pair_tol);
    auto* s = new lmg_spectrum;
    s->eigenvalues = std::move(rep.eigenvalues);
    s->pair_ids = std::move(rep.pair_id);
    s->classified = true;
    s->verdict = rep.verdict;
    *out = s;
    return LMG_OK;
  });
}

lmg_status lmg_spectrum_general(int two_j, double xi, double chi1, double chi2,
                                double lambda, lmg_spectrum** out) {
  return guarded([&] {
    if (!out) return fail(LMG_ERR_NULL_POINTER, "output handle is null");
    *out = nullptr;
    if (two_j > 400) return fail(LMG_ERR_DIMENSION_TOO_LARGE, "dense spectra limited to J <= 200");
    const auto p = lmg::ModelParams::from_chi(xi, chi1, chi2, lambda);
    auto eig = lmg::eig_dense_symmetric(lmg::build_lmg_general(spin(two_j), p));
    auto* s = new lmg_spectrum;
    s->pair_ids.assign(eig.size(), -1);
    s->eigenvalues = std::move(eig);
    *out = s;
    return LMG_OK;
  });
}

size_t lmg_spectrum_size(const lmg_spectrum* s) { return s ? s->eigenvalues.size() : 0; }

lmg_status lmg_spectrum_eigenvalues(const lmg_spectrum* s, double* out, size_t n) {
  if (!s) return fail(LMG_ERR_NULL_POINTER, "spectrum handle is null");
  return copy_vector(s->eigenvalues, out, n);
}

lmg_status lmg_spectrum_pair_ids(const lmg_spectrum* s, int* out, size_t n) {
  if (!s) return fail(LMG_ERR_NULL_POINTER, "spectrum handle is null");
  return copy_vector(s->pair_ids, out, n);
}

int lmg_spectrum_is_classified(const lmg_spectrum* s) { return s && s->classified ? 1 : 0; }

lmg_status lmg_spectrum_verdict(const lmg_spectrum* s, lmg_verdict* out) {
  if (!s || !out) return fail(LMG_ERR_NULL_POINTER, "null argument");
  if (!s->classified) return fail(LMG_ERR_INVALID_ARGUMENT, "spectrum was not classified");
  *out = s->verdict == lmg::SusyVerdict::SusyPattern ? LMG_SUSY_PATTERN : LMG_SUSY_BROKEN;
  return LMG_OK;
}

void lmg_spectrum_free(lmg_spectrum* s) { delete s; }

lmg_status lmg_spectral_gap(int two_j, double gamma, lmg_gap_method method,
                            lmg_gap_result* out) {
  return guarded([&] {
    if (!out) return fail(LMG_ERR_NULL_POINTER, "output pointer is null");
    const auto r = lmg::spectral_gap(spin(two_j), gamma, to_method(method));
    out->gap = r.gap;
    out->bound = r.bound;
    out->satisfied = r.satisfied ? 1 : 0;
    return LMG_OK;
  });
}

size_t lmg_gap_workspace_bytes(int two_j, lmg_gap_method method) {
  try {
    return lmg::gap_workspace_bytes(spin(two_j), to_method(method));
  } catch (...) {
    return 0;
  }
}

lmg_status lmg_susy_check(int two_j, double gamma, double pair_tol, lmg_susy_report* out) {
  return guarded([&] {
    if (!out) return fail(LMG_ERR_NULL_POINTER, "output pointer is null");
    const auto rep = lmg::run_susy_check(spin(two_j), gamma, pair_tol);
    *out = lmg_susy_report{};
    out->integer_spin = rep.integer_spin;
    out->algebra_checked = rep.algebra_checked;
    out->q1_squared = rep.algebra.q1_squared;
    out->q2_squared = rep.algebra.q2_squared;
    out->anticommutator = rep.algebra.anticommutator;
    out->commutator = rep.algebra.commutator;
    out->h_norm = rep.algebra.h_norm;
    out->algebra_pass = rep.algebra_checked && rep.algebra.pass(1e-10);
    out->charpoly_checked = rep.charpoly_checked;
    out->charpoly_residual = rep.charpoly_residual;
    out->charpoly_pass = rep.charpoly_checked && rep.charpoly_residual <= 1e-8;
    out->permutation_checked = rep.permutation_checked;
    out->permutation_equivalent = rep.permutation_equivalent;
    out->verdict = rep.spectrum.verdict == lmg::SusyVerdict::SusyPattern ? LMG_SUSY_PATTERN
                                                                         : LMG_SUSY_BROKEN;
    out->has_zero_mode = rep.spectrum.zero_mode.has_value();
    out->all_levels_paired = rep.spectrum.all_levels_paired;
    out->min_eigenvalue = rep.spectrum.eigenvalues.front();
    return LMG_OK;
  });
}

lmg_status lmg_ground_state_new(int two_j, double gamma, lmg_frame frame,
                                lmg_ground_state** out) {
  return guarded([&] {
    if (!out) return fail(LMG_ERR_NULL_POINTER, "output handle is null");
    *out = nullptr;
    if (frame != LMG_FRAME_FACTORIZED && frame != LMG_FRAME_ROTATED)
      return fail(LMG_ERR_INVALID_ARGUMENT, "unknown frame");
    auto gs = lmg::ground_state(spin(two_j), gamma,
                                frame == LMG_FRAME_ROTATED ? lmg::Frame::Rotated
                                                           : lmg::Frame::Factorized);
    *out = new lmg_ground_state{std::move(gs)};
    return LMG_OK;
  });
}

size_t lmg_ground_state_size(const lmg_ground_state* g) {
  return g ? g->gs.amplitudes.size() : 0;
}

lmg_status lmg_ground_state_amplitudes(const lmg_ground_state* g, double* out, size_t n) {
  if (!g) return fail(LMG_ERR_NULL_POINTER, "ground-state handle is null");
  return copy_vector(g->gs.amplitudes, out, n);
}

lmg_status lmg_ground_state_summary_get(const lmg_ground_state* g,
                                        lmg_ground_state_summary* out) {
  if (!g || !out) return fail(LMG_ERR_NULL_POINTER, "null argument");
  out->norm_direct = g->gs.norm_direct;
  out->norm_legendre = g->gs.norm_legendre;
  out->log_norm_legendre = g->gs.log_norm_legendre;
  out->energy_residual = g->gs.energy_residual;
  out->h_norm = g->gs.h_norm;
  return LMG_OK;
}

void lmg_ground_state_free(lmg_ground_state* g) { delete g; }

}  // extern "C"
