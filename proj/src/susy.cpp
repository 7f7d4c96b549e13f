#include "lmg/susy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lmg/eigensolve.hpp"
#include "lmg/error.hpp"
#include "lmg/models.hpp"

namespace lmg {

Supercharges build_supercharges(SpinJ j, double gamma) {
  if (!j.is_integer_spin()) {
    throw Error(ErrorCode::NotIntegerSpin,
                "supercharges require integer J, got J = " + std::to_string(j.value()));
  }
  const auto ops = build_spin_operators(j);
  const double c = std::cosh(gamma);
  const double s = std::sinh(gamma);
  const RealMatrix m1 = c * ops.jx - s * ops.ky;

  Supercharges out{j, gamma, parity_sort(j), RealMatrix(j.dim()), RealMatrix(j.dim())};
  const auto& even = out.parity.even;
  const auto& odd = out.parity.odd;
  const std::size_t ne = even.size();
  for (std::size_t a = 0; a < ne; ++a) {
    // Row a of the block holds sector state ne-1-a (the reversed even sector).
    const std::size_t src = even[ne - 1 - a];
    for (std::size_t b = 0; b < odd.size(); ++b) {
      const double v = m1(src, odd[b]);
      const std::size_t ob = ne + b;
      out.q1(a, ob) = v;
      out.q1(ob, a) = v;
      out.r2(a, ob) = -v;
      out.r2(ob, a) = v;
    }
  }
  return out;
}

RealMatrix susy_hamiltonian_sorted(SpinJ j, double gamma) {
  return build_susy_rotated(j, gamma).permuted(parity_sort(j).perm);
}

double SuperalgebraResiduals::worst() const noexcept {
  return std::max({q1_squared, q2_squared, anticommutator, commutator});
}

bool SuperalgebraResiduals::pass(double rel_tol) const noexcept {
  return worst() <= rel_tol * std::max(1.0, h_norm);
}

SuperalgebraResiduals verify_superalgebra(const Supercharges& s, const RealMatrix& h) {
  if (s.q1.dim() != h.dim() || s.r2.dim() != h.dim())
    throw Error(ErrorCode::DimensionMismatch, "supercharge and Hamiltonian sizes differ");
  SuperalgebraResiduals r;
  r.h_norm = h.max_norm();
  r.q1_squared = max_abs_diff(s.q1 * s.q1, h);
  r.q2_squared = max_abs_diff(s.r2.transpose() * s.r2, h);
  r.anticommutator = (s.q1 * s.r2 + s.r2 * s.q1).max_norm();
  r.commutator = std::max((s.q1 * h - h * s.q1).max_norm(), (s.r2 * h - h * s.r2).max_norm());
  return r;
}

const char* to_string(SusyVerdict v) noexcept {
  return v == SusyVerdict::SusyPattern ? "SusyPattern" : "SusyBroken";
}

SpectrumReport classify_spectrum(std::span<const double> eigs, SpinJ j, double tol) {
  if (eigs.empty()) throw Error(ErrorCode::EmptySpectrum, "no eigenvalues to classify");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "pairing tolerance must be > 0");
  if (!std::is_sorted(eigs.begin(), eigs.end()))
    throw Error(ErrorCode::InvalidArgument, "eigenvalues must be sorted ascending");

  SpectrumReport rep;
  rep.eigenvalues.assign(eigs.begin(), eigs.end());
  rep.pair_id.assign(eigs.size(), -1);

  double scale = 1.0;
  for (double e : eigs) scale = std::max(scale, std::abs(e));
  const double zero_tol = tol * scale;

  std::size_t zeros = 0;
  std::size_t zero_at = 0;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    if (std::abs(eigs[i]) <= zero_tol) {
      if (zeros == 0) zero_at = i;
      ++zeros;
    }
  }
  if (zeros == 1) {
    rep.zero_mode = ZeroMode{eigs[zero_at], std::abs(eigs[zero_at]) / scale};
    rep.pair_id[zero_at] = 0;
  }

  int next_id = 1;
  for (std::size_t i = 0; i < eigs.size();) {
    if (rep.zero_mode && i == zero_at) {
      ++i;
      continue;
    }
    std::size_t k = i + 1;
    if (rep.zero_mode && k == zero_at) ++k;
    if (k < eigs.size() &&
        std::abs(eigs[k] - eigs[i]) <= tol * std::max(1.0, std::abs(eigs[k]))) {
      rep.doublets.push_back({eigs[i], eigs[k], eigs[k] - eigs[i]});
      rep.pair_id[i] = next_id;
      rep.pair_id[k] = next_id;
      ++next_id;
      i = k + 1;
    } else {
      rep.unpaired.push_back(eigs[i]);
      ++i;
    }
  }

  rep.all_levels_paired = rep.unpaired.empty() && zeros <= 1;
  const bool pattern = j.is_integer_spin() && rep.zero_mode.has_value() && rep.unpaired.empty();
  rep.verdict = pattern ? SusyVerdict::SusyPattern : SusyVerdict::SusyBroken;
  return rep;
}

bool SusyCheckReport::passed() const noexcept {
  if (algebra_checked && !algebra.pass(1e-10)) return false;
  if (charpoly_checked && !(charpoly_residual <= 1e-8)) return false;
  if (permutation_checked && !permutation_equivalent) return false;
  // Half-integer J is expected to break the pattern.
  if (integer_spin && spectrum.verdict != SusyVerdict::SusyPattern) return false;
  return true;
}

SusyCheckReport run_susy_check(SpinJ j, double gamma, double pair_tol) {
  if (j.two_j() > 400)
    throw Error(ErrorCode::DimensionTooLarge, "susy check uses dense spectra, J <= 200");
  SusyCheckReport rep;
  rep.integer_spin = j.is_integer_spin();
  if (rep.integer_spin) {
    rep.algebra = verify_superalgebra(build_supercharges(j, gamma),
                                      susy_hamiltonian_sorted(j, gamma));
    rep.algebra_checked = true;
    if (j.j_int() >= 1) {
      const auto blocks = extract_hn_blocks(build_nonhermitian(j, gamma), j);
      const auto rev = blocks.h_plus.reversed();
      rep.permutation_checked = true;
      rep.permutation_equivalent = rev.alpha == blocks.h_minus.alpha &&
                                   rev.beta == blocks.h_minus.beta &&
                                   rev.gamma_sub == blocks.h_minus.gamma_sub;
    }
    if (j.j_int() >= 1 && j.j_int() <= 12) {
      rep.charpoly_residual = check_determinant_factorization(j, gamma).residual;
      rep.charpoly_checked = true;
    }
  }
  const auto eig = eig_dense_symmetric(build_susy_rotated(j, gamma));
  rep.spectrum = classify_spectrum(eig, j, pair_tol);
  return rep;
}

}  // namespace lmg
