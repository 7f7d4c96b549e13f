#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lmg/spin.hpp"

namespace lmg {

// Supercharges in the parity-sorted basis (even sector first). q1 is Q1
// itself; Q2 = i*r2 with r2 real antisymmetric. Both are zero on the
// diagonal blocks. The off-diagonal block of q1 is R_e (Jx cosh g - Ky sinh g)
// restricted to even rows and odd columns, where R_e reverses the even sector
// (m -> -m); with that ordering q1^2 is exactly the parity-sorted rotated
// Hamiltonian.
struct Supercharges {
  SpinJ j;
  double gamma = 0.0;
  ParityIndex parity;
  RealMatrix q1;
  RealMatrix r2;
};

Supercharges build_supercharges(SpinJ j, double gamma);

// build_susy_rotated permuted into the parity-sorted basis.
RealMatrix susy_hamiltonian_sorted(SpinJ j, double gamma);

struct SuperalgebraResiduals {
  double q1_squared = 0.0;      // ||q1^2 - H||
  double q2_squared = 0.0;      // ||r2^T r2 - H||   (Q2^2 = -r2^2)
  double anticommutator = 0.0;  // ||q1 r2 + r2 q1||
  double commutator = 0.0;      // max(||[q1, H]||, ||[r2, H]||)
  double h_norm = 0.0;          // ||H||, max norm

  double worst() const noexcept;
  bool pass(double rel_tol = 1e-10) const noexcept;
};

// Max-norm residuals of {Qi, Qj} = 2 delta_ij H and [Qi, H] = 0.
SuperalgebraResiduals verify_superalgebra(const Supercharges& s, const RealMatrix& h_sorted);

enum class SusyVerdict { SusyPattern, SusyBroken };

const char* to_string(SusyVerdict v) noexcept;

struct ZeroMode {
  double value = 0.0;
  double residual = 0.0;  // |value| / max(1, scale)
};

struct Doublet {
  double lo = 0.0;
  double hi = 0.0;
  double split = 0.0;  // hi - lo
};

struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending
  // Per eigenvalue: 0 for the zero mode, k >= 1 for the k-th doublet, -1 if
  // unpaired.
  std::vector<int> pair_id;
  std::optional<ZeroMode> zero_mode;
  std::vector<Doublet> doublets;
  std::vector<double> unpaired;
  bool all_levels_paired = false;  // every non-zero-mode level sits in a doublet
  SusyVerdict verdict = SusyVerdict::SusyBroken;
};

// Zero mode: |e| <= tol * max(1, max|e|). Doublet: |hi - lo| <= tol * max(1, |hi|).
// SusyPattern iff J is integer, there is exactly one zero mode and every other
// level pairs up. Half-integer J is always SusyBroken.
SpectrumReport classify_spectrum(std::span<const double> eigs, SpinJ j, double tol = 1e-8);

// Everything the susy-check command reports for one (J, gamma).
struct SusyCheckReport {
  bool integer_spin = false;
  bool algebra_checked = false;
  SuperalgebraResiduals algebra;
  bool charpoly_checked = false;  // J <= 12
  double charpoly_residual = 0.0;
  bool permutation_checked = false;
  bool permutation_equivalent = false;
  SpectrumReport spectrum;

  // Algebra and charpoly tolerances are the fixed 1e-10 and 1e-8.
  bool passed() const noexcept;
};

// Dense spectrum limited to J <= 200.
SusyCheckReport run_susy_check(SpinJ j, double gamma, double pair_tol = 1e-8);

}  // namespace lmg
