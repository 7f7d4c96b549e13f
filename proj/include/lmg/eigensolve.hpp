#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lmg/spin.hpp"
#include "lmg/tridiag.hpp"

namespace lmg {

struct EigRequest {
  enum class Kind { All, Smallest, KthSmallest, InInterval };

  Kind kind = Kind::All;
  std::size_t k = 0;          // KthSmallest, 0-based
  double lo = 0.0, hi = 0.0;  // InInterval: eigenvalues in [lo, hi)
  double abs_tol = 1e-12;     // target bracket width

  static EigRequest all(double tol = 1e-12) { return {Kind::All, 0, 0, 0, tol}; }
  static EigRequest smallest(double tol = 1e-12) { return {Kind::Smallest, 0, 0, 0, tol}; }
  static EigRequest kth(std::size_t k, double tol = 1e-12) {
    return {Kind::KthSmallest, k, 0, 0, tol};
  }
  static EigRequest interval(double lo, double hi, double tol = 1e-12) {
    return {Kind::InInterval, 0, lo, hi, tol};
  }
};

// Number of eigenvalues strictly below x (shifted LDL^T / Sturm sequence).
std::size_t sturm_count(const SymTridiag& t, double x);

// Bisection driven by sturm_count inside the Gershgorin enclosure. Results are
// sorted ascending.
std::vector<double> eig_symtridiag(const SymTridiag& t, const EigRequest& req);

// Cyclic Jacobi; throws NotSymmetric if |m - m^T| > 1e-12 ||m||.
std::vector<double> eig_dense_symmetric(const RealMatrix& m);

// The supercharge in the ascending-m basis: zero diagonal, coupling between m
// and m+1 equal to 1/2 sqrt((J-m)(J+m+1)) * e^{+g} (J+m even) or e^{-g}
// (J+m odd). Its eigenvalues are 0 and +-sqrt(E) for every excited level E of
// the supersymmetric Hamiltonian. Entries are generated on demand, so the
// object is O(1) in memory.
class SuperchargeTridiag {
 public:
  SuperchargeTridiag(SpinJ j, double gamma, double omega0 = 1.0);

  std::size_t size() const noexcept { return j_.dim(); }
  double off(std::size_t i) const noexcept;
  double off_sq(std::size_t i) const noexcept;
  double gershgorin_radius() const noexcept;
  SymTridiag materialize() const;

  std::size_t sturm_count(double x) const noexcept;

 private:
  SpinJ j_;
  double w_up_sq_;    // (omega0 e^{g} / 2)^2
  double w_down_sq_;  // (omega0 e^{-g} / 2)^2
};

// Monic characteristic polynomial det(lambda I - A), ascending coefficients.
struct CharPoly {
  std::vector<double> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double evaluate(double x) const noexcept;
  friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
  // Multiplication by lambda.
  CharPoly shifted() const;
};

// Three-term recurrence; depends on the off-diagonals only through beta*gamma.
// Throws DimensionTooLarge above 60.
CharPoly charpoly_tridiag(const GeneralTridiag& a);

// Faddeev-LeVerrier trace recursion, accumulated in quad precision where the
// compiler offers it. Throws DimensionTooLarge above 25.
CharPoly charpoly_dense(const RealMatrix& m);

// Worst per-coefficient relative difference. Where the reference coefficient
// is exactly zero the next coefficient times root_scale is used as the scale
// (an error there moves a root by about that fraction of root_scale).
double charpoly_relative_error(const CharPoly& got, const CharPoly& ref, double root_scale);

// charpoly(H_n) against lambda * charpoly(H+) * charpoly(H-).
struct DeterminantFactorization {
  CharPoly dense;
  CharPoly factored;
  double residual = 0.0;
};

// Integer J <= 12.
DeterminantFactorization check_determinant_factorization(SpinJ j, double gamma);

struct SymmetrizedTridiag {
  GeneralTridiag aprime;
  std::vector<double> t_diag;  // t_1 = 1, t_i / t_{i+1} = sqrt(beta_i / gamma_i)
};

// Diagonal similarity A' = T^{-1} A T giving off-diagonals of equal magnitude
// sqrt(beta_i gamma_i) and opposite sign, so the symmetric part of A' is its
// diagonal. Requires beta_i * gamma_i > 0 for every i (a pair with both zero
// is passed through with ratio 1); otherwise SignViolation.
SymmetrizedTridiag symmetrize_tridiag(const GeneralTridiag& a);

// min_k alpha_k: a lower bound on every real eigenvalue of A' when the
// symmetric part of A' is diagonal.
double diagonal_lower_bound(const GeneralTridiag& aprime);

enum class GapMethod {
  Supercharge,  // bisection on SuperchargeTridiag (default)
  TridiagOdd,   // bisection on the odd parity block
  DenseOracle,  // Jacobi on the full rotated Hamiltonian, J <= 200
};

struct GapResult {
  double gap = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

// Energy of the first excited doublet of the supersymmetric Hamiltonian and
// the analytic lower bound omega0^2 cosh 2g.
GapResult spectral_gap(SpinJ j, double gamma, GapMethod method = GapMethod::Supercharge,
                       double omega0 = 1.0);

// Bytes of solver state spectral_gap keeps alive for a given size and method.
std::size_t gap_workspace_bytes(SpinJ j, GapMethod method);

}  // namespace lmg
