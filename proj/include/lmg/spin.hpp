#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lmg {

// Total spin J stored as the integer 2J. Basis index i <-> m = i - J.
class SpinJ {
 public:
  constexpr SpinJ() = default;
  explicit constexpr SpinJ(int two_j) : two_j_(two_j) {}

  // Accepts integer or half-integer values; throws InvalidArgument otherwise.
  static SpinJ from_value(double j);
  // Integer spin J = n (N = 2n spin-1/2 particles).
  static SpinJ integer(int j);

  constexpr int two_j() const noexcept { return two_j_; }
  constexpr std::size_t dim() const noexcept {
    return static_cast<std::size_t>(two_j_) + 1;
  }
  constexpr double value() const noexcept { return 0.5 * two_j_; }
  constexpr bool is_integer_spin() const noexcept { return two_j_ % 2 == 0; }
  // Only meaningful for integer spin.
  constexpr int j_int() const noexcept { return two_j_ / 2; }

  constexpr double m_of(std::size_t i) const noexcept {
    return static_cast<double>(i) - value();
  }
  // 2m for basis index i.
  constexpr int two_m_of(std::size_t i) const noexcept {
    return 2 * static_cast<int>(i) - two_j_;
  }

  // J(J+1) - m(m+1) for the ladder element between m and m+1; exact in
  // double for every J in range because it is (J-m)(J+m+1).
  double ladder_sq(std::size_t i) const noexcept;

  friend constexpr bool operator==(SpinJ, SpinJ) = default;

 private:
  int two_j_ = 0;
};

// Square dense real matrix, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

  static RealMatrix identity(std::size_t dim);
  static RealMatrix diagonal(std::span<const double> d);

  std::size_t dim() const noexcept { return dim_; }

  double& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

  std::span<const double> data() const noexcept { return a_; }
  std::span<double> data() noexcept { return a_; }

  RealMatrix transpose() const;
  RealMatrix operator*(const RealMatrix& rhs) const;
  RealMatrix& operator+=(const RealMatrix& rhs);
  RealMatrix& operator-=(const RealMatrix& rhs);
  RealMatrix& operator*=(double s);

  friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
  friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) { return a -= b; }
  friend RealMatrix operator*(RealMatrix a, double s) { return a *= s; }
  friend RealMatrix operator*(double s, RealMatrix a) { return a *= s; }

  std::vector<double> apply(std::span<const double> x) const;

  double max_norm() const noexcept;
  // Maximum absolute column sum.
  double norm1() const noexcept;
  double frobenius() const noexcept;
  bool all_finite() const noexcept;

  // P * this * P^T where perm[i] is the new index of old index i.
  RealMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> a_;
};

double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

// Jx (symmetric), Ky := i*Jy (antisymmetric) and Jz (diagonal) in the Jz
// eigenbasis, ascending m, Condon-Shortley phases.
struct SpinOperators {
  SpinJ j;
  RealMatrix jx;
  RealMatrix ky;
  RealMatrix jz;
};

SpinOperators build_spin_operators(SpinJ j);

// exp(t*m) by scaling and squaring a truncated Taylor series.
// Throws OverflowRisk when |t|*||m||_1 > 700.
RealMatrix mat_exp_scaled(const RealMatrix& m, double t);

// Sectors of the even/odd number of "a" excitations in the Schwinger picture:
// k = J + m. For integer J the even sector has J+1 states and holds the zero
// mode of the rotated supersymmetric Hamiltonian; the odd sector has J.
struct ParityIndex {
  SpinJ j;
  std::vector<std::size_t> even;  // basis indices, ascending m
  std::vector<std::size_t> odd;
  std::vector<std::size_t> perm;  // basis index -> sorted index (even first)

  std::vector<double> even_m() const;
  std::vector<double> odd_m() const;
};

ParityIndex parity_sort(SpinJ j);

}  // namespace lmg
