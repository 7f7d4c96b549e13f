#include "lmg/spin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lmg/error.hpp"

namespace lmg {

SpinJ SpinJ::from_value(double j) {
  const double two = 2.0 * j;
  if (!std::isfinite(j) || j < 0.0 || two != std::round(two) || two > 1e9) {
    throw Error(ErrorCode::InvalidArgument,
                "spin must be a non-negative integer or half-integer, got " +
                    std::to_string(j));
  }
  return SpinJ(static_cast<int>(two));
}

SpinJ SpinJ::integer(int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative spin");
  return SpinJ(2 * j);
}

double SpinJ::ladder_sq(std::size_t i) const noexcept {
  return static_cast<double>(two_j_ - static_cast<int>(i)) *
         static_cast<double>(i + 1);
}

RealMatrix RealMatrix::identity(std::size_t dim) {
  RealMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::diagonal(std::span<const double> d) {
  RealMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RealMatrix RealMatrix::operator*(const RealMatrix& rhs) const {
  if (rhs.dim_ != dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
  RealMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const double a = (*this)(r, k);
      if (a == 0.0) continue;
      const double* row = &rhs.a_[k * dim_];
      double* dst = &out.a_[r * dim_];
      for (std::size_t c = 0; c < dim_; ++c) dst[c] += a * row[c];
    }
  }
  return out;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& rhs) {
  if (rhs.dim_ != dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

RealMatrix& RealMatrix::operator-=(const RealMatrix& rhs) {
  if (rhs.dim_ != dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

RealMatrix& RealMatrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

std::vector<double> RealMatrix::apply(std::span<const double> x) const {
  if (x.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

double RealMatrix::max_norm() const noexcept {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double RealMatrix::norm1() const noexcept {
  double best = 0.0;
  for (std::size_t c = 0; c < dim_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) s += std::abs((*this)(r, c));
    best = std::max(best, s);
  }
  return best;
}

double RealMatrix::frobenius() const noexcept {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

bool RealMatrix::all_finite() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
}

RealMatrix RealMatrix::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "permutation size mismatch");
  RealMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(perm[r], perm[c]) = (*this)(r, c);
  return out;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch, "comparison dimension mismatch");
  double m = 0.0;
  auto x = a.data();
  auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

SpinOperators build_spin_operators(SpinJ j) {
  const std::size_t d = j.dim();
  SpinOperators ops{j, RealMatrix(d), RealMatrix(d), RealMatrix(d)};
  for (std::size_t i = 0; i < d; ++i) ops.jz(i, i) = j.m_of(i);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const double v = 0.5 * std::sqrt(j.ladder_sq(i));
    ops.jx(i + 1, i) = v;
    ops.jx(i, i + 1) = v;
    ops.ky(i + 1, i) = v;
    ops.ky(i, i + 1) = -v;
  }
  return ops;
}

RealMatrix mat_exp_scaled(const RealMatrix& m, double t) {
  const std::size_t d = m.dim();
  const double norm = std::abs(t) * m.norm1();
  if (!std::isfinite(norm) || norm > 700.0) {
    throw Error(ErrorCode::OverflowRisk,
                "|t|*||m||_1 = " + std::to_string(norm) + " exceeds 700");
  }
  if (norm == 0.0) return RealMatrix::identity(d);

  const int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm))));
  RealMatrix a = m * (t / std::ldexp(1.0, squarings));

  RealMatrix sum = RealMatrix::identity(d);
  RealMatrix term = RealMatrix::identity(d);
  for (int k = 1; k < 64; ++k) {
    term = term * a;
    term *= 1.0 / k;
    sum += term;
    if (term.max_norm() < 1e-18 * std::max(1.0, sum.max_norm())) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

std::vector<double> ParityIndex::even_m() const {
  std::vector<double> out;
  for (auto i : even) out.push_back(j.m_of(i));
  return out;
}

std::vector<double> ParityIndex::odd_m() const {
  std::vector<double> out;
  for (auto i : odd) out.push_back(j.m_of(i));
  return out;
}

ParityIndex parity_sort(SpinJ j) {
  ParityIndex p{j, {}, {}, std::vector<std::size_t>(j.dim())};
  // Basis index i counts the "a" excitations: k = J + m = i.
  for (std::size_t i = 0; i < j.dim(); ++i) (i % 2 == 0 ? p.even : p.odd).push_back(i);
  std::size_t next = 0;
  for (auto i : p.even) p.perm[i] = next++;
  for (auto i : p.odd) p.perm[i] = next++;
  return p;
}

}  // namespace lmg
