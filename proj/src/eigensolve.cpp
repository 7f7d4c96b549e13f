#include "lmg/eigensolve.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "lmg/error.hpp"
#include "lmg/models.hpp"

namespace lmg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Sturm count over any tridiagonal given by accessors for the diagonal and the
// squared off-diagonal. Pivots smaller than pivmin are pushed away from zero
// keeping their sign (an exact zero goes positive, so an eigenvalue equal to
// x is not counted).
template <class Diag, class OffSq>
std::size_t sturm_count_impl(std::size_t n, Diag diag, OffSq off_sq, double x,
                             double pivmin) {
  if (n == 0) return 0;
  std::size_t count = 0;
  double d = diag(0) - x;
  if (std::abs(d) < pivmin) d = d < 0.0 ? -pivmin : pivmin;
  count += d < 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    d = (diag(i) - x) - off_sq(i - 1) / d;
    if (std::abs(d) < pivmin) d = d < 0.0 ? -pivmin : pivmin;
    count += d < 0.0;
  }
  return count;
}

// Bisection for the k-th (0-based) eigenvalue given count(lo) <= k < count(hi).
template <class Count>
double bisect_kth(Count count, std::size_t k, double lo, double hi, double abs_tol) {
  for (;;) {
    const double width = hi - lo;
    const double thr = std::max(abs_tol, 4.0 * kEps * std::max(std::abs(lo), std::abs(hi)));
    if (width <= thr) break;
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) break;
    if (count(mid) >= k + 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

struct Enclosure {
  double lo;
  double hi;
  double pivmin;
};

Enclosure gershgorin(const SymTridiag& t) {
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double max_off_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? std::abs(t.off[i - 1]) : 0.0;
    const double right = i + 1 < n ? std::abs(t.off[i]) : 0.0;
    lo = std::min(lo, t.diag[i] - left - right);
    hi = std::max(hi, t.diag[i] + left + right);
  }
  for (double e : t.off) max_off_sq = std::max(max_off_sq, e * e);
  const double pivmin = DBL_MIN * std::max(1.0, max_off_sq);
  const double scale = std::max(std::abs(lo), std::abs(hi));
  const double margin = 4.0 * kEps * scale * static_cast<double>(n) + 2.0 * pivmin;
  return {lo - margin, hi + margin, pivmin};
}

double pivmin_for(const SymTridiag& t) {
  double max_off_sq = 0.0;
  for (double e : t.off) max_off_sq = std::max(max_off_sq, e * e);
  return DBL_MIN * std::max(1.0, max_off_sq);
}

void require_integer_spin(SpinJ j, const char* what) {
  if (!j.is_integer_spin()) {
    throw Error(ErrorCode::NotIntegerSpin,
                std::string(what) + " requires integer J, got J = " +
                    std::to_string(j.value()));
  }
}

}  // namespace

std::size_t sturm_count(const SymTridiag& t, double x) {
  const double pivmin = pivmin_for(t);
  return sturm_count_impl(
      t.size(), [&](std::size_t i) { return t.diag[i]; },
      [&](std::size_t i) { return t.off[i] * t.off[i]; }, x, pivmin);
}

std::vector<double> eig_symtridiag(const SymTridiag& t, const EigRequest& req) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  if (t.off.size() + 1 != n)
    throw Error(ErrorCode::DimensionMismatch, "off-diagonal must have n-1 entries");
  if (!(req.abs_tol >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "abs_tol must be non-negative");

  const auto enc = gershgorin(t);
  auto count = [&](double x) {
    return sturm_count_impl(
        n, [&](std::size_t i) { return t.diag[i]; },
        [&](std::size_t i) { return t.off[i] * t.off[i]; }, x, enc.pivmin);
  };

  std::vector<double> out;
  switch (req.kind) {
    case EigRequest::Kind::Smallest:
      out.push_back(bisect_kth(count, 0, enc.lo, enc.hi, req.abs_tol));
      break;
    case EigRequest::Kind::KthSmallest:
      if (req.k >= n)
        throw Error(ErrorCode::InvalidArgument, "eigenvalue index out of range");
      out.push_back(bisect_kth(count, req.k, enc.lo, enc.hi, req.abs_tol));
      break;
    case EigRequest::Kind::All:
      out.reserve(n);
      for (std::size_t k = 0; k < n; ++k)
        out.push_back(bisect_kth(count, k, enc.lo, enc.hi, req.abs_tol));
      break;
    case EigRequest::Kind::InInterval: {
      if (!(req.lo < req.hi)) break;
      const std::size_t first = count(req.lo);
      const std::size_t last = count(req.hi);
      for (std::size_t k = first; k < last; ++k) {
        out.push_back(bisect_kth(count, k, std::max(enc.lo, req.lo),
                                 std::min(enc.hi, req.hi), req.abs_tol));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> eig_dense_symmetric(const RealMatrix& m) {
  const std::size_t n = m.dim();
  const double scale = m.max_norm();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      if (std::abs(m(r, c) - m(c, r)) > 1e-12 * scale)
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");

  RealMatrix a = m;
  const double fro = a.frobenius();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) s += a(r, c) * a(r, c);
    return std::sqrt(2.0 * s);
  };

  double prev = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < 100; ++sweep) {
    const double off = off_norm();
    if (off == 0.0 || off <= 1e-15 * fro || off >= prev) break;
    prev = off;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

SuperchargeTridiag::SuperchargeTridiag(SpinJ j, double gamma, double omega0) : j_(j) {
  const double up = 0.5 * omega0 * std::exp(gamma);
  const double down = 0.5 * omega0 * std::exp(-gamma);
  w_up_sq_ = up * up;
  w_down_sq_ = down * down;
}

double SuperchargeTridiag::off_sq(std::size_t i) const noexcept {
  // Basis index i equals J + m.
  return j_.ladder_sq(i) * ((i % 2 == 0) ? w_up_sq_ : w_down_sq_);
}

double SuperchargeTridiag::off(std::size_t i) const noexcept {
  return std::sqrt(j_.ladder_sq(i)) * std::sqrt((i % 2 == 0) ? w_up_sq_ : w_down_sq_);
}

double SuperchargeTridiag::gershgorin_radius() const noexcept {
  double r = 0.0;
  const std::size_t n = size();
  // Row sums peak near m = 0; a full scan keeps this exact and is O(n).
  double prev = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double e = off(i);
    r = std::max(r, prev + e);
    prev = e;
  }
  return std::max(r, prev);
}

SymTridiag SuperchargeTridiag::materialize() const {
  SymTridiag t;
  t.diag.assign(size(), 0.0);
  t.off.resize(size() - 1);
  for (std::size_t i = 0; i + 1 < size(); ++i) t.off[i] = off(i);
  return t;
}

std::size_t SuperchargeTridiag::sturm_count(double x) const noexcept {
  const std::size_t n = size();
  const double two_j = j_.two_j();
  const double max_sq = std::max(w_up_sq_, w_down_sq_) * (0.25 * (two_j + 1.0) * (two_j + 1.0));
  const double pivmin = DBL_MIN * std::max(1.0, max_sq);
  const double w[2] = {w_up_sq_, w_down_sq_};

  double d = -x;
  if (std::abs(d) < pivmin) d = d < 0.0 ? -pivmin : pivmin;
  std::size_t count = d < 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double k = static_cast<double>(i);
    const double e2 = (two_j - (k - 1.0)) * k * w[(i - 1) & 1u];
    d = -x - e2 / d;
    if (std::abs(d) < pivmin) d = d < 0.0 ? -pivmin : pivmin;
    count += d < 0.0;
  }
  return count;
}

double CharPoly::evaluate(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
  CharPoly out;
  if (a.coeffs.empty() || b.coeffs.empty()) return out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t k = 0; k < b.coeffs.size(); ++k)
      out.coeffs[i + k] += a.coeffs[i] * b.coeffs[k];
  return out;
}

CharPoly CharPoly::shifted() const {
  CharPoly out;
  out.coeffs.reserve(coeffs.size() + 1);
  out.coeffs.push_back(0.0);
  out.coeffs.insert(out.coeffs.end(), coeffs.begin(), coeffs.end());
  return out;
}

CharPoly charpoly_tridiag(const GeneralTridiag& a) {
  const std::size_t n = a.size();
  if (n > 60)
    throw Error(ErrorCode::DimensionTooLarge, "charpoly_tridiag limited to dimension 60");
  // p_k = (x - alpha_k) p_{k-1} + beta_{k-1} gamma_{k-1} p_{k-2}
  std::vector<double> prev2{1.0};
  if (n == 0) return {prev2};
  std::vector<double> prev1{-a.alpha[0], 1.0};
  for (std::size_t k = 1; k < n; ++k) {
    const double prod = a.beta[k - 1] * a.gamma_sub[k - 1];
    std::vector<double> cur(k + 2, 0.0);
    for (std::size_t i = 0; i < prev1.size(); ++i) {
      cur[i + 1] += prev1[i];
      cur[i] -= a.alpha[k] * prev1[i];
    }
    for (std::size_t i = 0; i < prev2.size(); ++i) cur[i] += prod * prev2[i];
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return {prev1};
}

CharPoly charpoly_dense(const RealMatrix& m) {
  const std::size_t n = m.dim();
  if (n > 25)
    throw Error(ErrorCode::DimensionTooLarge, "charpoly_dense limited to dimension 25");
  // The trace recursion loses digits quickly with n; a wider accumulator
  // keeps the coefficients of the double input accurate up to n = 25.
#if defined(__SIZEOF_FLOAT128__)
  using ld = __float128;
#else
  using ld = long double;
#endif
  std::vector<ld> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);

  std::vector<ld> coeff(n + 1, ld(0));
  coeff[n] = ld(1);
  std::vector<ld> mk(n * n, ld(0));  // M_0 = 0
  std::vector<ld> am(n * n, ld(0));  // A M_{k-1}
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n * n; ++i) mk[i] = am[i];
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += coeff[n - k + 1];
    // A M_k
    std::fill(am.begin(), am.end(), ld(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q) {
        const ld arq = a[r * n + q];
        if (arq == ld(0)) continue;
        for (std::size_t c = 0; c < n; ++c) am[r * n + c] += arq * mk[q * n + c];
      }
    ld tr = ld(0);
    for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
    coeff[n - k] = -tr / static_cast<ld>(k);
  }
  CharPoly out;
  out.coeffs.reserve(n + 1);
  for (const ld& c : coeff) out.coeffs.push_back(static_cast<double>(c));
  return out;
}

double charpoly_relative_error(const CharPoly& got, const CharPoly& ref, double root_scale) {
  if (got.coeffs.size() != ref.coeffs.size())
    throw Error(ErrorCode::DimensionMismatch, "polynomial degrees differ");
  double worst = 0.0;
  const std::size_t n = ref.coeffs.size();
  for (std::size_t k = 0; k < n; ++k) {
    double scale = std::abs(ref.coeffs[k]);
    if (scale == 0.0 && k + 1 < n) scale = std::abs(ref.coeffs[k + 1]) * root_scale;
    const double diff = std::abs(got.coeffs[k] - ref.coeffs[k]);
    worst = std::max(worst, scale > 0.0 ? diff / scale : diff);
  }
  return worst;
}

DeterminantFactorization check_determinant_factorization(SpinJ j, double gamma) {
  require_integer_spin(j, "check_determinant_factorization");
  const RealMatrix hn = build_nonhermitian(j, gamma);
  const HnBlocks blocks = extract_hn_blocks(hn, j);
  DeterminantFactorization out;
  out.dense = charpoly_dense(hn);
  out.factored = (charpoly_tridiag(blocks.h_plus) * charpoly_tridiag(blocks.h_minus)).shifted();
  out.residual = charpoly_relative_error(out.dense, out.factored, hn.max_norm());
  return out;
}

SymmetrizedTridiag symmetrize_tridiag(const GeneralTridiag& a) {
  const std::size_t n = a.size();
  SymmetrizedTridiag out;
  out.aprime.alpha = a.alpha;
  out.aprime.beta.resize(a.beta.size());
  out.aprime.gamma_sub.resize(a.gamma_sub.size());
  out.t_diag.assign(n, 1.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double b = a.beta[i];
    const double g = a.gamma_sub[i];
    double ratio = 1.0;  // t_i / t_{i+1}
    if (b == 0.0 && g == 0.0) {
      out.aprime.beta[i] = 0.0;
      out.aprime.gamma_sub[i] = 0.0;
    } else if (b * g > 0.0) {
      const double root = std::sqrt(b * g);
      ratio = std::sqrt(b / g);
      out.aprime.beta[i] = b > 0.0 ? root : -root;
      out.aprime.gamma_sub[i] = g > 0.0 ? root : -root;
    } else {
      throw Error(ErrorCode::SignViolation,
                  "symmetrize_tridiag needs beta_i * gamma_i > 0 at i = " + std::to_string(i));
    }
    out.t_diag[i + 1] = out.t_diag[i] / ratio;
  }
  return out;
}

double diagonal_lower_bound(const GeneralTridiag& aprime) {
  if (aprime.alpha.empty()) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  return *std::min_element(aprime.alpha.begin(), aprime.alpha.end());
}

GapResult spectral_gap(SpinJ j, double gamma, GapMethod method, double omega0) {
  require_integer_spin(j, "spectral_gap");
  if (j.j_int() < 1) throw Error(ErrorCode::InvalidArgument, "spectral_gap needs J >= 1");
  if (!std::isfinite(gamma) || !std::isfinite(omega0) || omega0 <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "gamma must be finite and omega0 > 0");

  GapResult r;
  switch (method) {
    case GapMethod::Supercharge: {
      const SuperchargeTridiag q(j, gamma, omega0);
      const std::size_t k = static_cast<std::size_t>(j.j_int()) + 1;
      const double hi = q.gershgorin_radius() * (1.0 + 8.0 * kEps) + DBL_MIN;
      const double sigma =
          bisect_kth([&](double x) { return q.sturm_count(x); }, k, 0.0, hi, 0.0);
      r.gap = sigma * sigma;
      break;
    }
    case GapMethod::TridiagOdd: {
      const auto blocks = parity_blocks_susy(j, gamma, omega0);
      r.gap = eig_symtridiag(blocks.odd, EigRequest::smallest(0.0)).front();
      break;
    }
    case GapMethod::DenseOracle: {
      if (j.j_int() > 200)
        throw Error(ErrorCode::MethodUnavailable, "dense oracle limited to J <= 200");
      const auto eig = eig_dense_symmetric(build_susy_rotated(j, gamma, omega0));
      r.gap = eig[1];
      break;
    }
  }
  r.bound = omega0 * omega0 * std::cosh(2.0 * gamma);
  r.satisfied = r.gap >= r.bound - 1e-9 * std::max(1.0, r.bound);
  return r;
}

std::size_t gap_workspace_bytes(SpinJ j, GapMethod method) {
  const std::size_t jj = static_cast<std::size_t>(std::max(0, j.j_int()));
  switch (method) {
    case GapMethod::Supercharge:
      return sizeof(SuperchargeTridiag);
    case GapMethod::TridiagOdd:
      return sizeof(SymTridiag) + (2 * jj) * sizeof(double);
    case GapMethod::DenseOracle:
      return 3 * (2 * jj + 1) * (2 * jj + 1) * sizeof(double);
  }
  return 0;
}

}  // namespace lmg
