#include "lmg/groundstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lmg/error.hpp"
#include "lmg/models.hpp"

namespace lmg {

double legendre_p(int n, double x) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Legendre degree must be >= 0");
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = x;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double log_legendre_p(int n, double x) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Legendre degree must be >= 0");
  if (!(x >= 1.0)) throw Error(ErrorCode::InvalidArgument, "log_legendre_p needs x >= 1");
  if (n == 0) return 0.0;
  double p0 = 1.0;
  double p1 = x;
  double log_scale = 0.0;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
    if (p1 > 1e200) {
      p0 /= p1;
      log_scale += std::log(p1);
      p1 = 1.0;
    }
  }
  return log_scale + std::log(p1);
}

namespace {

// exp(g Jx)|m=0> as (vector, log of a common scale factor), stepping with a
// small exponential and renormalizing by the running max.
std::pair<std::vector<double>, double> boosted_zero_state(SpinJ j, double gamma) {
  const auto ops = build_spin_operators(j);
  const std::size_t d = j.dim();
  std::vector<double> v(d, 0.0);
  v[static_cast<std::size_t>(j.j_int())] = 1.0;
  double log_scale = 0.0;
  if (gamma == 0.0) return {v, log_scale};

  const double total = std::abs(gamma) * ops.jx.norm1();
  const int steps = std::max(1, static_cast<int>(std::ceil(total / 0.5)));
  const RealMatrix step = mat_exp_scaled(ops.jx, gamma / steps);
  for (int s = 0; s < steps; ++s) {
    v = step.apply(v);
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    for (double& x : v) x /= mx;
    log_scale += std::log(mx);
  }
  return {v, log_scale};
}

// Kernel of the even block of the rotated Hamiltonian. That block factors as
// N N^T with N^T = (Jx cosh g - Ky sinh g) restricted to odd rows and even
// columns, a two-term recurrence:
//   e^{-g} sqrt(L(2i)) psi(2i) + e^{g} sqrt(L(2i+1)) psi(2i+2) = 0,
// with L(i) = (2J - i)(i + 1). Amplitudes are accumulated in log form.
std::vector<double> rotated_kernel(SpinJ j, double gamma) {
  const std::size_t d = j.dim();
  std::vector<double> logmag(d, -std::numeric_limits<double>::infinity());
  std::vector<double> sign(d, 0.0);
  logmag[0] = 0.0;
  sign[0] = 1.0;
  for (std::size_t i = 0; i + 2 < d; i += 2) {
    logmag[i + 2] = logmag[i] - 2.0 * gamma +
                    0.5 * (std::log(j.ladder_sq(i)) - std::log(j.ladder_sq(i + 1)));
    sign[i + 2] = -sign[i];
  }
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d; i += 2) top = std::max(top, logmag[i]);
  std::vector<double> psi(d, 0.0);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < d; i += 2) {
    psi[i] = sign[i] * std::exp(logmag[i] - top);
    norm2 += psi[i] * psi[i];
  }
  const double norm = std::sqrt(norm2);
  for (double& x : psi) x /= norm;
  return psi;
}

double l2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

GroundState ground_state(SpinJ j, double gamma, Frame frame) {
  if (!j.is_integer_spin()) {
    throw Error(ErrorCode::NotIntegerSpin,
                "the zero-energy ground state needs integer J, got J = " +
                    std::to_string(j.value()));
  }
  if (!std::isfinite(gamma)) throw Error(ErrorCode::InvalidArgument, "gamma must be finite");

  GroundState gs;
  gs.j = j;
  gs.gamma = gamma;
  gs.frame = frame;
  const double x = std::cosh(2.0 * gamma);
  gs.log_norm_legendre = log_legendre_p(j.j_int(), x);
  gs.norm_legendre = std::exp(gs.log_norm_legendre);

  RealMatrix h;
  if (frame == Frame::Factorized) {
    auto [v, log_scale] = boosted_zero_state(j, gamma);
    const double factor = std::exp(log_scale - 0.5 * gs.log_norm_legendre);
    for (double& a : v) a *= factor;
    gs.amplitudes = std::move(v);
    gs.norm_direct = l2(gs.amplitudes);
    h = build_factorized(j, gamma);
  } else {
    gs.amplitudes = rotated_kernel(j, gamma);
    gs.norm_direct = l2(gs.amplitudes);
    h = build_susy_rotated(j, gamma);
  }
  gs.h_norm = h.norm1();
  gs.energy_residual = l2(h.apply(gs.amplitudes));
  return gs;
}

}  // namespace lmg
