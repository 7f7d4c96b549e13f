#include "lmg/models.hpp"

#include <cmath>
#include <string>

#include "lmg/error.hpp"

namespace lmg {

namespace {

void require_integer_spin(SpinJ j, const char* what) {
  if (!j.is_integer_spin()) {
    throw Error(ErrorCode::NotIntegerSpin,
                std::string(what) + " requires integer J, got J = " +
                    std::to_string(j.value()));
  }
}

}  // namespace

HyperbolicParams params_from_chi(double chi1, double chi2) {
  if (!(chi1 > 0.0) || !(chi2 >= 0.0) || !(chi2 < chi1) || !std::isfinite(chi1)) {
    throw Error(ErrorCode::DegenerateAnisotropy,
                "need chi1 > 0 and 0 <= chi2 < chi1 (got chi1 = " +
                    std::to_string(chi1) + ", chi2 = " + std::to_string(chi2) + ")");
  }
  // (chi1 - chi2)(chi1 + chi2) keeps precision when chi2 is close to chi1.
  return {std::sqrt((chi1 - chi2) * (chi1 + chi2)), std::atanh(chi2 / chi1)};
}

ModelParams ModelParams::from_chi(double xi, double chi1, double chi2, double lambda) {
  if (!std::isfinite(xi) || !std::isfinite(lambda) || lambda < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "xi must be finite and lambda >= 0");
  }
  const auto hp = params_from_chi(chi1, chi2);
  return ModelParams{xi, chi1, chi2, lambda, hp.omega0, hp.gamma};
}

ModelParams ModelParams::susy(double gamma, double omega0) {
  return ModelParams{1.0, omega0 * std::cosh(gamma), omega0 * std::sinh(gamma),
                     1.0, omega0, gamma};
}

RealMatrix build_lmg_general(SpinJ j, const ModelParams& p) {
  const auto ops = build_spin_operators(j);
  // Jy^2 = -Ky^2.
  RealMatrix h = (p.chi1 * p.chi1) * (ops.jz * ops.jz);
  h -= (p.chi2 * p.chi2) * (ops.ky * ops.ky);
  h += (p.lambda * p.chi1 * p.chi2) * ops.jx;
  h *= p.xi;
  return h;
}

RealMatrix build_susy_rotated(SpinJ j, double gamma, double omega0) {
  const auto ops = build_spin_operators(j);
  const double c = std::cosh(gamma);
  const double s = std::sinh(gamma);
  RealMatrix h = (c * c) * (ops.jx * ops.jx);
  h -= (s * s) * (ops.ky * ops.ky);
  h += (c * s) * ops.jz;
  h *= omega0 * omega0;
  return h;
}

RealMatrix build_factorized(SpinJ j, double gamma, double omega0) {
  const auto ops = build_spin_operators(j);
  const double c = std::cosh(gamma);
  const double s = std::sinh(gamma);
  const RealMatrix a = c * ops.jz + s * ops.ky;
  RealMatrix h = a * a.transpose();
  h *= omega0 * omega0;
  return h;
}

RealMatrix build_factorized_exponential(SpinJ j, double gamma) {
  const auto ops = build_spin_operators(j);
  const RealMatrix e_minus = mat_exp_scaled(ops.jx, -gamma);
  const RealMatrix e_two = mat_exp_scaled(ops.jx, 2.0 * gamma);
  return e_minus * ops.jz * e_two * ops.jz * e_minus;
}

RealMatrix build_nonhermitian(SpinJ j, double gamma) {
  const auto ops = build_spin_operators(j);
  RealMatrix h = (ops.jz * ops.jz) * std::cosh(2.0 * gamma);
  h += (ops.ky * ops.jz) * std::sinh(2.0 * gamma);
  return h;
}

std::vector<double> HnBlocks::row_negative() const {
  return std::vector<double>(a_vec.rbegin(), a_vec.rend());
}

std::vector<double> HnBlocks::row_positive() const { return a_vec; }

HnBlocks extract_hn_blocks(const RealMatrix& hn, SpinJ j) {
  require_integer_spin(j, "extract_hn_blocks");
  if (hn.dim() != j.dim())
    throw Error(ErrorCode::DimensionMismatch, "H_n dimension does not match J");
  const std::size_t jj = static_cast<std::size_t>(j.j_int());
  HnBlocks b;
  RealMatrix lower(jj);
  RealMatrix upper(jj);
  for (std::size_t r = 0; r < jj; ++r) {
    for (std::size_t c = 0; c < jj; ++c) {
      lower(r, c) = hn(r, c);
      upper(r, c) = hn(jj + 1 + r, jj + 1 + c);
    }
  }
  b.h_minus = GeneralTridiag::from_matrix(lower);
  b.h_plus = GeneralTridiag::from_matrix(upper);
  b.a_vec.resize(jj);
  for (std::size_t k = 0; k < jj; ++k) b.a_vec[k] = hn(jj, jj + 1 + k);
  return b;
}

GeneralTridiag h_minus_elements(SpinJ j, double gamma) {
  require_integer_spin(j, "h_minus_elements");
  const int jj = j.j_int();
  if (jj < 1) throw Error(ErrorCode::InvalidArgument, "h_minus_elements needs J >= 1");
  const double ch = std::cosh(2.0 * gamma);
  const double sh = std::sinh(2.0 * gamma);
  GeneralTridiag t;
  t.alpha.resize(jj);
  t.beta.resize(jj - 1);
  t.gamma_sub.resize(jj - 1);
  for (int i = 0; i < jj; ++i) {
    const double m = i - jj;
    t.alpha[i] = (m * m) * ch;
  }
  for (int i = 0; i + 1 < jj; ++i) {
    // Row/column pair (i, i+1): the subdiagonal entry sits in column
    // m' = i - J, the superdiagonal one in column m' + 1. Both square roots
    // reduce to (2J - i)(i + 1).
    const double root = 0.5 * std::sqrt(j.ladder_sq(static_cast<std::size_t>(i)));
    const double m_sub = i - jj;
    const double m_sup = m_sub + 1.0;
    t.gamma_sub[i] = (root * m_sub) * sh;
    // superdiagonal = -(m'/2) sinh 2g sqrt((J+m')(J-m'+1)), stored negated
    t.beta[i] = (root * m_sup) * sh;
  }
  return t;
}

ParityBlocks parity_blocks_susy(SpinJ j, double gamma, double omega0) {
  require_integer_spin(j, "parity_blocks_susy");
  const double jv = j.value();
  const double cas = jv * (jv + 1.0);
  const double ch = std::cosh(2.0 * gamma);
  const double sh = std::sinh(2.0 * gamma);
  const double w = omega0 * omega0;
  const auto idx = parity_sort(j);

  auto block = [&](const std::vector<std::size_t>& sector) {
    SymTridiag t;
    t.diag.reserve(sector.size());
    for (auto i : sector) {
      const double m = j.m_of(i);
      t.diag.push_back(w * (0.5 * (cas - m * m) * ch + 0.5 * m * sh));
    }
    for (std::size_t k = 0; k + 1 < sector.size(); ++k) {
      const std::size_t i = sector[k];
      t.off.push_back(w * 0.25 * std::sqrt(j.ladder_sq(i)) * std::sqrt(j.ladder_sq(i + 1)));
    }
    return t;
  };
  return {block(idx.even), block(idx.odd)};
}

RealMatrix embed_parity_blocks(const ParityBlocks& blocks) {
  const std::size_t ne = blocks.even.size();
  RealMatrix m(ne + blocks.odd.size());
  const RealMatrix e = blocks.even.to_matrix();
  const RealMatrix o = blocks.odd.to_matrix();
  for (std::size_t r = 0; r < ne; ++r)
    for (std::size_t c = 0; c < ne; ++c) m(r, c) = e(r, c);
  for (std::size_t r = 0; r < o.dim(); ++r)
    for (std::size_t c = 0; c < o.dim(); ++c) m(ne + r, ne + c) = o(r, c);
  return m;
}

}  // namespace lmg
