#include <cmath>

#include "doctest.h"
#include "lmg/error.hpp"
#include "lmg/spin.hpp"
#include "oracles.hpp"

using lmg::RealMatrix;
using lmg::SpinJ;

TEST_CASE("spin-1/2 operators are the defining representation") {
  const auto ops = lmg::build_spin_operators(SpinJ(1));
  CHECK(ops.jx(0, 1) == 0.5);
  CHECK(ops.jx(1, 0) == 0.5);
  CHECK(ops.ky(0, 1) == -0.5);
  CHECK(ops.ky(1, 0) == 0.5);
  CHECK(ops.jz(0, 0) == -0.5);
  CHECK(ops.jz(1, 1) == 0.5);
  CHECK(ops.jx(0, 0) == 0.0);
}

TEST_CASE("spin-1 ladder element") {
  const auto ops = lmg::build_spin_operators(SpinJ(2));
  CHECK(ops.jz(0, 0) == -1.0);
  CHECK(ops.jz(1, 1) == 0.0);
  CHECK(ops.jz(2, 2) == 1.0);
  CHECK(ops.jx(1, 0) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
}

TEST_CASE("spin-2 ladder elements and the rotated combination") {
  const auto ops = lmg::build_spin_operators(SpinJ(4));
  CHECK(ops.jx(0, 1) == 1.0);
  CHECK(ops.ky(0, 1) == -1.0);
  for (double g : {-1.3, 0.0, 0.4, 2.0}) {
    const double v = ops.jx(0, 1) * std::cosh(g) - ops.ky(0, 1) * std::sinh(g);
    CHECK(v == doctest::Approx(std::exp(g)).epsilon(1e-14));
  }
}

TEST_CASE("operators match the textbook construction") {
  for (int two_j = 0; two_j <= 40; ++two_j) {
    const auto ops = lmg::build_spin_operators(SpinJ(two_j));
    const double j = 0.5 * two_j;
    CHECK(lmg::max_abs_diff(ops.jx, oracle::jx(j)) <= 1e-14 * std::max(1.0, j));
    CHECK(lmg::max_abs_diff(ops.ky, oracle::ky(j)) <= 1e-14 * std::max(1.0, j));
    CHECK(ops.jz == oracle::jz(j));
    CHECK(ops.ky.transpose() == ops.ky * -1.0);
    CHECK(ops.jx.transpose() == ops.jx);
  }
}

TEST_CASE("real-form commutators") {
  for (int two_j : {1, 2, 3, 4, 7, 12, 25}) {
    const auto o = lmg::build_spin_operators(SpinJ(two_j));
    const double tol = 1e-13 * two_j * two_j;
    CHECK(lmg::max_abs_diff(o.jx * o.ky - o.ky * o.jx, o.jz * -1.0) <= tol);
    CHECK(lmg::max_abs_diff(o.jz * o.jx - o.jx * o.jz, o.ky) <= tol);
  }
}

TEST_CASE("Casimir identity up to J = 100") {
  for (int two_j = 0; two_j <= 200; two_j += 7) {
    const SpinJ j(two_j);
    const auto o = lmg::build_spin_operators(j);
    const RealMatrix cas = o.jx * o.jx - o.ky * o.ky + o.jz * o.jz;
    const double jj = j.value() * (j.value() + 1);
    const RealMatrix ref = RealMatrix::identity(j.dim()) * jj;
    CHECK(lmg::max_abs_diff(cas, ref) <= 1e-12 * std::max(1.0, jj));
  }
}

TEST_CASE("SpinJ accessors") {
  const auto j = SpinJ::from_value(1.5);
  CHECK(j.two_j() == 3);
  CHECK(j.dim() == 4);
  CHECK_FALSE(j.is_integer_spin());
  CHECK(j.m_of(0) == -1.5);
  CHECK(SpinJ::integer(3).two_j() == 6);
  CHECK_THROWS_AS(SpinJ::from_value(0.3), lmg::Error);
  CHECK_THROWS_AS(SpinJ::from_value(-1.0), lmg::Error);
  // (J - m)(J + m + 1) for J = 2: 4, 6, 6, 4.
  const SpinJ two(4);
  CHECK(two.ladder_sq(0) == 4.0);
  CHECK(two.ladder_sq(1) == 6.0);
  CHECK(two.ladder_sq(2) == 6.0);
  CHECK(two.ladder_sq(3) == 4.0);
}

TEST_CASE("mat_exp_scaled special cases") {
  const auto o = lmg::build_spin_operators(SpinJ(4));

  SUBCASE("t = 0 gives the identity") {
    CHECK(lmg::mat_exp_scaled(o.jx, 0.0) == RealMatrix::identity(5));
  }
  SUBCASE("diagonal generator") {
    const double g = 0.37;
    const auto e = lmg::mat_exp_scaled(o.jz, g);
    for (int i = 0; i < 5; ++i) {
      CHECK(e(i, i) == doctest::Approx(std::exp((i - 2) * g)).epsilon(1e-14));
      for (int k = 0; k < 5; ++k)
        if (k != i) CHECK(e(i, k) == 0.0);
    }
  }
  SUBCASE("spin-1/2 Jx has the hyperbolic closed form") {
    const auto half = lmg::build_spin_operators(SpinJ(1));
    for (double g : {-2.5, -0.3, 0.01, 1.0, 3.0}) {
      const auto e = lmg::mat_exp_scaled(half.jx, g);
      const double c = std::cosh(g / 2), s = std::sinh(g / 2);
      CHECK(std::abs(e(0, 0) - c) <= 1e-12 * c);
      CHECK(std::abs(e(1, 1) - c) <= 1e-12 * c);
      CHECK(std::abs(e(0, 1) - s) <= 1e-12 * c);
      CHECK(std::abs(e(1, 0) - s) <= 1e-12 * c);
    }
  }
  SUBCASE("overflow guard") {
    const auto big = lmg::build_spin_operators(SpinJ(200));
    CHECK_THROWS_AS(lmg::mat_exp_scaled(big.jx, 8.0), lmg::Error);
    try {
      (void)lmg::mat_exp_scaled(big.jx, 8.0);
    } catch (const lmg::Error& e) {
      CHECK(e.code() == lmg::ErrorCode::OverflowRisk);
    }
  }
}

TEST_CASE("exp(tM) exp(-tM) is the identity") {
  for (int j = 1; j <= 30; j += 3) {
    const auto o = lmg::build_spin_operators(SpinJ::integer(j));
    const auto id = RealMatrix::identity(o.jx.dim());
    for (double t : {-3.0, -1.0, -0.2, 0.5, 2.0, 3.0}) {
      const auto pz = lmg::mat_exp_scaled(o.jz, t) * lmg::mat_exp_scaled(o.jz, -t);
      CHECK(lmg::max_abs_diff(pz, id) <= 1e-10);
      // exp(t Jx) has entries of size e^{|t| J}; the round-off in the product
      // grows with it, so only the range where it stays below 1e-10 is checked.
      if (std::abs(t) * j <= 6.0) {
        const auto px = lmg::mat_exp_scaled(o.jx, t) * lmg::mat_exp_scaled(o.jx, -t);
        CHECK(lmg::max_abs_diff(px, id) <= 1e-10);
      }
    }
  }
}

TEST_CASE("hyperbolic rotation of Jz by exp(g Jx)") {
  for (int j = 1; j <= 30; ++j) {
    const auto o = lmg::build_spin_operators(SpinJ::integer(j));
    for (double g : {-0.2, -0.05, 0.1, 0.2}) {
      if (std::abs(g) * j > 6.0) continue;
      const RealMatrix lhs =
          lmg::mat_exp_scaled(o.jx, -g) * o.jz * lmg::mat_exp_scaled(o.jx, g);
      const RealMatrix rhs = o.jz * std::cosh(g) + o.ky * std::sinh(g);
      CHECK(lmg::max_abs_diff(lhs, rhs) <= 1e-10 * rhs.max_norm());
    }
  }
}

TEST_CASE("parity sectors") {
  SUBCASE("J = 2") {
    const auto p = lmg::parity_sort(SpinJ::integer(2));
    CHECK(p.even_m() == std::vector<double>{-2, 0, 2});
    CHECK(p.odd_m() == std::vector<double>{-1, 1});
  }
  SUBCASE("J = 1 keeps J+1 states in the even sector") {
    const auto p = lmg::parity_sort(SpinJ::integer(1));
    CHECK(p.even_m() == std::vector<double>{-1, 1});
    CHECK(p.odd_m() == std::vector<double>{0});
  }
  SUBCASE("J = 3") {
    const auto p = lmg::parity_sort(SpinJ::integer(3));
    CHECK(p.even_m() == std::vector<double>{-3, -1, 1, 3});
    CHECK(p.odd_m() == std::vector<double>{-2, 0, 2});
  }
  SUBCASE("perm is a bijection with the even block first") {
    for (int two_j = 0; two_j <= 30; ++two_j) {
      const auto p = lmg::parity_sort(SpinJ(two_j));
      std::vector<int> seen(p.perm.size(), 0);
      for (auto v : p.perm) ++seen.at(v);
      for (int s : seen) CHECK(s == 1);
      for (std::size_t k = 0; k < p.even.size(); ++k) CHECK(p.perm[p.even[k]] == k);
      for (std::size_t k = 0; k < p.odd.size(); ++k)
        CHECK(p.perm[p.odd[k]] == p.even.size() + k);
      if (two_j % 2 == 0) {
        CHECK(p.even.size() == static_cast<std::size_t>(two_j / 2 + 1));
        CHECK(p.odd.size() == static_cast<std::size_t>(two_j / 2));
      }
    }
  }
}
