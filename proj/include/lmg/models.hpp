#pragma once

#include <utility>
#include <vector>

#include "lmg/spin.hpp"
#include "lmg/tridiag.hpp"

namespace lmg {

// xi*(chi1^2 Jz^2 + chi2^2 Jy^2 + lambda*chi1*chi2 Jx) with the derived
// hyperbolic parametrization chi1 = omega0*cosh(gamma), chi2 = omega0*sinh(gamma).
struct ModelParams {
  double xi = 1.0;
  double chi1 = 1.0;
  double chi2 = 0.0;
  double lambda = 1.0;
  double omega0 = 1.0;
  double gamma = 0.0;

  // Validates chi1 > 0, 0 <= chi2 < chi1, lambda >= 0 and fills omega0/gamma.
  static ModelParams from_chi(double xi, double chi1, double chi2, double lambda);
  // Supersymmetric point (lambda = 1, xi = 1) for a given anisotropy.
  static ModelParams susy(double gamma, double omega0 = 1.0);

  bool susy_point() const noexcept { return lambda == 1.0; }
};

struct HyperbolicParams {
  double omega0;
  double gamma;
};

// Throws DegenerateAnisotropy unless chi1 > 0 and 0 <= chi2 < chi1.
HyperbolicParams params_from_chi(double chi1, double chi2);

RealMatrix build_lmg_general(SpinJ j, const ModelParams& p);

// omega0^2 (Jx^2 cosh^2 g + Jy^2 sinh^2 g + Jz cosh g sinh g).
RealMatrix build_susy_rotated(SpinJ j, double gamma, double omega0 = 1.0);

// omega0^2 (Jz cosh g + i Jy sinh g)(Jz cosh g - i Jy sinh g), evaluated in
// real form as A A^T with A = Jz cosh g + Ky sinh g. Symmetric positive
// semidefinite.
RealMatrix build_factorized(SpinJ j, double gamma, double omega0 = 1.0);

// The same operator as the literal exponential sandwich
// exp(-g Jx) Jz exp(2g Jx) Jz exp(-g Jx). Loses accuracy like eps*exp(2|g|J);
// kept for cross-checks at small |g|*J.
RealMatrix build_factorized_exponential(SpinJ j, double gamma);

// Jz^2 cosh 2g + Ky Jz sinh 2g: similar to the factorized form, not symmetric.
RealMatrix build_nonhermitian(SpinJ j, double gamma);

// Block form of the non-Hermitian Hamiltonian in the Jz basis:
//
//   [ H-  0  0  ]
//   [ <a| 0 <a| ]
//   [ 0   0  H+ ]
struct HnBlocks {
  GeneralTridiag h_minus;  // m = -J..-1
  GeneralTridiag h_plus;   // m = +1..+J
  // a_vec[k] couples m = 0 to |m| = k+1; the m<0 and m>0 halves are mirror
  // images, so only one copy is stored.
  std::vector<double> a_vec;

  std::vector<double> row_negative() const;  // columns m = -J..-1
  std::vector<double> row_positive() const;  // columns m = +1..+J
};

HnBlocks extract_hn_blocks(const RealMatrix& hn, SpinJ j);

// Elements of H- straight from the closed-form expression, for cross-checking
// extract_hn_blocks.
GeneralTridiag h_minus_elements(SpinJ j, double gamma);

struct ParityBlocks {
  SymTridiag even;  // J+1 states, holds the zero mode
  SymTridiag odd;   // J states
};

// Parity-sector blocks of build_susy_rotated from closed-form elements:
// diagonal 1/2 (J(J+1) - m^2) cosh 2g + 1/2 m sinh 2g, coupling between m and
// m+2 equal to 1/4 sqrt((J-m)(J+m+1)(J-m-1)(J+m+2)).
ParityBlocks parity_blocks_susy(SpinJ j, double gamma, double omega0 = 1.0);

// Block-diagonal matrix in the parity-sorted basis.
RealMatrix embed_parity_blocks(const ParityBlocks& blocks);

}  // namespace lmg
