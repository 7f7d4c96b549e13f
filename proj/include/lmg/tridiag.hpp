#pragma once

#include <cstddef>
#include <vector>

#include "lmg/spin.hpp"

namespace lmg {

// Real symmetric tridiagonal matrix.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;  // size n-1

  std::size_t size() const noexcept { return diag.size(); }
  RealMatrix to_matrix() const;
};

// Real tridiagonal matrix in the sign layout
//
//   [ a1  -b1             ]
//   [ g1   a2  -b2        ]
//   [      g2   .    .    ]
//   [           .    .  -b_{n-1} ]
//   [               g_{n-1}  a_n ]
//
// i.e. the superdiagonal is stored negated in `beta`, the subdiagonal as is
// in `gamma_sub`.
struct GeneralTridiag {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> gamma_sub;

  std::size_t size() const noexcept { return alpha.size(); }
  RealMatrix to_matrix() const;
  // Read a tridiagonal band out of a dense matrix (entries outside the band
  // are ignored).
  static GeneralTridiag from_matrix(const RealMatrix& m);
  // Conjugation by the index-reversal permutation.
  GeneralTridiag reversed() const;
};

}  // namespace lmg
