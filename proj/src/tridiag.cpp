#include "lmg/tridiag.hpp"

#include <algorithm>

#include "lmg/error.hpp"

namespace lmg {

RealMatrix SymTridiag::to_matrix() const {
  RealMatrix m(size());
  for (std::size_t i = 0; i < size(); ++i) m(i, i) = diag[i];
  for (std::size_t i = 0; i < off.size(); ++i) {
    m(i, i + 1) = off[i];
    m(i + 1, i) = off[i];
  }
  return m;
}

RealMatrix GeneralTridiag::to_matrix() const {
  RealMatrix m(size());
  for (std::size_t i = 0; i < size(); ++i) m(i, i) = alpha[i];
  for (std::size_t i = 0; i + 1 < size(); ++i) {
    m(i, i + 1) = -beta[i];
    m(i + 1, i) = gamma_sub[i];
  }
  return m;
}

GeneralTridiag GeneralTridiag::from_matrix(const RealMatrix& m) {
  GeneralTridiag t;
  const std::size_t n = m.dim();
  t.alpha.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.alpha[i] = m(i, i);
  if (n > 1) {
    t.beta.resize(n - 1);
    t.gamma_sub.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      t.beta[i] = -m(i, i + 1);
      t.gamma_sub[i] = m(i + 1, i);
    }
  }
  return t;
}

GeneralTridiag GeneralTridiag::reversed() const {
  // Under i -> n-1-i the superdiagonal and subdiagonal swap roles.
  GeneralTridiag r;
  r.alpha.assign(alpha.rbegin(), alpha.rend());
  r.beta.resize(beta.size());
  r.gamma_sub.resize(gamma_sub.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const std::size_t k = beta.size() - 1 - i;
    r.beta[i] = -gamma_sub[k];
    r.gamma_sub[i] = -beta[k];
  }
  return r;
}

}  // namespace lmg
