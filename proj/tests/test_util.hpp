#ifndef HOMCART_TEST_UTIL_HPP
#define HOMCART_TEST_UTIL_HPP

#include <random>

#include "homcart/lie_algebra.hpp"

namespace homcart::testutil {

/// so(3) in the cyclic basis: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
inline LieAlgebra make_so3() {
  return LieAlgebra(3, {{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}});
}

/// sl(2,R) = so(2,1) in the basis (H, E, F): [H,E]=2E, [H,F]=-2F, [E,F]=H.
inline LieAlgebra make_sl2() {
  return LieAlgebra(3, {{0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0}});
}

inline LieAlgebra make_abelian(int n) { return LieAlgebra(n, {}); }

inline Vector random_vector(std::mt19937& rng, int n, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

/// Structure table of L in the basis f_a = sum_i S(i,a) e_i; S invertible.
inline LieAlgebra change_basis(const LieAlgebra& L, const Matrix& S) {
  const int n = L.dim();
  const Matrix Sinv = S.inverse();
  std::vector<StructureEntry> entries;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Vector w = Sinv * L.bracket(Vector(S.col(a)), Vector(S.col(b)));
      for (int k = 0; k < n; ++k)
        if (std::abs(w[k]) > 1e-13) entries.push_back({a, b, k, w[k]});
    }
  return LieAlgebra(n, std::move(entries));
}

inline Matrix random_invertible(std::mt19937& rng, int n) {
  while (true) {
    Matrix S(n, n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) S(i, j) = dist(rng);
    if (std::abs(S.determinant()) > 0.1) return S;
  }
}

}  // namespace homcart::testutil

#endif
