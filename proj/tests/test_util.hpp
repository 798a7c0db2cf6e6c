#pragma once

#include <random>
#include <set>
#include <vector>

#include "gpe/linal.hpp"

namespace gpe::testutil {

inline MatFp random_mat(int rows, int cols, i64 p, std::mt19937_64& rng) {
  MatFp m(rows, cols, p);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, static_cast<i64>(rng() % p));
  return m;
}

inline MatFp random_invertible(int n, i64 p, std::mt19937_64& rng) {
  for (;;) {
    MatFp m = random_mat(n, n, p, rng);
    if (is_invertible(m)) return m;
  }
}

inline PolyFp random_monic(i64 p, int deg, std::mt19937_64& rng) {
  std::vector<i64> c(deg + 1, 0);
  for (int i = 0; i < deg; ++i) c[i] = static_cast<i64>(rng() % p);
  c[deg] = 1;
  return PolyFp(p, c);
}

// every Z_p-combination of the rows, as a sorted set of vectors
inline std::set<std::vector<i64>> row_space_elements(const MatFp& m) {
  std::set<std::vector<i64>> out;
  i64 total = ipow(m.p(), m.rows());
  for (i64 idx = 0; idx < total; ++idx) {
    std::vector<i64> v(m.cols(), 0);
    i64 t = idx;
    for (int i = 0; i < m.rows(); ++i) {
      i64 c = t % m.p();
      t /= m.p();
      if (!c) continue;
      for (int j = 0; j < m.cols(); ++j)
        v[j] = normmod(v[j] + c * m.at(i, j), m.p());
    }
    out.insert(v);
  }
  return out;
}

}  // namespace gpe::testutil
