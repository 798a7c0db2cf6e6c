#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <tuple>

#include "gpe/linal.hpp"
#include "test_util.hpp"

using namespace gpe;
using namespace gpe::testutil;

TEST_CASE("modular scalar arithmetic") {
  CHECK(normmod(-1, 5) == 4);
  CHECK(invmod(2, 5) == 3);
  CHECK(powmod(2, 4, 5) == 1);
  CHECK_THROWS_AS(invmod(0, 7), std::domain_error);
  for (i64 p : {3, 5, 7, 11})
    for (i64 a = 1; a < p; ++a) CHECK(mulmod(a, invmod(a, p), p) == 1);
}

TEST_CASE("polynomial arithmetic round trips") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    PolyFp a = random_monic(3, 1 + static_cast<int>(rng() % 5), rng);
    PolyFp b = random_monic(3, 1 + static_cast<int>(rng() % 5), rng);
    auto [q, r] = poly_divmod(a * b, b);
    CHECK(q == a);
    CHECK(r.is_zero());
    CHECK(poly_gcd(a * b, b) == b);
    CHECK(poly_from_text(3, poly_to_text(a)) == a);
  }
  CHECK(poly_to_text(poly_from_text(3, "1,0,1")) == "1,0,1");
}

TEST_CASE("rref: fixed points and hand-eliminated example") {
  CHECK(rref(MatFp::identity(4, 3)).rank == 4);
  CHECK(rref(MatFp::identity(4, 3)).mat == MatFp::identity(4, 3));
  MatFp zero(3, 3, 5);
  CHECK(rref(zero).rank == 0);
  CHECK(rref(zero).mat == zero);

  MatFp m = mat_from_text(5, "1,2;2,4");
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.mat == mat_from_text(5, "1,2;0,0"));
}

TEST_CASE("rref is canonical: equal row space iff equal rref") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    MatFp a = random_mat(2, 3, 3, rng);
    MatFp b = random_mat(2, 3, 3, rng);
    bool same_space = row_space_elements(a) == row_space_elements(b);
    bool same_canon = SubspaceFp::from_span(a) == SubspaceFp::from_span(b);
    CHECK(same_space == same_canon);
    CHECK(rref(rref(a).mat).mat == rref(a).mat);  // idempotent
  }
}

TEST_CASE("solve_linear: identity, inconsistent, exhaustive oracle") {
  MatFp I = MatFp::identity(3, 3);
  MatFp b(3, 1, 3);
  b.set(0, 0, 1);
  b.set(2, 0, 2);
  SolveResult r = solve_linear(I, b);
  CHECK(r.consistent);
  CHECK(r.particular == b);
  CHECK(r.kernel.dim() == 0);

  MatFp zero(2, 2, 3);
  MatFp rhs(2, 1, 3);
  rhs.set(0, 0, 1);
  CHECK_FALSE(solve_linear(zero, rhs).consistent);

  // random 6x4 systems over Z_3 against exhaustive enumeration of all 3^4
  // candidate vectors
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    MatFp A = random_mat(6, 4, 3, rng);
    MatFp y(6, 1, 3);
    for (int i = 0; i < 6; ++i) y.set(i, 0, static_cast<i64>(rng() % 3));
    std::set<std::vector<i64>> solutions;
    for (i64 idx = 0; idx < 81; ++idx) {
      std::vector<i64> x(4);
      i64 v = idx;
      for (int i = 0; i < 4; ++i) {
        x[i] = v % 3;
        v /= 3;
      }
      bool ok = true;
      for (int i = 0; i < 6 && ok; ++i) {
        i64 acc = 0;
        for (int j = 0; j < 4; ++j) acc = normmod(acc + A.at(i, j) * x[j], 3);
        ok = acc == y.at(i, 0);
      }
      if (ok) solutions.insert(x);
    }
    SolveResult sr = solve_linear(A, y);
    CHECK(sr.consistent == !solutions.empty());
    if (sr.consistent) {
      std::vector<i64> x(4);
      for (int i = 0; i < 4; ++i) x[i] = sr.particular.at(i, 0);
      CHECK(solutions.count(x) == 1);
      // particular + kernel combinations reproduce the full solution set
      std::set<std::vector<i64>> produced;
      for (const auto& k : row_space_elements(
               sr.kernel.dim() ? sr.kernel.basis() : MatFp(1, 4, 3))) {
        std::vector<i64> sum(4);
        for (int i = 0; i < 4; ++i) sum[i] = addmod(x[i], k[i], 3);
        produced.insert(sum);
      }
      CHECK(produced == solutions);
    }
    CHECK(sr.kernel.dim() == 4 - rank(A));
  }
}

TEST_CASE("companion matrices") {
  CHECK(companion_std(poly_from_text(3, "1,0,1")) == mat_from_text(3, "0,1;2,0"));
  // t - lambda -> [lambda]
  PolyFp lin(5, {normmod(-2, 5), 1});
  CHECK(companion_std(lin) == mat_from_text(5, "2"));
  MatFp c = companion_std(poly_from_text(3, "1,2,0,1"));
  CHECK(c.row(2) == std::vector<i64>{2, 1, 0});
  CHECK_THROWS_AS(companion_std(PolyFp(3, {1, 2})), std::invalid_argument);
}

TEST_CASE("min_poly: scalars, swap, companions") {
  MatFp scal = MatFp::identity(3, 5).scaled(2);
  CHECK(min_poly(scal) == PolyFp(5, {normmod(-2, 5), 1}));

  // [[0,1],[1,0]] over Z_3: candidates t-1, t+1 both fail, t^2-1 works
  MatFp sw = mat_from_text(3, "0,1;1,0");
  CHECK(min_poly(sw) == PolyFp(3, {2, 0, 1}));

  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    PolyFp a = random_monic(3, 1 + static_cast<int>(rng() % 5), rng);
    MatFp c = companion_std(a);
    CHECK(min_poly(c) == a);
  }
}

TEST_CASE("min_poly annihilates") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 20; ++t) {
    MatFp m = random_mat(4, 4, 3, rng);
    PolyFp mu = min_poly(m);
    MatFp acc(4, 4, 3);
    MatFp pw = MatFp::identity(4, 3);
    for (int k = 0; k <= mu.degree(); ++k) {
      acc = acc + pw.scaled(mu.at(k));
      if (k < mu.degree()) pw = pw * m;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("irreducibility: examples and the cubic count") {
  CHECK(poly_irreducible(poly_from_text(3, "1,0,1")));
  CHECK_FALSE(poly_irreducible(PolyFp(3, {2, 0, 1})));  // t^2 - 1
  int count = 0;
  for (i64 idx = 0; idx < 27; ++idx) {
    std::vector<i64> c{idx % 3, (idx / 3) % 3, (idx / 9) % 3, 1};
    if (poly_irreducible(PolyFp(3, c))) ++count;
  }
  CHECK(count == 8);  // (p^3 - p)/3
}

TEST_CASE("frobenius normal form: canonical inputs") {
  PolyFp a = poly_from_text(3, "1,2,0,1");  // irreducible cubic
  MatFp c = companion_std(a);
  FnfResult f = frobenius_normal_form(c);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == a);
  CHECK(inverse(f.x) * c * f.x == c);

  MatFp d(3, 3, 3);
  d.set(1, 1, 1);
  d.set(2, 2, 2);
  FnfResult fd = frobenius_normal_form(d);
  REQUIRE(fd.factors.size() == 1);  // distinct eigenvalues: cyclic
  CHECK(fd.factors[0] == PolyFp(3, {0, 2, 0, 1}));  // t^3 - t
  CHECK(inverse(fd.x) * d * fd.x == companion_std(fd.factors[0]));
}

namespace {

MatFp block_diag_companions(const std::vector<PolyFp>& factors, i64 p) {
  int n = 0;
  for (const auto& a : factors) n += a.degree();
  MatFp m(n, n, p);
  int off = 0;
  for (const auto& a : factors) {
    MatFp c = companion_std(a);
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) m.set(off + i, off + j, c.at(i, j));
    off += c.rows();
  }
  return m;
}

}  // namespace

TEST_CASE("frobenius normal form: multiply-back oracle and invariance") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    MatFp m = random_mat(4, 4, 3, rng);
    FnfResult f = frobenius_normal_form(m);
    // divisor chain
    for (size_t i = 0; i + 1 < f.factors.size(); ++i)
      CHECK(poly_divmod(f.factors[i + 1], f.factors[i]).second.is_zero());
    CHECK(f.factors.back() == min_poly(m));
    CHECK(inverse(f.x) * m * f.x == block_diag_companions(f.factors, 3));

    MatFp g = random_invertible(4, 3, rng);
    FnfResult fc = frobenius_normal_form(inverse(g) * m * g);
    CHECK(fc.factors == f.factors);
  }
  // scalar matrix: n equal linear factors
  FnfResult fs = frobenius_normal_form(MatFp::identity(3, 5).scaled(2));
  CHECK(fs.factors.size() == 3);
  for (const auto& a : fs.factors) CHECK(a == PolyFp(5, {normmod(-2, 5), 1}));
}

TEST_CASE("poly_factor recovers trial-division factorizations") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    PolyFp a = random_monic(3, 2 + static_cast<int>(rng() % 4), rng);
    auto factors = poly_factor(a);
    PolyFp prod = PolyFp(3, {1});
    for (auto& [q, mult] : factors) {
      CHECK(poly_irreducible(q));
      for (int i = 0; i < mult; ++i) prod = prod * q;
    }
    CHECK(prod == a);
  }
}

TEST_CASE("subspace enumeration matches the exhaustive dedup oracle") {
  // oracle: row spaces of every (d x n) matrix over Z_p, deduplicated
  auto oracle_count = [](int n, int d, i64 p) {
    std::set<std::vector<i64>> seen;
    i64 total = ipow(p, n * d);
    for (i64 idx = 0; idx < total; ++idx) {
      MatFp m(d, n, p);
      i64 t = idx;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) {
          m.set(i, j, t % p);
          t /= p;
        }
      SubspaceFp s = SubspaceFp::from_span(m);
      if (s.dim() == d) seen.insert(s.key());
    }
    return static_cast<i64>(seen.size());
  };
  for (auto [n, d, p] : std::vector<std::tuple<int, int, i64>>{
           {3, 1, 3}, {3, 2, 3}, {4, 2, 3}, {2, 0, 3}, {3, 1, 5}}) {
    i64 expect = oracle_count(n, d, p);
    CHECK(count_subspaces(n, d, p) == expect);
    auto list = enumerate_subspaces(n, d, p);
    CHECK(static_cast<i64>(list.size()) == expect);
    std::set<std::vector<i64>> keys;
    for (const auto& s : list) {
      CHECK(s.dim() == d);
      CHECK(rref(s.basis()).mat == s.basis());
      keys.insert(s.key());
    }
    CHECK(static_cast<i64>(keys.size()) == expect);  // no duplicates
  }
  CHECK(count_subspaces(3, 1, 3) == 13);
  CHECK(count_subspaces(5, 3, 3) == 1210);
}

TEST_CASE("matrix text format round trip") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    MatFp m = random_mat(1 + static_cast<int>(rng() % 4),
                         1 + static_cast<int>(rng() % 4), 5, rng);
    CHECK(mat_from_text(5, mat_to_text(m)) == m);
  }
  CHECK(mat_to_text(mat_from_text(3, "1,0;0,2")) == "1,0;0,2");
}
