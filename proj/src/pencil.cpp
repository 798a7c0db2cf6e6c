#include "gpe/pencil.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpe {

Pencil Pencil::make(i64 p, int r, int s, std::vector<MatFp> mats) {
  Pencil P;
  P.p = p;
  P.r = r;
  P.s = s;
  P.g = static_cast<int>(mats.size());
  for (const auto& m : mats) {
    if (m.rows() != r || m.cols() != s || m.p() != p)
      throw std::invalid_argument("Pencil: matrix dimensions disagree");
  }
  P.mats = std::move(mats);
  return P;
}

int Pencil::span_dim() const {
  if (g == 0) return 0;
  MatFp flat(0, r * s, p);
  for (const auto& m : mats) flat = flat.vstack(m.flattened());
  return rank(flat);
}

bool operator<(const GroupElem& x, const GroupElem& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.c < y.c;
}

GroupElem identity_elem(const Pencil& P) {
  return GroupElem{std::vector<i64>(P.r, 0), std::vector<i64>(P.s, 0),
                   std::vector<i64>(P.g, 0)};
}

std::vector<i64> commutation_values(const Pencil& P, const std::vector<i64>& a,
                                    const std::vector<i64>& bprime) {
  std::vector<i64> c(P.g, 0);
  for (int k = 0; k < P.g; ++k) {
    const MatFp& L = P.mats[k];
    i64 acc = 0;
    for (int i = 0; i < P.r; ++i) {
      if (!a[i]) continue;
      i64 rowacc = 0;
      for (int j = 0; j < P.s; ++j)
        rowacc = normmod(rowacc + L.at(i, j) * bprime[j], P.p);
      acc = normmod(acc + a[i] * rowacc, P.p);
    }
    c[k] = acc;
  }
  return c;
}

static void check_conform(const Pencil& P, const GroupElem& x) {
  if (static_cast<int>(x.a.size()) != P.r || static_cast<int>(x.b.size()) != P.s ||
      static_cast<int>(x.c.size()) != P.g)
    throw std::invalid_argument("GroupElem does not conform to pencil");
}

GroupElem multiply(const Pencil& P, const GroupElem& x, const GroupElem& y) {
  check_conform(P, x);
  check_conform(P, y);
  GroupElem z = identity_elem(P);
  for (int i = 0; i < P.r; ++i) z.a[i] = addmod(x.a[i], y.a[i], P.p);
  for (int i = 0; i < P.s; ++i) z.b[i] = addmod(x.b[i], y.b[i], P.p);
  std::vector<i64> lam = commutation_values(P, x.a, y.b);
  for (int k = 0; k < P.g; ++k)
    z.c[k] = normmod(x.c[k] + y.c[k] + lam[k], P.p);
  return z;
}

GroupElem inverse(const Pencil& P, const GroupElem& x) {
  check_conform(P, x);
  GroupElem z = identity_elem(P);
  for (int i = 0; i < P.r; ++i) z.a[i] = submod(0, x.a[i], P.p);
  for (int i = 0; i < P.s; ++i) z.b[i] = submod(0, x.b[i], P.p);
  std::vector<i64> lam = commutation_values(P, x.a, x.b);
  for (int k = 0; k < P.g; ++k) z.c[k] = submod(lam[k], x.c[k], P.p);
  return z;
}

GroupElem commutator(const Pencil& P, const GroupElem& x, const GroupElem& y) {
  check_conform(P, x);
  check_conform(P, y);
  GroupElem z = identity_elem(P);
  std::vector<i64> xy = commutation_values(P, x.a, y.b);
  std::vector<i64> yx = commutation_values(P, y.a, x.b);
  for (int k = 0; k < P.g; ++k) z.c[k] = submod(xy[k], yx[k], P.p);
  return z;
}

GroupElem random_elem(const Pencil& P, std::mt19937_64& rng) {
  GroupElem x = identity_elem(P);
  for (auto& v : x.a) v = static_cast<i64>(rng() % P.p);
  for (auto& v : x.b) v = static_cast<i64>(rng() % P.p);
  for (auto& v : x.c) v = static_cast<i64>(rng() % P.p);
  return x;
}

GroupElem BlockMap::apply(const GroupElem& x) const {
  auto map_vec = [](const std::vector<i64>& v, const MatFp& m) {
    std::vector<i64> r(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i) {
      if (!v[i]) continue;
      for (int j = 0; j < m.cols(); ++j)
        r[j] = normmod(r[j] + v[i] * m.at(i, j), m.p());
    }
    return r;
  };
  return GroupElem{map_vec(x.a, R), map_vec(x.b, S), map_vec(x.c, T)};
}

BlockMap BlockMap::then(const BlockMap& m2) const {
  return BlockMap{R * m2.R, S * m2.S, T * m2.T};
}

BlockMap BlockMap::inverted() const {
  return BlockMap{inverse(R), inverse(S), inverse(T)};
}

bool BlockMap::is_injective() const {
  return rank(R) == R.rows() && rank(S) == S.rows() && rank(T) == T.rows();
}

bool BlockMap::is_surjective() const {
  return rank(R) == R.cols() && rank(S) == S.cols() && rank(T) == T.cols();
}

bool is_homomorphism(const BlockMap& m, const Pencil& P1, const Pencil& P2) {
  // Lam2(aR, bS) = Lam1(a, b) * T, i.e. R L2_k S^t = sum_j T[j][k] L1_j
  for (int k = 0; k < P2.g; ++k) {
    MatFp lhs = m.R * P2.mats[k] * m.S.transpose();
    MatFp rhs(P1.r, P1.s, P1.p);
    for (int j = 0; j < P1.g; ++j) rhs = rhs + P1.mats[j].scaled(m.T.at(j, k));
    if (lhs != rhs) return false;
  }
  return true;
}

SubgroupWitness eliminate(const Pencil& P, const std::vector<int>& drop_rows,
                          const std::vector<int>& drop_cols,
                          const std::vector<int>& drop_mats) {
  std::set<int> dr(drop_rows.begin(), drop_rows.end());
  std::set<int> dc(drop_cols.begin(), drop_cols.end());
  std::set<int> dm(drop_mats.begin(), drop_mats.end());
  for (int i : dr)
    if (i < 0 || i >= P.r) throw std::invalid_argument("eliminate: row index");
  for (int j : dc)
    if (j < 0 || j >= P.s) throw std::invalid_argument("eliminate: col index");
  for (int k : dm)
    if (k < 0 || k >= P.g) throw std::invalid_argument("eliminate: mat index");

  std::vector<int> keep_r, keep_c, keep_m;
  for (int i = 0; i < P.r; ++i)
    if (!dr.count(i)) keep_r.push_back(i);
  for (int j = 0; j < P.s; ++j)
    if (!dc.count(j)) keep_c.push_back(j);
  for (int k = 0; k < P.g; ++k)
    if (!dm.count(k)) keep_m.push_back(k);

  auto shrink = [&](const MatFp& L) {
    MatFp m(static_cast<int>(keep_r.size()), static_cast<int>(keep_c.size()), P.p);
    for (size_t i = 0; i < keep_r.size(); ++i)
      for (size_t j = 0; j < keep_c.size(); ++j)
        m.set(static_cast<int>(i), static_cast<int>(j), L.at(keep_r[i], keep_c[j]));
    return m;
  };
  // a dropped matrix must vanish after the row/column drops, else the c
  // coordinate cannot be restricted
  for (int k : dm)
    if (!shrink(P.mats[k]).is_zero())
      throw std::invalid_argument("eliminate: dropped matrix is not zero");

  std::vector<MatFp> mats;
  for (int k : keep_m) mats.push_back(shrink(P.mats[k]));
  Pencil sub = Pencil::make(P.p, static_cast<int>(keep_r.size()),
                            static_cast<int>(keep_c.size()), std::move(mats));

  auto inclusion = [&](const std::vector<int>& keep, int big) {
    MatFp m(static_cast<int>(keep.size()), big, P.p);
    for (size_t i = 0; i < keep.size(); ++i) m.set(static_cast<int>(i), keep[i], 1);
    return m;
  };
  BlockMap incl{inclusion(keep_r, P.r), inclusion(keep_c, P.s),
                inclusion(keep_m, P.g)};
  return SubgroupWitness{std::move(sub), std::move(incl)};
}

QuotientWitness combine(const Pencil& P, const MatFp& A) {
  if (A.cols() != P.g) throw std::invalid_argument("combine: A must have g columns");
  std::vector<MatFp> mats;
  for (int i = 0; i < A.rows(); ++i) {
    MatFp m(P.r, P.s, P.p);
    for (int j = 0; j < P.g; ++j) m = m + P.mats[j].scaled(A.at(i, j));
    mats.push_back(std::move(m));
  }
  Pencil quo = Pencil::make(P.p, P.r, P.s, std::move(mats));
  BlockMap proj{MatFp::identity(P.r, P.p), MatFp::identity(P.s, P.p),
                A.transpose()};
  return QuotientWitness{std::move(quo), std::move(proj)};
}

IsoWitness transform(const Pencil& P, const MatFp& X, const MatFp& Y) {
  if (!is_invertible(X) || !is_invertible(Y))
    throw std::invalid_argument("transform: X and Y must be invertible");
  std::vector<MatFp> mats;
  for (const auto& L : P.mats) mats.push_back(X * L * Y.transpose());
  Pencil Q = Pencil::make(P.p, P.r, P.s, std::move(mats));
  BlockMap iso{X, Y, MatFp::identity(P.g, P.p)};
  return IsoWitness{std::move(Q), std::move(iso)};
}

Embedding embed_lower(const PolyFp& b, const PolyFp& a) {
  if (!b.is_monic() || !a.is_monic())
    throw std::invalid_argument("embed_lower: polynomials must be monic");
  int f = b.degree(), e = a.degree();
  if (f < 1 || f >= e) throw std::invalid_argument("embed_lower: need 1 <= deg b < deg a");
  i64 p = a.p();

  // one degree step: B(I_d, C(c)) -> B(I_{d+1}, C(cnext)); column insertion
  // lands on the companion strip with last row equal to C(c)'s, the
  // unit lower-triangular Y straightens that strip, and a row insertion
  // reaches the degree-(d+1) companion pair.
  auto one_step = [&](const PolyFp& c, const PolyFp& cnext) {
    int d = c.degree();
    Pencil big = Pencil::make(
        p, d + 1, d + 1, {MatFp::identity(d + 1, p), companion_std(cnext)});
    // drop the last row: strips S1 = [I_d | 0], S2 = shifted diagonal
    SubgroupWitness rows = eliminate(big, {d}, {}, {});
    // Y: identity with last row (last row of C(c), 1); S_i * Y recovers the
    // strips whose last-column drop is (I_d, C(c))
    MatFp Y = MatFp::identity(d + 1, p);
    MatFp Cc = companion_std(c);
    for (int j = 0; j < d; ++j) Y.set(d, j, Cc.at(d - 1, j));
    IsoWitness tw = transform(rows.pencil, MatFp::identity(d, p), Y.transpose());
    // tw.pencil has matrices S_i * Y; dropping its last column gives
    // (I_d, C(c)) exactly
    SubgroupWitness cols = eliminate(tw.pencil, {}, {d}, {});
    if (!(cols.pencil == Pencil::make(p, d, d, {MatFp::identity(d, p), Cc})))
      throw std::logic_error("embed_lower: step does not reach the companion pair");
    BlockMap step = cols.inclusion.then(tw.iso).then(rows.inclusion);
    return std::pair<Pencil, BlockMap>(big, step);
  };

  // intermediate polynomials are free; use t^d for the canonical chain
  PolyFp cur = b;
  BlockMap total{MatFp::identity(f, p), MatFp::identity(f, p),
                 MatFp::identity(2, p)};
  Pencil big = Pencil::make(p, f, f, {MatFp::identity(f, p), companion_std(b)});
  for (int d = f; d < e; ++d) {
    PolyFp nxt = (d + 1 == e) ? a : [&] {
      std::vector<i64> c(d + 2, 0);
      c[d + 1] = 1;
      return PolyFp(p, c);
    }();
    auto [bigger, step] = one_step(cur, nxt);
    total = total.then(step);
    big = bigger;
    cur = nxt;
  }
  Pencil sub = Pencil::make(p, f, f, {MatFp::identity(f, p), companion_std(b)});
  return Embedding{std::move(sub), std::move(big), std::move(total)};
}

GroupDescriptor descriptor(const Pencil& P) {
  if (P.p % 2 == 0) throw std::invalid_argument("descriptor: p must be odd");
  GroupDescriptor d;
  d.order = ipow(P.p, P.r + P.s + P.g);
  int span = P.span_dim();
  d.derived_order = ipow(P.p, span);
  d.d = P.r + P.s + P.g - span;  // Phi(G) = G' for odd p, exponent p
  d.frattini_index = ipow(P.p, d.d);

  // center: left and right radicals of the pencil, central coordinates free
  MatFp left(P.r, P.g * P.s, P.p);   // a -> (a L_k)_k stacked
  MatFp right(P.s, P.g * P.r, P.p);  // b -> (L_k b^t)_k stacked
  for (int k = 0; k < P.g; ++k)
    for (int i = 0; i < P.r; ++i)
      for (int j = 0; j < P.s; ++j) {
        left.set(i, k * P.s + j, P.mats[k].at(i, j));
        right.set(j, k * P.r + i, P.mats[k].at(i, j));
      }
  int lrad = P.r - rank(left);
  int rrad = P.s - rank(right);
  d.center_order = ipow(P.p, lrad + rrad + P.g);
  d.exponent = d.order == 1 ? 1 : P.p;

  // class of (a,b,*) has size p^rank of the map y -> [x,y]; rows of that
  // map are (-b L_k^t | a L_k)
  i64 nab = ipow(P.p, P.r + P.s);
  std::map<i64, i64> elems_by_size;  // class size -> element count
  std::vector<i64> a(P.r), b(P.s);
  for (i64 idx = 0; idx < nab; ++idx) {
    i64 t = idx;
    for (int i = 0; i < P.r; ++i) {
      a[i] = t % P.p;
      t /= P.p;
    }
    for (int j = 0; j < P.s; ++j) {
      b[j] = t % P.p;
      t /= P.p;
    }
    MatFp mx(P.g, P.r + P.s, P.p);
    for (int k = 0; k < P.g; ++k) {
      const MatFp& L = P.mats[k];
      for (int i = 0; i < P.r; ++i) {
        i64 acc = 0;
        for (int j = 0; j < P.s; ++j) acc = normmod(acc + L.at(i, j) * b[j], P.p);
        mx.set(k, i, submod(0, acc, P.p));
      }
      for (int j = 0; j < P.s; ++j) {
        i64 acc = 0;
        for (int i = 0; i < P.r; ++i) acc = normmod(acc + a[i] * L.at(i, j), P.p);
        mx.set(k, P.r + j, acc);
      }
    }
    i64 size = ipow(P.p, rank(mx));
    elems_by_size[size] += ipow(P.p, P.g);
  }
  for (auto& [size, count] : elems_by_size) {
    if (size == 1) continue;  // central elements
    d.class_sizes[size] = count / size;
  }
  return d;
}

std::string pencil_to_text(const Pencil& P) {
  std::ostringstream os;
  os << P.p << ' ' << P.r << ' ' << P.s << ' ' << P.g << '\n';
  for (int k = 0; k < P.g; ++k) {
    os << mat_to_text(P.mats[k]) << '\n';
    if (k + 1 < P.g) os << '\n';
  }
  return os.str();
}

Pencil pencil_from_text(const std::string& text) {
  std::istringstream is(text);
  i64 p;
  int r, s, g;
  if (!(is >> p >> r >> s >> g))
    throw std::invalid_argument("pencil_from_text: bad header");
  std::string line;
  std::getline(is, line);  // rest of header line
  std::vector<MatFp> mats;
  std::string block;
  auto flush = [&]() {
    if (block.empty()) return;
    mats.push_back(mat_from_text(p, block));
    block.clear();
  };
  while (std::getline(is, line)) {
    if (line.empty()) {
      flush();
    } else {
      if (!block.empty()) block += ';';
      block += line;
    }
  }
  flush();
  if (static_cast<int>(mats.size()) != g)
    throw std::invalid_argument("pencil_from_text: matrix count mismatch");
  return Pencil::make(p, r, s, std::move(mats));
}

}  // namespace gpe
