#include "gpe/fq.hpp"

#include <stdexcept>

namespace gpe {

FqField::FqField(i64 p, int e, const PolyFp& modulus)
    : p_(p), e_(e), modulus_(modulus) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("FqField: p must be an odd prime");
  if (e < 1) throw std::invalid_argument("FqField: e must be >= 1");
  if (modulus.p() != p || modulus.degree() != e || !modulus.is_monic())
    throw std::invalid_argument("FqField: modulus must be monic of degree e");
  if (!poly_irreducible(modulus))
    throw std::invalid_argument("FqField: modulus is reducible");
  q_ = ipow(p, e);

  // structure constants: w^i * w^j mod m(t), coefficients into M^{(k)}
  struct_.assign(e, MatFp(e, e, p));
  PolyFp t = PolyFp::x(p);
  std::vector<PolyFp> pw(2 * e - 1, PolyFp::constant(p, 1));
  for (int i = 1; i < 2 * e - 1; ++i)
    pw[i] = poly_divmod(pw[i - 1] * t, modulus_).second;
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      const PolyFp& prod = pw[i + j];
      for (int k = 0; k < e; ++k) struct_[k].set(i, j, prod.at(k));
    }
}

FqElem FqField::zero() const { return FqElem{std::vector<i64>(e_, 0)}; }

FqElem FqField::one() const {
  FqElem x = zero();
  x.coords[0] = 1;
  return x;
}

FqElem FqField::omega() const {
  if (e_ == 1) {
    // the class of t is a scalar: t = -m0
    FqElem x = zero();
    x.coords[0] = submod(0, modulus_.at(0), p_);
    return x;
  }
  FqElem x = zero();
  x.coords[1] = 1;
  return x;
}

FqElem FqField::from_coords(std::vector<i64> c) const {
  if (static_cast<int>(c.size()) != e_)
    throw std::invalid_argument("FqField: coordinate length mismatch");
  for (auto& v : c) v = normmod(v, p_);
  return FqElem{std::move(c)};
}

FqElem FqField::from_index(i64 idx) const {
  std::vector<i64> c(e_);
  for (int i = 0; i < e_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  return FqElem{std::move(c)};
}

i64 FqField::to_index(const FqElem& x) const {
  i64 idx = 0;
  for (int i = e_ - 1; i >= 0; --i) idx = idx * p_ + x.coords[i];
  return idx;
}

bool FqField::is_zero(const FqElem& x) const {
  for (i64 v : x.coords)
    if (v) return false;
  return true;
}

FqElem FqField::add(const FqElem& x, const FqElem& y) const {
  FqElem z = zero();
  for (int i = 0; i < e_; ++i) z.coords[i] = addmod(x.coords[i], y.coords[i], p_);
  return z;
}

FqElem FqField::sub(const FqElem& x, const FqElem& y) const {
  FqElem z = zero();
  for (int i = 0; i < e_; ++i) z.coords[i] = submod(x.coords[i], y.coords[i], p_);
  return z;
}

FqElem FqField::neg(const FqElem& x) const { return sub(zero(), x); }

FqElem FqField::mul(const FqElem& x, const FqElem& y) const {
  // (x*y)_k = x * M^{(k)} * y^t
  FqElem z = zero();
  for (int k = 0; k < e_; ++k) {
    i64 acc = 0;
    const MatFp& M = struct_[k];
    for (int i = 0; i < e_; ++i) {
      if (!x.coords[i]) continue;
      i64 rowacc = 0;
      for (int j = 0; j < e_; ++j) rowacc = normmod(rowacc + M.at(i, j) * y.coords[j], p_);
      acc = normmod(acc + x.coords[i] * rowacc, p_);
    }
    z.coords[k] = acc;
  }
  return z;
}

FqElem FqField::scal(i64 c, const FqElem& x) const {
  FqElem z = zero();
  c = normmod(c, p_);
  for (int i = 0; i < e_; ++i) z.coords[i] = mulmod(c, x.coords[i], p_);
  return z;
}

FqElem FqField::pow(const FqElem& x, i64 n) const {
  if (n < 0) return pow(inv(x), -n);
  FqElem r = one(), b = x;
  while (n > 0) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

FqElem FqField::inv(const FqElem& x) const {
  if (is_zero(x)) throw std::domain_error("FqField::inv: division by zero");
  // extended Euclid in Z_p[t] against the modulus
  PolyFp a(p_, x.coords);
  PolyFp r0 = modulus_, r1 = a;
  PolyFp t0 = PolyFp::zero(p_), t1 = PolyFp::constant(p_, 1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    PolyFp nt = t0 - q * t1;
    r0 = r1;
    r1 = r;
    t0 = t1;
    t1 = nt;
  }
  // r0 is a nonzero constant gcd
  i64 c = invmod(r0.at(0), p_);
  std::vector<i64> coords(e_, 0);
  for (int i = 0; i <= t0.degree(); ++i) coords[i] = mulmod(t0.at(i), c, p_);
  return FqElem{std::move(coords)};
}

FqElem FqField::frobenius(const FqElem& x, int k) const {
  if (k < 0 || k >= e_) throw std::invalid_argument("frobenius: need 0 <= k < e");
  FqElem r = x;
  for (int i = 0; i < k; ++i) r = pow(r, p_);
  return r;
}

MatFp FqField::mult_matrix(const FqElem& x) const {
  MatFp m(e_, e_, p_);
  for (int i = 0; i < e_; ++i) {
    FqElem wi = zero();
    wi.coords[i] = 1;
    FqElem prod = mul(wi, x);
    for (int j = 0; j < e_; ++j) m.set(i, j, prod.coords[j]);
  }
  return m;
}

MatFp FqField::frobenius_matrix(int k) const {
  MatFp m(e_, e_, p_);
  for (int i = 0; i < e_; ++i) {
    FqElem wi = zero();
    wi.coords[i] = 1;
    FqElem img = frobenius(wi, k);
    for (int j = 0; j < e_; ++j) m.set(i, j, img.coords[j]);
  }
  return m;
}

PolyFp find_irreducible(i64 p, int e, i64 seed) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("find_irreducible: p must be an odd prime");
  if (e < 1) throw std::invalid_argument("find_irreducible: e must be >= 1");
  i64 total = ipow(p, e);
  i64 start = normmod(seed, total);
  for (i64 off = 0; off < total; ++off) {
    i64 idx = (start + off) % total;
    std::vector<i64> c(e + 1, 0);
    i64 t = idx;
    for (int k = 0; k < e; ++k) {
      c[k] = t % p;
      t /= p;
    }
    c[e] = 1;
    PolyFp cand(p, c);
    if (e == 1 || poly_irreducible(cand)) return cand;
  }
  throw std::logic_error("find_irreducible: exhausted search space");
}

}  // namespace gpe
