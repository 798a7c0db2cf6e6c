#include "gpe/fp.hpp"

#include <sstream>
#include <stdexcept>

namespace gpe {

i64 normmod(i64 v, i64 p) {
  i64 r = v % p;
  return r < 0 ? r + p : r;
}

i64 addmod(i64 a, i64 b, i64 p) { return (a + b) % p; }
i64 submod(i64 a, i64 b, i64 p) { return normmod(a - b, p); }
i64 mulmod(i64 a, i64 b, i64 p) { return (a * b) % p; }

i64 powmod(i64 a, i64 e, i64 p) {
  a = normmod(a, p);
  i64 r = 1 % p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) {
  a = normmod(a, p);
  if (a == 0) throw std::domain_error("invmod: division by zero");
  // extended Euclid
  i64 old_r = p, r = a, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return normmod(old_t, p);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 ipow(i64 base, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

PolyFp::PolyFp(i64 p, std::vector<i64> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("PolyFp: modulus must be >= 2");
  for (auto& c : coeffs_) c = normmod(c, p);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyFp PolyFp::monic() const {
  if (is_zero()) throw std::domain_error("monic: zero polynomial");
  i64 inv = invmod(coeffs_.back(), p_);
  std::vector<i64> c(coeffs_);
  for (auto& v : c) v = mulmod(v, inv, p_);
  return PolyFp(p_, std::move(c));
}

i64 PolyFp::eval(i64 x) const {
  i64 r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = normmod(r * x + *it, p_);
  return r;
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  i64 p = a.p_ ? a.p_ : b.p_;
  std::vector<i64> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    i64 x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
    i64 y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
    c[i] = addmod(x, y, p);
  }
  return PolyFp(p, std::move(c));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  i64 p = a.p_ ? a.p_ : b.p_;
  std::vector<i64> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    i64 x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
    i64 y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
    c[i] = submod(x, y, p);
  }
  return PolyFp(p, std::move(c));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  i64 p = a.p_ ? a.p_ : b.p_;
  if (a.is_zero() || b.is_zero()) return PolyFp::zero(p);
  std::vector<i64> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = normmod(c[i + j] + a.coeffs_[i] * b.coeffs_[j], p);
  return PolyFp(p, std::move(c));
}

std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
  i64 p = b.p();
  std::vector<i64> rem(a.coeffs());
  std::vector<i64> quo;
  int db = b.degree();
  i64 lead_inv = invmod(b.coeffs().back(), p);
  int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {PolyFp::zero(p), a};
  quo.assign(da - db + 1, 0);
  for (int k = da; k >= db; --k) {
    i64 c = mulmod(normmod(rem[k], p), lead_inv, p);
    quo[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[k - db + j] = submod(rem[k - db + j], mulmod(c, b.at(j), p), p);
  }
  return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp poly_gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a, y = b;
  while (!y.is_zero()) {
    PolyFp r = poly_divmod(x, y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

PolyFp poly_lcm(const PolyFp& a, const PolyFp& b) {
  if (a.is_zero() || b.is_zero()) return PolyFp::zero(a.p() ? a.p() : b.p());
  PolyFp g = poly_gcd(a, b);
  return (poly_divmod(a * b, g).first).monic();
}

std::string poly_to_text(const PolyFp& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  for (int i = 0; i <= a.degree(); ++i) {
    if (i) os << ',';
    os << a.at(i);
  }
  return os.str();
}

PolyFp poly_from_text(i64 p, const std::string& text) {
  std::vector<i64> c;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("poly_from_text: empty entry");
    c.push_back(std::stoll(tok));
  }
  return PolyFp(p, std::move(c));
}

}  // namespace gpe
