#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpe {

using i64 = std::int64_t;

// Arithmetic in Z_p. Values are kept reduced to [0, p); p is an odd prime
// small enough that products fit in an i64.
i64 normmod(i64 v, i64 p);
i64 addmod(i64 a, i64 b, i64 p);
i64 submod(i64 a, i64 b, i64 p);
i64 mulmod(i64 a, i64 b, i64 p);
i64 powmod(i64 a, i64 e, i64 p);
i64 invmod(i64 a, i64 p);  // throws std::domain_error on a == 0 (mod p)

bool is_prime(i64 n);
i64 ipow(i64 base, int e);  // plain integer power, overflow-unchecked

// Dense polynomial over Z_p, coefficients lowest degree first, trailing
// zeros stripped. The zero polynomial has an empty coefficient vector and
// degree() == -1.
class PolyFp {
 public:
  PolyFp() : p_(0) {}
  PolyFp(i64 p, std::vector<i64> coeffs);

  static PolyFp zero(i64 p) { return PolyFp(p, {}); }
  static PolyFp constant(i64 p, i64 c) { return PolyFp(p, {c}); }
  static PolyFp x(i64 p) { return PolyFp(p, {0, 1}); }

  i64 p() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  i64 at(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0;
  }
  const std::vector<i64>& coeffs() const { return coeffs_; }

  PolyFp monic() const;  // divide by leading coefficient; error on zero poly
  i64 eval(i64 x) const;

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend bool operator==(const PolyFp& a, const PolyFp& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const PolyFp& a, const PolyFp& b) { return !(a == b); }

 private:
  i64 p_;
  std::vector<i64> coeffs_;
};

// quotient/remainder with b != 0
std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b);
// monic gcd, gcd(0,0) = 0
PolyFp poly_gcd(const PolyFp& a, const PolyFp& b);
PolyFp poly_lcm(const PolyFp& a, const PolyFp& b);

// "1,0,1" = 1 + t^2 (lowest degree first)
std::string poly_to_text(const PolyFp& a);
PolyFp poly_from_text(i64 p, const std::string& text);

}  // namespace gpe
