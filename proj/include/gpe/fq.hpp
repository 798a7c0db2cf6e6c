#pragma once

#include <string>
#include <vector>

#include "gpe/linal.hpp"

namespace gpe {

// Element of F_{p^e}: coordinates on the basis 1, w, ..., w^{e-1}.
struct FqElem {
  std::vector<i64> coords;

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.coords == b.coords;
  }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }
};

// The field F_{p^e} = Z_p[t]/(m(t)) with the multiplication structure
// matrices M^{(k)} satisfying  w^i * w^j = sum_k m_{ij}^{(k)} w^k,
// [M^{(k)}]_{(i+1)(j+1)} = m_{ij}^{(k)}.  M^{(0)} is invertible.
class FqField {
 public:
  FqField(i64 p, int e, const PolyFp& modulus);  // modulus monic irreducible

  i64 p() const { return p_; }
  int e() const { return e_; }
  i64 q() const { return q_; }  // p^e
  const PolyFp& modulus() const { return modulus_; }

  // The e structure matrices; as a tuple they present H(F_q) as a Brahana
  // group.
  const std::vector<MatFp>& structure_matrices() const { return struct_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem omega() const;                       // the class of t
  FqElem from_coords(std::vector<i64> c) const;
  FqElem from_index(i64 idx) const;           // base-p digits, c0 least significant
  i64 to_index(const FqElem& x) const;

  bool is_zero(const FqElem& x) const;
  FqElem add(const FqElem& x, const FqElem& y) const;
  FqElem sub(const FqElem& x, const FqElem& y) const;
  FqElem neg(const FqElem& x) const;
  FqElem mul(const FqElem& x, const FqElem& y) const;
  FqElem scal(i64 c, const FqElem& x) const;
  FqElem inv(const FqElem& x) const;  // throws std::domain_error on zero
  FqElem pow(const FqElem& x, i64 n) const;
  FqElem frobenius(const FqElem& x, int k) const;  // x^(p^k), 0 <= k < e

  // Matrix of y -> y*x on row coordinates: coords(y*x) = coords(y) * mat.
  MatFp mult_matrix(const FqElem& x) const;
  // Matrix of the k-th Frobenius power on row coordinates.
  MatFp frobenius_matrix(int k) const;

 private:
  i64 p_;
  int e_;
  i64 q_;
  PolyFp modulus_;
  std::vector<MatFp> struct_;
};

// Deterministic monic irreducible of degree e over Z_p: the scan starts at
// the base-p encoding `seed mod p^e` of the non-leading coefficients and
// wraps, so seed 0 gives the least monic irreducible under that encoding.
PolyFp find_irreducible(i64 p, int e, i64 seed);

}  // namespace gpe
