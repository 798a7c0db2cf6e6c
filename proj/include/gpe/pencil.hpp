#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gpe/linal.hpp"

namespace gpe {

// A tuple (L_1, ..., L_g) of r x s matrices over Z_p presenting the group
// B(L_1, ..., L_g): elements (a, b, c) in Z_p^r x Z_p^s x Z_p^g with
//   (a,b,c)(a',b',c') = (a+a', b+b', c+c'+Lam(a,b')),
//   Lam(a,b')_k = a * L_k * b'^t.
struct Pencil {
  i64 p = 0;
  int r = 0, s = 0, g = 0;
  std::vector<MatFp> mats;

  static Pencil make(i64 p, int r, int s, std::vector<MatFp> mats);
  // dimension of <L_1,...,L_g> inside M_{r x s}
  int span_dim() const;
  bool is_reduced() const { return span_dim() == g; }

  friend bool operator==(const Pencil& a, const Pencil& b) {
    return a.p == b.p && a.r == b.r && a.s == b.s && a.g == b.g &&
           a.mats == b.mats;
  }
};

struct GroupElem {
  std::vector<i64> a, b, c;

  friend bool operator==(const GroupElem& x, const GroupElem& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
  friend bool operator!=(const GroupElem& x, const GroupElem& y) {
    return !(x == y);
  }
  friend bool operator<(const GroupElem& x, const GroupElem& y);
};

GroupElem identity_elem(const Pencil& P);
std::vector<i64> commutation_values(const Pencil& P, const std::vector<i64>& a,
                                    const std::vector<i64>& bprime);
GroupElem multiply(const Pencil& P, const GroupElem& x, const GroupElem& y);
GroupElem inverse(const Pencil& P, const GroupElem& x);
// [x,y] = x^-1 y^-1 x y = (0, 0, (a L_k b'^t - a' L_k b^t)_k)
GroupElem commutator(const Pencil& P, const GroupElem& x, const GroupElem& y);
GroupElem random_elem(const Pencil& P, std::mt19937_64& rng);

// A candidate homomorphism B(P1) -> B(P2) acting blockwise,
// (a,b,c) -> (a*R, b*S, c*T). All subgroup/quotient/isomorphism
// constructors return one of these alongside the new pencil so callers can
// verify instead of trust.
struct BlockMap {
  MatFp R, S, T;

  GroupElem apply(const GroupElem& x) const;
  // this: B(P1)->B(P2), then m2: B(P2)->B(P3)
  BlockMap then(const BlockMap& m2) const;
  BlockMap inverted() const;  // all three matrices must be invertible
  bool is_injective() const;
  bool is_surjective() const;
};

// Exact criterion: (a,b,c) -> (aR,bS,cT) is a homomorphism B(P1) -> B(P2)
// iff R * L2_k * S^t = sum_j T[j][k] * L1_j for every k.
bool is_homomorphism(const BlockMap& m, const Pencil& P1, const Pencil& P2);

struct SubgroupWitness {
  Pencil pencil;
  BlockMap inclusion;  // injective B(pencil) -> B(parent)
};
struct QuotientWitness {
  Pencil pencil;
  BlockMap projection;  // surjective B(parent) -> B(pencil)
};
struct IsoWitness {
  Pencil pencil;
  BlockMap iso;  // bijective B(pencil) -> B(parent)
};

// Restrict the dropped a/b coordinates to zero. drop_mats may only name
// matrices that are zero after the row/column drops (else
// std::invalid_argument). Index sets are 0-based.
SubgroupWitness eliminate(const Pencil& P, const std::vector<int>& drop_rows,
                          const std::vector<int>& drop_cols,
                          const std::vector<int>& drop_mats);

// Quotient by linear combinations: new matrices sum_j A[i][j] * L_j for a
// g' x g matrix A; witness (a,b,c) -> (a, b, c*A^t).
QuotientWitness combine(const Pencil& P, const MatFp& A);

// B(L_1,...,L_g) ~ B(X L_1 Y^t, ..., X L_g Y^t) for invertible X, Y;
// witness (a,b,c) -> (aX, bY, c) from the transformed group into B(P).
IsoWitness transform(const Pencil& P, const MatFp& X, const MatFp& Y);

struct Embedding {
  Pencil sub;   // (I_f, companion_std(b))
  Pencil big;   // (I_e, companion_std(a))
  BlockMap map;  // injective homomorphism B(sub) -> B(big)
};

// Embedding of B(I_f, C(b)) into B(I_e, C(a)) for monic b, a with
// deg b < deg a, built from column/row insertions and the lower-triangular
// basis change that straightens the companion strip.
Embedding embed_lower(const PolyFp& b, const PolyFp& a);

struct GroupDescriptor {
  i64 order = 1;
  int d = 0;                // minimal generator count, log_p |G : Phi(G)|
  i64 frattini_index = 1;   // p^d
  i64 center_order = 1;
  i64 derived_order = 1;
  i64 exponent = 1;
  // noncentral conjugacy class size -> number of classes of that size
  std::map<i64, i64> class_sizes;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.order == b.order && a.d == b.d &&
           a.frattini_index == b.frattini_index &&
           a.center_order == b.center_order &&
           a.derived_order == b.derived_order && a.exponent == b.exponent &&
           a.class_sizes == b.class_sizes;
  }
};

// Structural invariants from rank computations; p must be odd (exponent-p
// arithmetic relies on it). Class sizes come from the ranks of the per-
// element commutation maps; cost O(p^{r+s}) rank computations.
GroupDescriptor descriptor(const Pencil& P);

// "p r s g" header, then the g matrices in matrix text format separated by
// blank lines.
std::string pencil_to_text(const Pencil& P);
Pencil pencil_from_text(const std::string& text);

}  // namespace gpe
