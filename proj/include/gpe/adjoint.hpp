#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gpe/pencil.hpp"

namespace gpe {

// Adjoint pair for the bimap u o v = (u L_k v^t)_k of a pencil:
// (uF) o v = u o (vF*), equivalently F L_k = L_k F*^t for every k.
struct AdjPair {
  MatFp F;      // r x r
  MatFp Fstar;  // s x s
};

struct AdjAlgebra {
  Pencil pencil;
  std::vector<AdjPair> basis;  // spans the full solution space
  int dim = 0;
};

// Solve F L_k = L_k F*^t for all k as one homogeneous system over Z_p in
// r^2 + s^2 unknowns. Contains (I, I); closed under
// (F,F*)(G,G*) = (FG, G*F*); its dimension is a pencil isomorphism
// invariant.
AdjAlgebra adjoint_algebra(const Pencil& P);

// The commutation bimap of B(P) on Z_p^{r+s}: genus-g pencil of skew Gram
// matrices [[0, L_k], [-L_k^t, 0]]. Adjoints of this pencil are the
// adjoints of the group commutation.
Pencil commutation_pencil(const Pencil& P);

bool pair_is_adjoint(const Pencil& P, const AdjPair& pr);
bool pairs_in_adjoint(const Pencil& P, const std::vector<AdjPair>& pairs);

// Basis of {F : F L = L F}; dimension deg(min_poly) when the minimal
// polynomial of L is irreducible (the algebra is then the field Z_p[L]).
std::vector<MatFp> centralizer(const MatFp& L);

// Span equality of two adjoint solution spaces (as subspaces of the
// flattened (r^2 + s^2)-dimensional pair space).
bool same_pair_span(const std::vector<AdjPair>& a,
                    const std::vector<AdjPair>& b, int r, int s, i64 p);

struct DirectSumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The decomposition M_{r x s} = <F^t X - X F*> (+) {X : F^t X = X F*} for a
// generating pair set A, with the projector onto the fixed space along the
// relations. Throws DirectSumError when the two subspaces fail to be
// complementary (the theory's hypothesis is then violated and we refuse to
// guess).
struct TensorSpace {
  int r = 0, s = 0;
  i64 p = 0;
  std::vector<AdjPair> gens;
  SubspaceFp relations;  // subspace of the flattened r*s space
  SubspaceFp fixed;
  MatFp projector;  // rs x rs, flat(X) * projector = flat(pi_A(X))
};

TensorSpace tensor_space(const std::vector<AdjPair>& gens, int r, int s,
                         i64 p);

// u (x) v = pi_A(u^t v)
MatFp tensor_product(const TensorSpace& ts, const std::vector<i64>& u,
                     const std::vector<i64>& v);

// The factor map c^ with u o v = c^(u (x) v) when it exists: an rs x g
// matrix applied to flattened projected outer products. Existence coincides
// with A being contained in the adjoint algebra of P (both sides are
// computed independently in the tests).
std::optional<MatFp> factors_through(const Pencil& P,
                                     const std::vector<AdjPair>& gens);

struct HeisQuotientResult {
  bool ok = false;
  std::string reason;     // failing invariant when !ok
  Pencil normalized;      // (I_e, companion_std(a)) when ok
  PolyFp a;               // irreducible of degree e when ok
  BlockMap from_normalized;  // bijective hom B(normalized) -> B(P) when ok
};

// Genus-2 membership test: true iff some invertible member L of the pencil
// span has L^-1 L' with irreducible minimal polynomial of degree e. The
// invertible member is searched over the p+1 projective lines of the span.
HeisQuotientResult is_heisenberg_quotient(const Pencil& P, int e);

}  // namespace gpe
