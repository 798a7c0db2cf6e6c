#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "gpe/adjoint.hpp"
#include "gpe/fq.hpp"
#include "gpe/pencil.hpp"

namespace gpe {

// H(F_q) presented as the Brahana group of the field's structure pencil
// (genus e, r = s = e).
struct HeisenbergCtx {
  FqField field;
  Pencil pencil;
};

HeisenbergCtx build_heisenberg(const FqField& field);

// Reference model: 3x3 upper unitriangular matrix over F_q, kept as the
// three strictly-upper entries.
struct HeisMatrix {
  FqElem alpha, beta, gamma;
};

HeisMatrix hmat_mul(const FqField& F, const HeisMatrix& x, const HeisMatrix& y);
// The correspondence (a, b, c) -> [[1, a^, c^], [0, 1, b^], [0, 0, 1]] with
// hats the coordinate identifications on the basis 1, w, ..., w^{e-1}.
HeisMatrix brahana_to_matrix(const HeisenbergCtx& ctx, const GroupElem& x);

// All codimension-2 subspaces of Z_p^e in canonical RREF form, fixed
// deterministic order. Requires e >= 2.
std::vector<SubspaceFp> enum_codim2(const FqField& field);

struct FamilyMember {
  SubspaceFp N;          // dim e-2 inside the field's coordinate space
  Pencil raw;            // (L_1, L_2) from the chosen complement projection
  Pencil normalized;     // (I_e, companion_std(a))
  PolyFp a;              // irreducible of degree e
  std::pair<int, int> complement;  // 0-based coordinate pair completing N
};

// Quotient H/N as a genus-2 pencil via the commutation correspondence:
// project the structure pencil along a complement of N (the
// lexicographically least coordinate pair completing N), then normalize to
// (I_e, companion_std(a)). Normalization failure (reducible or low-degree
// minimal polynomial) is an internal-consistency error.
FamilyMember quotient_pencil(const HeisenbergCtx& ctx, const SubspaceFp& N);

// Automorphism datum: an additive map tau : F_q^2 -> F_q (as a 2e x e
// matrix over Z_p on row coordinates), an invertible 2x2 matrix
// (alpha beta; gamma delta) over F_q, and a Frobenius exponent.
struct AutElem {
  MatFp tau;                    // 2e x e
  std::array<FqElem, 4> mat2;   // alpha, beta, gamma, delta
  int frob_k = 0;
};

AutElem aut_identity(const HeisenbergCtx& ctx);
AutElem random_aut(const HeisenbergCtx& ctx, std::mt19937_64& rng);
FqElem aut_det(const HeisenbergCtx& ctx, const AutElem& phi);

// The automorphism with constituents phi:
//   alpha' -> s(alpha' alpha + beta' gamma),
//   beta'  -> s(alpha' beta + beta' delta),
//   center -> s(det * center + tau(alpha', beta')),
// where s is the frob_k-th Frobenius power and the center coordinate is
// read in the half-twisted chart c - ab/2 that makes the displayed map
// multiplicative for every additive tau (p odd).
GroupElem aut_apply(const HeisenbergCtx& ctx, const AutElem& phi,
                    const GroupElem& x);

// Matrix of the induced map on H/H' = Z_p^{2e} (row action).
MatFp aut_linear_matrix(const HeisenbergCtx& ctx, const AutElem& phi);

// Opt-in verification that phi is an automorphism: exhaustive over all
// element pairs when exhaustive = true (quadratic in |H|), otherwise the
// given number of random pairs.
bool aut_verify(const HeisenbergCtx& ctx, const AutElem& phi, bool exhaustive,
                int samples, std::mt19937_64& rng);

// Semilinear map x -> s^k(lambda x) on F_q; the action of Aut(H) on H'.
struct GammaElem {
  FqElem lambda;  // nonzero
  int frob_k = 0;
};

// All e * (p^e - 1) elements in deterministic order.
std::vector<GammaElem> gamma_group(const FqField& field);
MatFp gamma_matrix(const FqField& field, const GammaElem& g);
SubspaceFp gamma_apply(const FqField& field, const GammaElem& g,
                       const SubspaceFp& N);
// apply g1 first, then g2
GammaElem gamma_compose(const FqField& field, const GammaElem& g1,
                        const GammaElem& g2);
// Eq-style lift: mat2 = diag(lambda, 1), Frobenius part k, tau = 0, whose
// induced action on H' is exactly g.
AutElem gamma_lift(const HeisenbergCtx& ctx, const GammaElem& g);

}  // namespace gpe
