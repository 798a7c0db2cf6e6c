#pragma once

#include <optional>
#include <random>
#include <vector>

#include "gpe/heisenberg.hpp"

namespace gpe {

struct IsoCertificate {
  SubspaceFp n1, n2;
  GammaElem gamma;  // gamma(n1) == n2
  AutElem lifted;   // automorphism of H inducing H/N1 -> H/N2
};

struct IsoResult {
  bool iso = false;
  std::optional<IsoCertificate> cert;
};

// Exhaustive search over the e(p^e - 1) semilinear maps: ISO with a
// certificate iff some gamma carries N1 onto N2. Completeness rests on the
// lifting theorem for genus > 1 quotients; the Burnside identity in
// classify_family cross-checks it.
IsoResult iso_test(const HeisenbergCtx& ctx, const SubspaceFp& n1,
                   const SubspaceFp& n2);

// Lexicographically least RREF basis over the gamma-orbit of N. Equal
// labels iff iso_test reports ISO.
SubspaceFp canonical_label(const HeisenbergCtx& ctx, const SubspaceFp& N);

struct OrbitRecord {
  SubspaceFp label;
  i64 size = 0;
  PolyFp a;  // minimal polynomial of the orbit representative's member
};

struct Classification {
  i64 p = 0;
  int e = 0;
  PolyFp modulus;
  i64 member_count = 0;
  i64 class_count = 0;
  i64 burnside_count = 0;  // (1/|Gamma|) * sum_gamma |fixed subspaces|
  std::vector<OrbitRecord> orbits;
  std::vector<FamilyMember> members;
  std::vector<SubspaceFp> labels;  // per member, same order as members
};

// Full orbit partition of the family at (p, e) plus the independent
// Burnside count; the two must agree. Refuses p^e > scale_guard.
Classification classify_family(i64 p, int e, i64 seed,
                               i64 scale_guard = i64(1) << 20);

// Independent route: orbit count via the Cauchy-Frobenius average of fixed
// points over the full gamma group.
i64 burnside_orbit_count(const FqField& field,
                         const std::vector<SubspaceFp>& subspaces);

// True iff gamma maps n1 onto n2, the lift induces it (checked on a basis
// of the center), the lift is multiplicative on sampled pairs, and
// conjugation by the lift's linear part preserves the adjoint algebra of
// the commutation bimap.
bool verify_certificate(const HeisenbergCtx& ctx, const IsoCertificate& cert,
                        std::mt19937_64& rng, int samples = 200);

}  // namespace gpe
