#include "gpe/isotest.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gpe/parallel.hpp"

namespace gpe {

IsoResult iso_test(const HeisenbergCtx& ctx, const SubspaceFp& n1,
                   const SubspaceFp& n2) {
  const FqField& F = ctx.field;
  const int e = F.e();
  if (n1.ambient() != e || n2.ambient() != e || n1.dim() != e - 2 ||
      n2.dim() != e - 2)
    throw std::invalid_argument("iso_test: subspaces must have codimension 2");
  for (const GammaElem& g : gamma_group(F)) {
    if (gamma_apply(F, g, n1) == n2) {
      IsoCertificate cert{n1, n2, g, gamma_lift(ctx, g)};
      return IsoResult{true, std::move(cert)};
    }
  }
  return IsoResult{false, std::nullopt};
}

SubspaceFp canonical_label(const HeisenbergCtx& ctx, const SubspaceFp& N) {
  const FqField& F = ctx.field;
  SubspaceFp best = N;
  std::vector<i64> best_key = N.key();
  for (const GammaElem& g : gamma_group(F)) {
    SubspaceFp img = gamma_apply(F, g, N);
    std::vector<i64> k = img.key();
    if (k < best_key) {
      best_key = std::move(k);
      best = std::move(img);
    }
  }
  return best;
}

i64 burnside_orbit_count(const FqField& field,
                         const std::vector<SubspaceFp>& subspaces) {
  std::vector<GammaElem> gammas = gamma_group(field);
  i64 total = 0;
  for (const GammaElem& g : gammas) {
    MatFp m = gamma_matrix(field, g);
    for (const SubspaceFp& N : subspaces)
      if (N.image(m) == N) ++total;
  }
  if (total % static_cast<i64>(gammas.size()) != 0)
    throw std::logic_error("burnside_orbit_count: sum of fixed points not divisible by |Gamma|");
  return total / static_cast<i64>(gammas.size());
}

Classification classify_family(i64 p, int e, i64 seed, i64 scale_guard) {
  if (ipow(p, e) > scale_guard)
    throw std::invalid_argument("classify_family: p^e exceeds the scale guard");
  FqField field(p, e, find_irreducible(p, e, seed));
  HeisenbergCtx ctx = build_heisenberg(field);

  Classification c;
  c.p = p;
  c.e = e;
  c.modulus = field.modulus();

  std::vector<SubspaceFp> subspaces = enum_codim2(field);
  c.member_count = static_cast<i64>(subspaces.size());

  // per-subspace work is independent; merge is a deterministic index-keyed
  // reduce afterwards
  c.members.resize(subspaces.size());
  c.labels.resize(subspaces.size());
  parallel_for(static_cast<int>(subspaces.size()), [&](int i) {
    c.members[i] = quotient_pencil(ctx, subspaces[i]);
    c.labels[i] = canonical_label(ctx, subspaces[i]);
  });

  std::map<std::vector<i64>, OrbitRecord> orbit_map;
  for (size_t i = 0; i < subspaces.size(); ++i) {
    const SubspaceFp& label = c.labels[i];
    auto it = orbit_map.find(label.key());
    if (it == orbit_map.end()) {
      FamilyMember rep = quotient_pencil(ctx, label);
      orbit_map.emplace(label.key(), OrbitRecord{label, 1, rep.a});
    } else {
      ++it->second.size;
    }
  }
  for (auto& [key, rec] : orbit_map) c.orbits.push_back(rec);
  c.class_count = static_cast<i64>(c.orbits.size());
  c.burnside_count = burnside_orbit_count(field, subspaces);
  if (c.burnside_count != c.class_count)
    throw std::logic_error("classify_family: Burnside count disagrees with the label partition");
  i64 total = 0;
  for (const auto& o : c.orbits) total += o.size;
  if (total != c.member_count)
    throw std::logic_error("classify_family: orbit sizes do not sum to the member count");
  return c;
}

bool verify_certificate(const HeisenbergCtx& ctx, const IsoCertificate& cert,
                        std::mt19937_64& rng, int samples) {
  const FqField& F = ctx.field;
  const int e = F.e();

  // 1. gamma carries N1 onto N2
  if (gamma_apply(F, cert.gamma, cert.n1) != cert.n2) return false;

  // 2. the lift induces gamma on the center (checked on a basis of H')
  for (int i = 0; i < e; ++i) {
    GroupElem z = identity_elem(ctx.pencil);
    z.c[i] = 1;
    GroupElem img = aut_apply(ctx, cert.lifted, z);
    for (i64 v : img.a)
      if (v) return false;
    for (i64 v : img.b)
      if (v) return false;
    std::vector<i64> ei(e, 0);
    ei[i] = 1;
    MatFp expect = MatFp::row_vector(F.p(), ei) * gamma_matrix(F, cert.gamma);
    for (int j = 0; j < e; ++j)
      if (img.c[j] != expect.at(0, j)) return false;
  }

  // 3. multiplicative on sampled pairs
  for (int t = 0; t < samples; ++t) {
    GroupElem x = random_elem(ctx.pencil, rng), y = random_elem(ctx.pencil, rng);
    GroupElem lhs = aut_apply(ctx, cert.lifted, multiply(ctx.pencil, x, y));
    GroupElem rhs = multiply(ctx.pencil, aut_apply(ctx, cert.lifted, x),
                             aut_apply(ctx, cert.lifted, y));
    if (lhs != rhs) return false;
  }

  // 4. conjugation by the linear part preserves the adjoint algebra of the
  // commutation bimap
  Pencil comm = commutation_pencil(ctx.pencil);
  AdjAlgebra adj = adjoint_algebra(comm);
  MatFp T = aut_linear_matrix(ctx, cert.lifted);
  MatFp Tinv = inverse(T);
  for (const AdjPair& pr : adj.basis) {
    AdjPair conj{Tinv * pr.F * T, Tinv * pr.Fstar * T};
    if (!pair_is_adjoint(comm, conj)) return false;
  }
  return true;
}

}  // namespace gpe
