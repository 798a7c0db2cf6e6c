#include "gpe/verify.hpp"

#include <functional>
#include <ostream>
#include <random>

#include "gpe/isotest.hpp"
#include "gpe/profile.hpp"
#include "gpe/report.hpp"

namespace gpe {

namespace {

struct Runner {
  std::ostream& os;
  bool all_ok = true;

  void check(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& ex) {
      detail = ex.what();
    }
    os << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !detail.empty()) os << "  (" << detail << ")";
    os << '\n';
    if (!ok) all_ok = false;
  }
};

}  // namespace

bool verify_suite(i64 p, int e, const VerifyOptions& opt, std::ostream& os) {
  Runner run{os};
  std::mt19937_64 rng(static_cast<std::uint64_t>(opt.seed) * 0x9e3779b97f4a7c15ull + 1);

  FqField field(p, e, find_irreducible(p, e, opt.seed));
  HeisenbergCtx ctx = build_heisenberg(field);

  run.check("field: structure-constant identity on all basis pairs", [&] {
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) {
        FqElem wi = field.from_index(ipow(p, i));
        FqElem wj = field.from_index(ipow(p, j));
        FqElem prod = field.mul(wi, wj);
        for (int k = 0; k < e; ++k)
          if (prod.coords[k] != field.structure_matrices()[k].at(i, j)) return false;
      }
    return true;
  });

  run.check("field: random inverses and Frobenius automorphism", [&] {
    for (int t = 0; t < 50; ++t) {
      FqElem x = field.from_index(1 + static_cast<i64>(rng() % (field.q() - 1)));
      FqElem y = field.from_index(static_cast<i64>(rng() % field.q()));
      if (field.mul(x, field.inv(x)) != field.one()) return false;
      if (field.frobenius(field.add(x, y), 1) !=
          field.add(field.frobenius(x, 1), field.frobenius(y, 1)))
        return false;
      if (field.frobenius(field.mul(x, y), 1) !=
          field.mul(field.frobenius(x, 1), field.frobenius(y, 1)))
        return false;
    }
    return true;
  });

  run.check("brahana: group laws on random triples", [&] {
    const Pencil& P = ctx.pencil;
    for (int t = 0; t < 100; ++t) {
      GroupElem x = random_elem(P, rng), y = random_elem(P, rng),
                z = random_elem(P, rng);
      if (multiply(P, multiply(P, x, y), z) != multiply(P, x, multiply(P, y, z)))
        return false;
      if (multiply(P, x, inverse(P, x)) != identity_elem(P)) return false;
      GroupElem pw = identity_elem(P);
      for (i64 i = 0; i < p; ++i) pw = multiply(P, pw, x);
      if (pw != identity_elem(P)) return false;
    }
    return true;
  });

  run.check("brahana: commutation matches the matrix model", [&] {
    const Pencil& P = ctx.pencil;
    for (int t = 0; t < 100; ++t) {
      GroupElem x = random_elem(P, rng), y = random_elem(P, rng);
      HeisMatrix hx = brahana_to_matrix(ctx, x), hy = brahana_to_matrix(ctx, y);
      HeisMatrix hxy = hmat_mul(field, hx, hy);
      HeisMatrix hz = brahana_to_matrix(ctx, multiply(P, x, y));
      if (!(hxy.alpha == hz.alpha && hxy.beta == hz.beta && hxy.gamma == hz.gamma))
        return false;
    }
    return true;
  });

  run.check("adjoint: algebra contains (I, I) and closes under the product", [&] {
    AdjAlgebra adj = adjoint_algebra(commutation_pencil(ctx.pencil));
    AdjPair id{MatFp::identity(2 * e, p), MatFp::identity(2 * e, p)};
    std::vector<AdjPair> with_id = adj.basis;
    with_id.push_back(id);
    if (!same_pair_span(adj.basis, with_id, 2 * e, 2 * e, p)) return false;
    for (int t = 0; t < 10; ++t) {
      const AdjPair& a = adj.basis[rng() % adj.basis.size()];
      const AdjPair& b = adj.basis[rng() % adj.basis.size()];
      AdjPair prod{a.F * b.F, b.Fstar * a.Fstar};
      if (!pair_is_adjoint(adj.pencil, prod)) return false;
    }
    return true;
  });

  run.check("automorphisms: random constituents give automorphisms", [&] {
    for (int t = 0; t < 5; ++t) {
      AutElem phi = random_aut(ctx, rng);
      if (!aut_verify(ctx, phi, false, 300, rng)) return false;
    }
    return true;
  });

  if (e >= 2) {
    run.check("gamma: composition matches matrix products", [&] {
      auto gammas = gamma_group(field);
      for (int t = 0; t < 50; ++t) {
        const GammaElem& g1 = gammas[rng() % gammas.size()];
        const GammaElem& g2 = gammas[rng() % gammas.size()];
        GammaElem g12 = gamma_compose(field, g1, g2);
        if (gamma_matrix(field, g1) * gamma_matrix(field, g2) !=
            gamma_matrix(field, g12))
          return false;
      }
      return true;
    });

    run.check("family: classification is internally consistent", [&] {
      Classification c = classify_family(p, e, opt.seed, opt.scale_guard);
      i64 total = 0;
      for (const auto& o : c.orbits) total += o.size;
      return c.class_count == c.burnside_count && total == c.member_count;
    });

    run.check("family: quotient profiles identical across members", [&] {
      std::vector<SubspaceFp> subs = enum_codim2(field);
      std::string first;
      for (const auto& N : subs) {
        FamilyMember m = quotient_pencil(ctx, N);
        std::string txt = quotient_profile(ctx, m).to_text();
        if (first.empty())
          first = txt;
        else if (txt != first)
          return false;
      }
      return true;
    });
  }

  if (opt.slow && e == 2 && p == 3) {
    run.check("profile: counting formula equals brute force on the order-729 group", [&] {
      PolyFp a = find_irreducible(p, e, opt.seed);
      Pencil G = Pencil::make(p, e, e, {MatFp::identity(e, p), companion_std(a)});
      SubgroupWitness mw = eliminate(G, {e - 1}, {}, {});
      SmallGroup sg(G, 1000);
      SmallGroup sm(mw.pencil, 1000);
      auto g_subs = enum_subgroups(sg, GenBound::All(), 200000000);
      auto m_subs = enum_subgroups(sm, GenBound::All(), 200000000);
      ProfileReport brute = brute_profile(sg, g_subs);
      StratifiedProfile strat = stratified_profile(sm, m_subs);
      ProfileReport formula = formula_profile(strat, strat.dM + 1);
      return brute.classes == formula.classes;
    });
  }

  return run.all_ok;
}

}  // namespace gpe
