#include "gpe/profile.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gpe {

void ElemSet::resize(int n_) {
  n = n_;
  w.assign((n + 63) / 64, 0);
}

int ElemSet::count() const {
  int c = 0;
  for (auto v : w) c += __builtin_popcountll(v);
  return c;
}

std::vector<int> ElemSet::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for (size_t wi = 0; wi < w.size(); ++wi) {
    std::uint64_t v = w[wi];
    while (v) {
      int b = __builtin_ctzll(v);
      out.push_back(static_cast<int>(wi) * 64 + b);
      v &= v - 1;
    }
  }
  return out;
}

SmallGroup::SmallGroup(const Pencil& P, i64 max_order) : P_(P) {
  i64 n = ipow(P.p, P.r + P.s + P.g);
  if (n > max_order)
    throw std::invalid_argument("SmallGroup: order " + std::to_string(n) +
                                " exceeds the budget " + std::to_string(max_order));
  n_ = static_cast<int>(n);
  std::vector<GroupElem> elems;
  elems.reserve(n_);
  for (int i = 0; i < n_; ++i) elems.push_back(decode(i));

  mul_.assign(static_cast<size_t>(n_) * n_, 0);
  // per-row precomputation of a * L_k
  for (int x = 0; x < n_; ++x) {
    const GroupElem& ex = elems[x];
    std::vector<std::vector<i64>> aL(P.g, std::vector<i64>(P.s, 0));
    for (int k = 0; k < P.g; ++k)
      for (int j = 0; j < P.s; ++j) {
        i64 acc = 0;
        for (int i = 0; i < P.r; ++i)
          acc = normmod(acc + ex.a[i] * P.mats[k].at(i, j), P.p);
        aL[k][j] = acc;
      }
    for (int y = 0; y < n_; ++y) {
      const GroupElem& ey = elems[y];
      GroupElem z = identity_elem(P);
      for (int i = 0; i < P.r; ++i) z.a[i] = addmod(ex.a[i], ey.a[i], P.p);
      for (int j = 0; j < P.s; ++j) z.b[j] = addmod(ex.b[j], ey.b[j], P.p);
      for (int k = 0; k < P.g; ++k) {
        i64 lam = 0;
        for (int j = 0; j < P.s; ++j)
          lam = normmod(lam + aL[k][j] * ey.b[j], P.p);
        z.c[k] = normmod(ex.c[k] + ey.c[k] + lam, P.p);
      }
      mul_[static_cast<size_t>(x) * n_ + y] = encode(z);
    }
  }
  inv_.assign(n_, 0);
  for (int x = 0; x < n_; ++x) inv_[x] = encode(inverse(P, elems[x]));
}

GroupElem SmallGroup::decode(int idx) const {
  GroupElem x = identity_elem(P_);
  i64 t = idx;
  for (auto* part : {&x.a, &x.b, &x.c})
    for (auto& v : *part) {
      v = t % P_.p;
      t /= P_.p;
    }
  return x;
}

int SmallGroup::encode(const GroupElem& x) const {
  i64 idx = 0;
  for (auto* part : {&x.c, &x.b, &x.a})
    for (auto it = part->rbegin(); it != part->rend(); ++it)
      idx = idx * P_.p + *it;
  return static_cast<int>(idx);
}

namespace {

struct SetHash {
  size_t operator()(const std::vector<std::uint64_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Cayley-graph closure of a generator list.
ElemSet closure(const SmallGroup& G, const std::vector<int>& gens, i64& budget) {
  ElemSet s;
  s.resize(G.order());
  std::vector<int> queue;
  s.set(G.id());
  queue.push_back(G.id());
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (int g : gens) {
      if (--budget < 0) throw std::runtime_error("enum_subgroups: closure budget exceeded");
      int y = G.mul(x, g);
      if (!s.get(y)) {
        s.set(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

}  // namespace

std::vector<SubgroupSet> enum_subgroups(const SmallGroup& G, GenBound bound,
                                        i64 budget) {
  const int n = G.order();
  const i64 p = G.pencil().p;
  std::vector<SubgroupSet> out;
  std::unordered_set<std::vector<std::uint64_t>, SetHash> seen;

  ElemSet trivial;
  trivial.resize(n);
  trivial.set(G.id());
  out.push_back(SubgroupSet{trivial, 1, {}});
  seen.insert(trivial.w);

  if (!bound.all) {
    // breadth-first over generator-set size: extend every (k-1)-generated
    // subgroup by one element
    size_t layer_begin = 0, layer_end = out.size();
    for (int k = 1; k <= bound.k; ++k) {
      for (size_t i = layer_begin; i < layer_end; ++i) {
        SubgroupSet base = out[i];  // copy: out grows below
        for (int g = 0; g < n; ++g) {
          if (base.elems.get(g)) continue;
          std::vector<int> gens = base.gens;
          gens.push_back(g);
          ElemSet h = closure(G, gens, budget);
          if (seen.insert(h.w).second)
            out.push_back(SubgroupSet{h, h.count(), gens});
        }
      }
      layer_begin = layer_end;
      layer_end = out.size();
    }
    return out;
  }

  // all subgroups: every subgroup of a p-group sits over a normal maximal
  // subgroup of itself, so layered index-p extensions K -> <K, g> with g
  // normalizing K reach everything
  size_t layer_begin = 0, layer_end = out.size();
  while (layer_begin < layer_end) {
    for (size_t i = layer_begin; i < layer_end; ++i) {
      SubgroupSet base = out[i];
      std::vector<int> base_elems = base.elems.elements();
      ElemSet visited = base.elems;
      for (int g = 0; g < n; ++g) {
        if (visited.get(g)) continue;
        if (--budget < 0) throw std::runtime_error("enum_subgroups: closure budget exceeded");
        bool normalizes = true;
        for (int x : base_elems)
          if (!base.elems.get(G.conj(x, g))) {
            normalizes = false;
            break;
          }
        if (normalizes) {
          // H = K <g>, exponent p makes the union of cosets K g^i closed
          ElemSet h = base.elems;
          int gp = g;
          for (i64 t = 1; t < p; ++t) {
            for (int x : base_elems) h.set(G.mul(x, gp));
            gp = G.mul(gp, g);
          }
          if (seen.insert(h.w).second) {
            std::vector<int> gens = base.gens;
            gens.push_back(g);
            out.push_back(SubgroupSet{h, base.order * p, gens});
          }
          for (int x : base_elems) visited.set(G.mul(x, g));
        } else {
          // skip the whole coset K g: it generates the same subgroup
          for (int x : base_elems) visited.set(G.mul(x, g));
        }
      }
    }
    layer_begin = layer_end;
    layer_end = out.size();
  }
  return out;
}

namespace {

i64 ilog(i64 base, i64 v) {
  int k = 0;
  while (v > 1) {
    v /= base;
    ++k;
  }
  return k;
}

}  // namespace

Fingerprint fingerprint(const SmallGroup& G, const SubgroupSet& K) {
  const i64 p = G.pencil().p;
  Fingerprint f;
  f.order = K.order;
  std::vector<int> elems = K.elems.elements();

  // derived subgroup: closure of the commutator values (all central here,
  // so repeated products suffice)
  ElemSet derived;
  derived.resize(G.order());
  derived.set(G.id());
  std::vector<int> dq{G.id()};
  auto add_derived = [&](int v) {
    if (!derived.get(v)) {
      derived.set(v);
      dq.push_back(v);
    }
  };
  for (int x : elems)
    for (int y : elems) {
      int c = G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
      add_derived(c);
    }
  for (size_t i = 0; i < dq.size(); ++i)
    for (size_t j = i; j < dq.size(); ++j) add_derived(G.mul(dq[i], dq[j]));
  f.derived = derived.count();

  // center of K
  i64 central = 0;
  std::vector<char> is_central(elems.size(), 0);
  for (size_t i = 0; i < elems.size(); ++i) {
    bool c = true;
    for (int y : elems)
      if (G.mul(elems[i], y) != G.mul(y, elems[i])) {
        c = false;
        break;
      }
    if (c) {
      ++central;
      is_central[i] = 1;
    }
  }
  f.center = central;

  // exponent p everywhere (odd p, class <= 2), 1 for the trivial group
  f.exponent = K.order == 1 ? 1 : p;
  // Phi(K) = K' K^p = K', so d = log_p |K| / |K'|
  f.d = static_cast<int>(ilog(p, K.order / f.derived));

  // noncentral conjugacy class sizes
  std::map<i64, i64> sizes;
  ElemSet visited;
  visited.resize(G.order());
  for (size_t i = 0; i < elems.size(); ++i) {
    if (is_central[i] || visited.get(elems[i])) continue;
    std::vector<int> orbit{elems[i]};
    ElemSet in_orbit;
    in_orbit.resize(G.order());
    in_orbit.set(elems[i]);
    for (int y : elems) {
      int c = G.conj(elems[i], y);
      if (!in_orbit.get(c)) {
        in_orbit.set(c);
        orbit.push_back(c);
      }
    }
    for (int v : orbit) visited.set(v);
    sizes[static_cast<i64>(orbit.size())] += 1;
  }
  f.classes.assign(sizes.begin(), sizes.end());
  return f;
}

Fingerprint fingerprint_of_descriptor(const GroupDescriptor& d) {
  Fingerprint f;
  f.order = d.order;
  f.d = d.d;
  f.derived = d.derived_order;
  f.center = d.center_order;
  f.exponent = d.exponent;
  f.classes.assign(d.class_sizes.begin(), d.class_sizes.end());
  return f;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << " d=" << d << " derived=" << derived
     << " center=" << center << " exponent=" << exponent << " classes=[";
  for (size_t i = 0; i < classes.size(); ++i) {
    if (i) os << ' ';
    os << classes[i].first << 'x' << classes[i].second;
  }
  os << ']';
  return os.str();
}

bool operator<(const Fingerprint& a, const Fingerprint& b) {
  auto ka = std::tie(a.order, a.d, a.derived, a.center, a.exponent, a.classes);
  auto kb = std::tie(b.order, b.d, b.derived, b.center, b.exponent, b.classes);
  return ka < kb;
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
  return a.order == b.order && a.d == b.d && a.derived == b.derived &&
         a.center == b.center && a.exponent == b.exponent && a.classes == b.classes;
}

std::string ProfileReport::to_text() const {
  std::ostringstream os;
  os << "basis=" << basis << '\n';
  for (const auto& [f, count] : classes)
    os << f.to_string() << " count=" << count << '\n';
  return os.str();
}

ProfileReport brute_profile(const SmallGroup& G,
                            const std::vector<SubgroupSet>& subgroups) {
  ProfileReport r;
  r.basis = "brute";
  for (const auto& K : subgroups) {
    if (K.order == G.order()) continue;  // proper subgroups only
    r.classes[fingerprint(G, K)] += 1;
  }
  return r;
}

StratifiedProfile stratified_profile(const SmallGroup& M,
                                     const std::vector<SubgroupSet>& subgroups) {
  const i64 p = M.pencil().p;
  StratifiedProfile sp;
  sp.p = p;

  // Phi(M) = M' (exponent p): reuse the fingerprint computation on M itself
  const SubgroupSet* whole = nullptr;
  for (const auto& K : subgroups)
    if (K.order == M.order()) whole = &K;
  if (!whole) throw std::invalid_argument("stratified_profile: subgroup list lacks M itself");

  std::vector<int> all = whole->elems.elements();
  ElemSet phi;
  phi.resize(M.order());
  phi.set(M.id());
  std::vector<int> dq{M.id()};
  auto add = [&](int v) {
    if (!phi.get(v)) {
      phi.set(v);
      dq.push_back(v);
    }
  };
  for (int x : all)
    for (int y : all) add(M.mul(M.mul(M.inv(x), M.inv(y)), M.mul(x, y)));
  for (size_t i = 0; i < dq.size(); ++i)
    for (size_t j = i; j < dq.size(); ++j) add(M.mul(dq[i], dq[j]));
  i64 phi_order = phi.count();
  sp.dM = static_cast<int>(ilog(p, M.order() / phi_order));

  for (const auto& K : subgroups) {
    // |K Phi| = |K||Phi| / |K meet Phi|
    i64 meet = 0;
    for (size_t wi = 0; wi < K.elems.w.size(); ++wi)
      meet += __builtin_popcountll(K.elems.w[wi] & phi.w[wi]);
    i64 kphi = K.order * phi_order / meet;
    int fprime = static_cast<int>(ilog(p, M.order() / kphi));
    sp.counts[fingerprint(M, K)][fprime] += 1;
  }
  return sp;
}

ProfileReport formula_profile(const StratifiedProfile& strat, int dG) {
  if (dG != strat.dM + 1)
    throw std::invalid_argument("formula_profile: requires dG = 1 + dM");
  const i64 p = strat.p;
  ProfileReport r;
  r.basis = "formula";
  i64 top = ipow(p, dG) - 1;
  for (const auto& [fp, strata] : strat.counts) {
    i64 predicted = 0;
    for (const auto& [fprime, count] : strata) {
      // stratum |M : K Phi(M)| = p^{f-1} contributes with f = fprime + 1
      i64 denom = ipow(p, fprime + 1) - 1;
      i64 num = top * count;
      if (num % denom != 0)
        throw std::logic_error("formula_profile: non-integral term");
      predicted += num / denom;
    }
    if (predicted) r.classes[fp] = predicted;
  }
  return r;
}

LiteralFormulaResult formula_profile_literal(const StratifiedProfile& strat) {
  const i64 p = strat.p;
  LiteralFormulaResult out;
  out.skipping.basis = "formula";
  i64 top = ipow(p, strat.dM + 1) - 1;
  for (const auto& [fp, strata] : strat.counts) {
    i64 predicted = 0;
    for (const auto& [fprime, count] : strata) {
      // the displayed sum indexes the coefficient by f = log_p |M:K Phi(M)|
      // itself, so the K = M stratum hits p^0 - 1 = 0
      if (fprime == 0) {
        out.division_by_zero = true;
        continue;
      }
      i64 denom = ipow(p, fprime) - 1;
      i64 num = top * count;
      // keep exactness where it holds; the mismatch is the point
      predicted += num / denom;
    }
    if (predicted) out.skipping.classes[fp] = predicted;
  }
  return out;
}

ProfileReport quotient_profile(const HeisenbergCtx& ctx,
                               const FamilyMember& member) {
  const FqField& F = ctx.field;
  const i64 p = F.p();
  const int e = F.e();
  const Pencil& raw = member.raw;
  if (raw.g != 2 || raw.r != e || raw.s != e)
    throw std::invalid_argument("quotient_profile: not a family member pencil");

  ProfileReport r;
  r.basis = "formula";

  // every nonzero combination of the member pencil must be invertible
  // (normal subgroups strictly between N and H' give genus-1 quotients of
  // the full rank-e kind)
  for (i64 l1 = 0; l1 < p; ++l1)
    for (i64 l2 = 0; l2 < p; ++l2) {
      if (l1 == 0 && l2 == 0) continue;
      MatFp comb = raw.mats[0].scaled(l1) + raw.mats[1].scaled(l2);
      if (!is_invertible(comb))
        throw std::logic_error("quotient_profile: degenerate pencil combination");
    }

  // elementary abelian quotients H/K for H' <= K: one per subspace of
  // Z_p^{2e}; the quotient of dimension f appears once per codim-f subspace
  for (int f = 0; f <= 2 * e; ++f) {
    Fingerprint fp;
    fp.order = ipow(p, f);
    fp.d = f;
    fp.derived = 1;
    fp.center = fp.order;
    fp.exponent = f == 0 ? 1 : p;
    r.classes[fp] += count_subspaces(2 * e, f, p);
  }

  // the p+1 genus-1 quotients: all isomorphic to the group of the identity
  // pencil; each individually checked via its own combination
  Fingerprint genus1;
  bool first = true;
  for (i64 idx = 0; idx <= p; ++idx) {
    // K/N runs over the lines of Z_p^2; quotient by the line spanned by
    // (l1, l2) keeps the complementary combination
    i64 l1 = idx < p ? idx : 1, l2 = idx < p ? 1 : 0;
    // a functional vanishing on (l1, l2)
    i64 m1 = l2, m2 = submod(0, l1, p);
    if (m1 == 0 && m2 == 0) throw std::logic_error("quotient_profile: bad line");
    MatFp comb = raw.mats[0].scaled(m1) + raw.mats[1].scaled(m2);
    Pencil q1 = Pencil::make(p, e, e, {comb});
    // normalize to the identity pencil: B(L) ~ B(I) for invertible L
    IsoWitness norm = transform(q1, inverse(comb), MatFp::identity(e, p));
    Fingerprint fp = fingerprint_of_descriptor(descriptor(norm.pencil));
    if (first) {
      genus1 = fp;
      first = false;
    } else if (!(fp == genus1)) {
      throw std::logic_error("quotient_profile: genus-1 quotients disagree");
    }
  }
  r.classes[genus1] += p + 1;
  return r;
}

}  // namespace gpe
