#include "gpe/heisenberg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpe {

HeisenbergCtx build_heisenberg(const FqField& field) {
  std::vector<MatFp> mats = field.structure_matrices();
  Pencil P = Pencil::make(field.p(), field.e(), field.e(), std::move(mats));
  return HeisenbergCtx{field, std::move(P)};
}

HeisMatrix hmat_mul(const FqField& F, const HeisMatrix& x, const HeisMatrix& y) {
  return HeisMatrix{F.add(x.alpha, y.alpha), F.add(x.beta, y.beta),
                    F.add(F.add(x.gamma, y.gamma), F.mul(x.alpha, y.beta))};
}

HeisMatrix brahana_to_matrix(const HeisenbergCtx& ctx, const GroupElem& x) {
  const FqField& F = ctx.field;
  return HeisMatrix{F.from_coords(x.a), F.from_coords(x.b), F.from_coords(x.c)};
}

std::vector<SubspaceFp> enum_codim2(const FqField& field) {
  if (field.e() < 2) throw std::invalid_argument("enum_codim2: need e >= 2");
  return enumerate_subspaces(field.e(), field.e() - 2, field.p());
}

FamilyMember quotient_pencil(const HeisenbergCtx& ctx, const SubspaceFp& N) {
  const FqField& F = ctx.field;
  const int e = F.e();
  const i64 p = F.p();
  if (N.ambient() != e || N.dim() != e - 2)
    throw std::invalid_argument("quotient_pencil: N must have codimension 2");

  // lexicographically least coordinate pair completing N to the full space
  int ci = -1, cj = -1;
  for (int i = 0; i < e && ci < 0; ++i)
    for (int j = i + 1; j < e; ++j) {
      MatFp cand = N.basis();
      MatFp ei(1, e, p), ej(1, e, p);
      ei.set(0, i, 1);
      ej.set(0, j, 1);
      if (rank(cand.vstack(ei).vstack(ej)) == e) {
        ci = i;
        cj = j;
        break;
      }
    }
  if (ci < 0) throw std::logic_error("quotient_pencil: no completing pair");

  // projection pi with kernel N: coordinates on (e_ci, e_cj) in the basis
  // (N-basis rows, e_ci, e_cj)
  MatFp B = N.basis();
  {
    MatFp ei(1, e, p), ej(1, e, p);
    ei.set(0, ci, 1);
    ej.set(0, cj, 1);
    B = B.vstack(ei).vstack(ej);
  }
  MatFp Binv = inverse(B);
  // x = (x * B^-1) * B; pi(x) = last two coordinates
  MatFp P2 = Binv.submatrix(0, e - 2, e, 2);  // e x 2, pi(x) = x * P2

  QuotientWitness quo = combine(ctx.pencil, P2.transpose());
  HeisQuotientResult norm = is_heisenberg_quotient(quo.pencil, e);
  if (!norm.ok)
    throw std::logic_error("quotient_pencil: normalization failed: " + norm.reason);

  FamilyMember m;
  m.N = N;
  m.raw = quo.pencil;
  m.normalized = norm.normalized;
  m.a = norm.a;
  m.complement = {ci, cj};
  return m;
}

AutElem aut_identity(const HeisenbergCtx& ctx) {
  const FqField& F = ctx.field;
  AutElem phi;
  phi.tau = MatFp(2 * F.e(), F.e(), F.p());
  phi.mat2 = {F.one(), F.zero(), F.zero(), F.one()};
  phi.frob_k = 0;
  return phi;
}

AutElem random_aut(const HeisenbergCtx& ctx, std::mt19937_64& rng) {
  const FqField& F = ctx.field;
  AutElem phi;
  phi.tau = MatFp(2 * F.e(), F.e(), F.p());
  for (int i = 0; i < 2 * F.e(); ++i)
    for (int j = 0; j < F.e(); ++j)
      phi.tau.set(i, j, static_cast<i64>(rng() % F.p()));
  do {
    for (auto& m : phi.mat2) m = F.from_index(static_cast<i64>(rng() % F.q()));
  } while (F.is_zero(aut_det(ctx, phi)));
  phi.frob_k = static_cast<int>(rng() % F.e());
  return phi;
}

FqElem aut_det(const HeisenbergCtx& ctx, const AutElem& phi) {
  const FqField& F = ctx.field;
  return F.sub(F.mul(phi.mat2[0], phi.mat2[3]), F.mul(phi.mat2[1], phi.mat2[2]));
}

GroupElem aut_apply(const HeisenbergCtx& ctx, const AutElem& phi,
                    const GroupElem& x) {
  const FqField& F = ctx.field;
  if (F.p() == 2) throw std::invalid_argument("aut_apply: p must be odd");
  const FqElem alpha = phi.mat2[0], beta = phi.mat2[1], gamma = phi.mat2[2],
               delta = phi.mat2[3];
  FqElem ap = F.from_coords(x.a), bp = F.from_coords(x.b), cp = F.from_coords(x.c);

  // half-twisted center coordinate: the displayed map is multiplicative in
  // the chart c - ab/2 (p odd)
  i64 half = invmod(2, F.p());
  FqElem cB = F.sub(cp, F.scal(half, F.mul(ap, bp)));

  FqElem na = F.add(F.mul(ap, alpha), F.mul(bp, gamma));
  FqElem nb = F.add(F.mul(ap, beta), F.mul(bp, delta));
  // tau on the joint row coordinates of (a, b)
  std::vector<i64> ab(2 * F.e());
  for (int i = 0; i < F.e(); ++i) ab[i] = x.a[i];
  for (int i = 0; i < F.e(); ++i) ab[F.e() + i] = x.b[i];
  std::vector<i64> tc(F.e(), 0);
  for (int i = 0; i < 2 * F.e(); ++i) {
    if (!ab[i]) continue;
    for (int j = 0; j < F.e(); ++j)
      tc[j] = normmod(tc[j] + ab[i] * phi.tau.at(i, j), F.p());
  }
  FqElem ncB = F.add(F.mul(aut_det(ctx, phi), cB), F.from_coords(tc));

  na = F.frobenius(na, phi.frob_k);
  nb = F.frobenius(nb, phi.frob_k);
  ncB = F.frobenius(ncB, phi.frob_k);

  FqElem nc = F.add(ncB, F.scal(half, F.mul(na, nb)));
  return GroupElem{na.coords, nb.coords, nc.coords};
}

MatFp aut_linear_matrix(const HeisenbergCtx& ctx, const AutElem& phi) {
  const FqField& F = ctx.field;
  const int e = F.e();
  MatFp blocks(2 * e, 2 * e, F.p());
  MatFp ma = F.mult_matrix(phi.mat2[0]), mb = F.mult_matrix(phi.mat2[1]);
  MatFp mg = F.mult_matrix(phi.mat2[2]), md = F.mult_matrix(phi.mat2[3]);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      blocks.set(i, j, ma.at(i, j));
      blocks.set(i, e + j, mb.at(i, j));
      blocks.set(e + i, j, mg.at(i, j));
      blocks.set(e + i, e + j, md.at(i, j));
    }
  MatFp frob = F.frobenius_matrix(phi.frob_k);
  MatFp frob2(2 * e, 2 * e, F.p());
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      frob2.set(i, j, frob.at(i, j));
      frob2.set(e + i, e + j, frob.at(i, j));
    }
  return blocks * frob2;
}

bool aut_verify(const HeisenbergCtx& ctx, const AutElem& phi, bool exhaustive,
                int samples, std::mt19937_64& rng) {
  const Pencil& P = ctx.pencil;
  if (exhaustive) {
    i64 n = ipow(P.p, P.r + P.s + P.g);
    auto decode = [&](i64 idx) {
      GroupElem x = identity_elem(P);
      for (auto* part : {&x.a, &x.b, &x.c})
        for (auto& v : *part) {
          v = idx % P.p;
          idx /= P.p;
        }
      return x;
    };
    auto encode = [&](const GroupElem& x) {
      i64 idx = 0;
      for (auto* part : {&x.c, &x.b, &x.a})
        for (auto it = part->rbegin(); it != part->rend(); ++it)
          idx = idx * P.p + *it;
      return idx;
    };
    std::vector<GroupElem> elems;
    elems.reserve(static_cast<size_t>(n));
    for (i64 i = 0; i < n; ++i) elems.push_back(decode(i));
    // image table; bijectivity plus the homomorphism law over all pairs
    std::vector<i64> img(static_cast<size_t>(n));
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (i64 i = 0; i < n; ++i) {
      img[i] = encode(aut_apply(ctx, phi, elems[i]));
      if (hit[img[i]]) return false;
      hit[img[i]] = 1;
    }
    for (i64 i = 0; i < n; ++i)
      for (i64 j = 0; j < n; ++j) {
        i64 lhs = img[encode(multiply(P, elems[i], elems[j]))];
        i64 rhs = encode(multiply(P, elems[img[i]], elems[img[j]]));
        if (lhs != rhs) return false;
      }
    return true;
  }
  for (int t = 0; t < samples; ++t) {
    GroupElem x = random_elem(P, rng), y = random_elem(P, rng);
    GroupElem lhs = aut_apply(ctx, phi, multiply(P, x, y));
    GroupElem rhs = multiply(P, aut_apply(ctx, phi, x), aut_apply(ctx, phi, y));
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<GammaElem> gamma_group(const FqField& field) {
  std::vector<GammaElem> out;
  out.reserve(static_cast<size_t>(field.e()) * (field.q() - 1));
  for (int k = 0; k < field.e(); ++k)
    for (i64 idx = 1; idx < field.q(); ++idx)
      out.push_back(GammaElem{field.from_index(idx), k});
  return out;
}

MatFp gamma_matrix(const FqField& field, const GammaElem& g) {
  return field.mult_matrix(g.lambda) * field.frobenius_matrix(g.frob_k);
}

SubspaceFp gamma_apply(const FqField& field, const GammaElem& g,
                       const SubspaceFp& N) {
  return N.image(gamma_matrix(field, g));
}

GammaElem gamma_compose(const FqField& field, const GammaElem& g1,
                        const GammaElem& g2) {
  // x -> s2(lambda2 * s1(lambda1 x)) = s^{k1+k2}(lambda1 * s^{-k1}(lambda2) * x)
  int k = (g1.frob_k + g2.frob_k) % field.e();
  int back = (field.e() - g1.frob_k) % field.e();
  FqElem lam = field.mul(g1.lambda, field.frobenius(g2.lambda, back));
  return GammaElem{lam, k};
}

AutElem gamma_lift(const HeisenbergCtx& ctx, const GammaElem& g) {
  const FqField& F = ctx.field;
  AutElem phi;
  phi.tau = MatFp(2 * F.e(), F.e(), F.p());
  phi.mat2 = {g.lambda, F.zero(), F.zero(), F.one()};
  phi.frob_k = g.frob_k;
  return phi;
}

}  // namespace gpe
