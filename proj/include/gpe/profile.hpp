#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpe/heisenberg.hpp"
#include "gpe/pencil.hpp"

namespace gpe {

// Element set of a small group as a bitset over element indices.
struct ElemSet {
  std::vector<std::uint64_t> w;
  int n = 0;

  void resize(int n_);
  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
  int count() const;
  std::vector<int> elements() const;
  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.n == b.n && a.w == b.w;
  }
};

// A fully tabulated Brahana group of order at most max_order (default
// 3^6). Elements are mixed-radix indices over (a, b, c).
class SmallGroup {
 public:
  SmallGroup(const Pencil& P, i64 max_order = 729);

  const Pencil& pencil() const { return P_; }
  int order() const { return n_; }
  int id() const { return 0; }
  int mul(int x, int y) const { return mul_[static_cast<size_t>(x) * n_ + y]; }
  int inv(int x) const { return inv_[x]; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }

  GroupElem decode(int idx) const;
  int encode(const GroupElem& x) const;

 private:
  Pencil P_;
  int n_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

struct SubgroupSet {
  ElemSet elems;
  i64 order = 0;
  std::vector<int> gens;  // generator witness
};

struct GenBound {
  bool all = true;
  int k = 0;
  static GenBound All() { return GenBound{true, 0}; }
  static GenBound K(int k) { return GenBound{false, k}; }
};

// All subgroups (layered index-p extensions) or all subgroups generated by
// at most k elements (breadth-first closures). Deduplicated by element set;
// deterministic order. Throws std::runtime_error if the closure budget is
// exceeded.
std::vector<SubgroupSet> enum_subgroups(const SmallGroup& G, GenBound bound,
                                        i64 budget = 1000000);

// Isomorphism-invariant tuple: order, d(K), |K'|, |Z(K)|, exponent, and the
// multiset of noncentral conjugacy class sizes.
struct Fingerprint {
  i64 order = 1;
  int d = 0;
  i64 derived = 1;
  i64 center = 1;
  i64 exponent = 1;
  std::vector<std::pair<i64, i64>> classes;  // (size, count), sorted

  std::string to_string() const;
  friend bool operator<(const Fingerprint& a, const Fingerprint& b);
  friend bool operator==(const Fingerprint& a, const Fingerprint& b);
};

Fingerprint fingerprint(const SmallGroup& G, const SubgroupSet& K);
Fingerprint fingerprint_of_descriptor(const GroupDescriptor& d);

struct ProfileReport {
  std::string basis;  // "brute" or "formula"
  std::map<Fingerprint, i64> classes;

  std::string to_text() const;  // canonical line-per-class rendering
  friend bool operator==(const ProfileReport& a, const ProfileReport& b) {
    return a.basis == b.basis && a.classes == b.classes;
  }
};

// Brute-force profile of the proper subgroups of G.
ProfileReport brute_profile(const SmallGroup& G,
                            const std::vector<SubgroupSet>& subgroups);

// Per-fingerprint counts of all K <= M stratified by log_p |M : K Phi(M)|
// (the Frattini data the counting formula consumes).
struct StratifiedProfile {
  int dM = 0;
  i64 p = 0;
  std::map<Fingerprint, std::map<int, i64>> counts;
};

StratifiedProfile stratified_profile(const SmallGroup& M,
                                     const std::vector<SubgroupSet>& subgroups);

// Proof-indexed counting formula: predicted
//   |{K < G : K ~ J}| = sum_{f=1}^{dG} (p^{dG}-1)/(p^f-1) *
//                       #{K <= M : K ~ J, |M:K Phi(M)| = p^{f-1}}.
// Hypotheses (Aut(G) transitive on maximals, dG = 1 + dM) are asserted by
// the caller.
ProfileReport formula_profile(const StratifiedProfile& strat, int dG);

// The literal displayed sum (f running from 0 with coefficient
// (p^{1+dM}-1)/(p^f-1) at f = log_p |M:K Phi(M)|) divides by zero on the
// K = M stratum; `skipping` drops that stratum so the mismatch with brute
// force is observable.
struct LiteralFormulaResult {
  bool division_by_zero = false;
  ProfileReport skipping;
};
LiteralFormulaResult formula_profile_literal(const StratifiedProfile& strat);

// Quotient profile of a family member, computed structurally: elementary
// abelian quotients counted by subspace counts of Z_p^{2e}, the p+1
// genus-1 quotients (all isomorphic; every nonzero pencil combination is
// checked invertible), and the Z_p^{2e} quotient.
ProfileReport quotient_profile(const HeisenbergCtx& ctx,
                               const FamilyMember& member);

}  // namespace gpe
