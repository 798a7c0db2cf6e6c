#include "gpe/linal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gpe {

MatFp::MatFp(int rows, int cols, i64 p) : rows_(rows), cols_(cols), p_(p) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("MatFp: bad dimensions");
  if (p < 2) throw std::invalid_argument("MatFp: modulus must be >= 2");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

MatFp MatFp::identity(int n, i64 p) {
  MatFp m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatFp MatFp::row_vector(i64 p, const std::vector<i64>& v) {
  MatFp m(1, static_cast<int>(v.size()), p);
  for (size_t j = 0; j < v.size(); ++j) m.set(0, static_cast<int>(j), v[j]);
  return m;
}

void MatFp::set(int i, int j, i64 v) {
  a_[static_cast<size_t>(i) * cols_ + j] = normmod(v, p_);
}

bool MatFp::is_zero() const {
  for (i64 v : a_)
    if (v) return false;
  return true;
}

MatFp MatFp::transpose() const {
  MatFp t(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

std::vector<i64> MatFp::row(int i) const {
  std::vector<i64> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

MatFp operator+(const MatFp& a, const MatFp& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("MatFp+: dimension mismatch");
  MatFp c(a.rows_, a.cols_, a.p_);
  for (size_t i = 0; i < a.a_.size(); ++i)
    c.a_[i] = addmod(a.a_[i], b.a_[i], a.p_);
  return c;
}

MatFp operator-(const MatFp& a, const MatFp& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("MatFp-: dimension mismatch");
  MatFp c(a.rows_, a.cols_, a.p_);
  for (size_t i = 0; i < a.a_.size(); ++i)
    c.a_[i] = submod(a.a_[i], b.a_[i], a.p_);
  return c;
}

MatFp operator*(const MatFp& a, const MatFp& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("MatFp*: dimension mismatch");
  MatFp c(a.rows_, b.cols_, a.p_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      i64 v = a.at(i, k);
      if (!v) continue;
      for (int j = 0; j < b.cols_; ++j)
        c.a_[static_cast<size_t>(i) * c.cols_ + j] =
            normmod(c.a_[static_cast<size_t>(i) * c.cols_ + j] + v * b.at(k, j),
                    a.p_);
    }
  return c;
}

MatFp MatFp::scaled(i64 c) const {
  MatFp m = *this;
  for (auto& v : m.a_) v = mulmod(normmod(c, p_), v, p_);
  return m;
}

MatFp MatFp::negated() const { return scaled(p_ - 1); }

MatFp MatFp::vstack(const MatFp& b) const {
  if (cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
  MatFp m(rows_ + b.rows_, cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(rows_ + i, j, b.at(i, j));
  return m;
}

MatFp MatFp::hstack(const MatFp& b) const {
  if (rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  MatFp m(rows_, cols_ + b.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (int j = 0; j < b.cols_; ++j) m.set(i, cols_ + j, b.at(i, j));
  }
  return m;
}

MatFp MatFp::submatrix(int r0, int c0, int nrows, int ncols) const {
  MatFp m(nrows, ncols, p_);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m.set(i, j, at(r0 + i, c0 + j));
  return m;
}

MatFp MatFp::flattened() const {
  MatFp m(1, rows_ * cols_, p_);
  for (int i = 0; i < rows_ * cols_; ++i) m.set(0, i, a_[i]);
  return m;
}

RrefResult rref(const MatFp& m) {
  RrefResult res;
  res.mat = m;
  MatFp& a = res.mat;
  int lead = 0;
  for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < a.rows(); ++i)
      if (a.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    // swap rows piv and lead
    if (piv != lead)
      for (int j = 0; j < a.cols(); ++j) {
        i64 t = a.at(lead, j);
        a.set(lead, j, a.at(piv, j));
        a.set(piv, j, t);
      }
    i64 inv = invmod(a.at(lead, col), a.p());
    for (int j = 0; j < a.cols(); ++j) a.set(lead, j, mulmod(a.at(lead, j), inv, a.p()));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == lead) continue;
      i64 f = a.at(i, col);
      if (!f) continue;
      for (int j = 0; j < a.cols(); ++j)
        a.set(i, j, submod(a.at(i, j), mulmod(f, a.at(lead, j), a.p()), a.p()));
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = lead;
  return res;
}

int rank(const MatFp& m) { return rref(m).rank; }

bool is_invertible(const MatFp& m) {
  return m.is_square() && rank(m) == m.rows();
}

MatFp inverse(const MatFp& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  RrefResult r = rref(m.hstack(MatFp::identity(n, m.p())));
  if (r.rank < n) throw std::invalid_argument("inverse: singular matrix");
  return r.mat.submatrix(0, n, n, n);
}

SubspaceFp::SubspaceFp(int ambient, i64 p)
    : ambient_(ambient), basis_(0, ambient, p) {}

SubspaceFp SubspaceFp::from_span(const MatFp& m) {
  RrefResult r = rref(m);
  SubspaceFp s(m.cols(), m.p());
  s.basis_ = r.mat.submatrix(0, 0, r.rank, m.cols());
  return s;
}

bool SubspaceFp::contains(const std::vector<i64>& v) const {
  MatFp stacked = basis_.vstack(MatFp::row_vector(basis_.p(), v));
  return rank(stacked) == dim();
}

bool SubspaceFp::contains(const SubspaceFp& other) const {
  MatFp stacked = basis_.vstack(other.basis_);
  return rank(stacked) == dim();
}

SubspaceFp SubspaceFp::image(const MatFp& g) const {
  if (dim() == 0) return SubspaceFp(g.cols(), g.p());
  return from_span(basis_ * g);
}

SubspaceFp SubspaceFp::sum(const SubspaceFp& other) const {
  return from_span(basis_.vstack(other.basis_));
}

std::vector<i64> SubspaceFp::key() const {
  std::vector<i64> k;
  k.push_back(dim());
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < basis_.cols(); ++j) k.push_back(basis_.at(i, j));
  return k;
}

bool operator<(const SubspaceFp& a, const SubspaceFp& b) {
  return a.key() < b.key();
}

SolveResult solve_linear(const MatFp& coeff, const MatFp& rhs) {
  if (coeff.rows() != rhs.rows())
    throw std::invalid_argument("solve_linear: dimension mismatch");
  SolveResult out;
  int n = coeff.cols(), k = rhs.cols();
  RrefResult r = rref(coeff.hstack(rhs));
  // inconsistent iff a pivot lands in the rhs block
  out.consistent = true;
  for (int c : r.pivots)
    if (c >= n) out.consistent = false;

  // kernel from the rref of coeff alone (the pivots of the combined rref
  // restricted to the first n columns coincide when consistent)
  RrefResult rc = rref(coeff);
  std::vector<char> is_pivot(n, 0);
  for (int c : rc.pivots) is_pivot[c] = 1;
  MatFp kb(n - rc.rank, n, coeff.p());
  {
    int row = 0;
    for (int free = 0; free < n; ++free) {
      if (is_pivot[free]) continue;
      kb.set(row, free, 1);
      for (int pi = 0; pi < rc.rank; ++pi) {
        int pc = rc.pivots[pi];
        kb.set(row, pc, submod(0, rc.mat.at(pi, free), coeff.p()));
      }
      ++row;
    }
  }
  out.kernel = SubspaceFp::from_span(kb);

  if (out.consistent) {
    MatFp x(n, k, coeff.p());
    for (size_t pi = 0; pi < r.pivots.size(); ++pi) {
      int pc = r.pivots[pi];
      for (int j = 0; j < k; ++j) x.set(pc, j, r.mat.at(static_cast<int>(pi), n + j));
    }
    out.particular = x;
  }
  return out;
}

SubspaceFp kernel(const MatFp& coeff) {
  return solve_linear(coeff, MatFp(coeff.rows(), 1, coeff.p())).kernel;
}

namespace {

// Least monic annihilator of v under x -> x*m, via the first Krylov
// dependency.
PolyFp vector_order(const MatFp& m, const std::vector<i64>& v) {
  i64 p = m.p();
  int n = m.cols();
  std::vector<std::vector<i64>> krylov;  // rows v, vm, vm^2, ...
  std::vector<i64> cur = v;
  for (int step = 0; step <= n; ++step) {
    krylov.push_back(cur);
    MatFp stack(static_cast<int>(krylov.size()), n, p);
    for (size_t i = 0; i < krylov.size(); ++i)
      for (int j = 0; j < n; ++j) stack.set(static_cast<int>(i), j, krylov[i][j]);
    if (rank(stack) < static_cast<int>(krylov.size())) {
      // last row depends on the previous ones: solve for the coefficients
      int d = static_cast<int>(krylov.size()) - 1;
      MatFp A(n, d, p);  // columns are krylov[0..d-1] transposed
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) A.set(j, i, krylov[i][j]);
      MatFp b(n, 1, p);
      for (int j = 0; j < n; ++j) b.set(j, 0, krylov[d][j]);
      SolveResult sr = solve_linear(A, b);
      std::vector<i64> coeffs(d + 1, 0);
      for (int i = 0; i < d; ++i) coeffs[i] = submod(0, sr.particular.at(i, 0), p);
      coeffs[d] = 1;
      return PolyFp(p, std::move(coeffs));
    }
    // advance cur = cur * m
    std::vector<i64> nxt(n, 0);
    for (int i = 0; i < n; ++i) {
      if (!cur[i]) continue;
      for (int j = 0; j < n; ++j) nxt[j] = normmod(nxt[j] + cur[i] * m.at(i, j), p);
    }
    cur = std::move(nxt);
  }
  throw std::logic_error("vector_order: no dependency found");
}

MatFp poly_of_matrix(const PolyFp& a, const MatFp& m) {
  int n = m.rows();
  MatFp r(n, n, m.p());
  MatFp pw = MatFp::identity(n, m.p());
  for (int k = 0; k <= a.degree(); ++k) {
    if (a.at(k)) r = r + pw.scaled(a.at(k));
    if (k < a.degree()) pw = pw * m;
  }
  return r;
}

std::vector<i64> apply_right(const std::vector<i64>& v, const MatFp& m) {
  std::vector<i64> r(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < m.cols(); ++j)
      r[j] = normmod(r[j] + v[i] * m.at(i, j), m.p());
  }
  return r;
}

}  // namespace

PolyFp min_poly(const MatFp& m) {
  if (!m.is_square()) throw std::invalid_argument("min_poly: not square");
  i64 p = m.p();
  int n = m.rows();
  if (n == 0) return PolyFp(p, {1});
  PolyFp mu = PolyFp(p, {1});
  for (int i = 0; i < n; ++i) {
    std::vector<i64> e(n, 0);
    e[i] = 1;
    mu = poly_lcm(mu, vector_order(m, e));
    if (mu.degree() == n) break;  // cannot exceed the characteristic degree
  }
  return mu;
}

MatFp companion_std(const PolyFp& a) {
  if (!a.is_monic()) throw std::invalid_argument("companion_std: not monic");
  int e = a.degree();
  if (e < 1) throw std::invalid_argument("companion_std: degree must be >= 1");
  MatFp c(e, e, a.p());
  for (int i = 0; i + 1 < e; ++i) c.set(i, i + 1, 1);
  for (int j = 0; j < e; ++j) c.set(e - 1, j, submod(0, a.at(j), a.p()));
  return c;
}

bool poly_irreducible(const PolyFp& a) {
  if (a.degree() < 1) return false;
  PolyFp m = a.monic();
  i64 p = m.p();
  int half = m.degree() / 2;
  // trial division by every monic polynomial of degree 1..half
  for (int d = 1; d <= half; ++d) {
    i64 total = ipow(p, d);
    for (i64 idx = 0; idx < total; ++idx) {
      std::vector<i64> c(d + 1, 0);
      i64 t = idx;
      for (int k = 0; k < d; ++k) {
        c[k] = t % p;
        t /= p;
      }
      c[d] = 1;
      PolyFp div(p, c);
      if (poly_divmod(m, div).second.is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::pair<PolyFp, int>> poly_factor(const PolyFp& a) {
  if (a.degree() < 0) throw std::invalid_argument("poly_factor: zero polynomial");
  std::vector<std::pair<PolyFp, int>> out;
  PolyFp rem = a.monic();
  i64 p = rem.p();
  int d = 1;
  while (rem.degree() >= 1) {
    if (d > rem.degree() / 2) {
      out.emplace_back(rem, 1);
      break;
    }
    bool found = false;
    i64 total = ipow(p, d);
    for (i64 idx = 0; idx < total && !found; ++idx) {
      std::vector<i64> c(d + 1, 0);
      i64 t = idx;
      for (int k = 0; k < d; ++k) {
        c[k] = t % p;
        t /= p;
      }
      c[d] = 1;
      PolyFp div(p, c);
      auto qr = poly_divmod(rem, div);
      if (!qr.second.is_zero()) continue;
      // divisors found in ascending degree are irreducible
      int mult = 0;
      while (qr.second.is_zero()) {
        ++mult;
        rem = qr.first;
        if (rem.degree() < div.degree()) break;
        qr = poly_divmod(rem, div);
      }
      out.emplace_back(div, mult);
      found = true;
    }
    if (!found) ++d;
  }
  return out;
}

namespace {

// Generalized Jordan-chain selection inside the q-primary component of m:
// returns chain heads (w, j) with ord(w) = q^j, j descending, whose cyclic
// spaces decompose the component.
struct ChainHead {
  std::vector<i64> w;
  int level;
};

std::vector<ChainHead> primary_chains(const MatFp& m, const PolyFp& q, int mult) {
  i64 p = m.p();
  int n = m.rows();
  int dq = q.degree();
  MatFp Q = poly_of_matrix(q, m);

  // U_j = ker(Q^j), j = 0..mult
  std::vector<SubspaceFp> U(mult + 1, SubspaceFp(n, p));
  MatFp Qj = MatFp::identity(n, p);
  for (int j = 1; j <= mult; ++j) {
    Qj = Qj * Q;
    U[j] = kernel(Qj.transpose());  // rows v with v*Qj = 0
  }

  std::vector<ChainHead> heads;
  std::vector<std::vector<i64>> carried;  // Q-images of higher-level heads
  for (int j = mult; j >= 1; --j) {
    // current span: U_{j-1} plus the M-orbits of carried vectors
    std::vector<std::vector<i64>> span_rows;
    for (int i = 0; i < U[j - 1].dim(); ++i) span_rows.push_back(U[j - 1].basis().row(i));
    for (const auto& w : carried) {
      std::vector<i64> v = w;
      for (int l = 0; l < dq; ++l) {
        span_rows.push_back(v);
        v = apply_right(v, m);
      }
    }
    auto make_mat = [&](const std::vector<std::vector<i64>>& rows) {
      MatFp s(static_cast<int>(rows.size()), n, p);
      for (size_t i = 0; i < rows.size(); ++i)
        for (int c = 0; c < n; ++c) s.set(static_cast<int>(i), c, rows[i][c]);
      return s;
    };
    int cur_rank = span_rows.empty() ? 0 : rank(make_mat(span_rows));

    for (int bi = 0; bi < U[j].dim(); ++bi) {
      std::vector<i64> cand = U[j].basis().row(bi);
      std::vector<std::vector<i64>> trial = span_rows;
      trial.push_back(cand);
      if (rank(make_mat(trial)) == cur_rank) continue;
      // new head of exact level j; its F[t]/q-line enters the span
      heads.push_back({cand, j});
      std::vector<i64> v = cand;
      for (int l = 0; l < dq; ++l) {
        span_rows.push_back(v);
        v = apply_right(v, m);
      }
      cur_rank = rank(make_mat(span_rows));
    }
    // push every head selected so far down one level for the next pass
    carried.clear();
    for (const auto& h : heads)
      if (h.level > j - 1) {
        std::vector<i64> v = h.w;
        for (int t = 0; t < h.level - (j - 1); ++t) v = apply_right(v, Q);
        carried.push_back(v);
      }
  }
  return heads;
}

}  // namespace

FnfResult frobenius_normal_form(const MatFp& m) {
  if (!m.is_square()) throw std::invalid_argument("fnf: not square");
  i64 p = m.p();
  int n = m.rows();
  FnfResult out;
  if (n == 0) {
    out.x = MatFp(0, 0, p);
    return out;
  }
  PolyFp mu = min_poly(m);
  auto factors = poly_factor(mu);

  // per-primary chain heads, levels descending
  std::vector<std::vector<ChainHead>> chains;
  for (auto& [q, mult] : factors) {
    auto h = primary_chains(m, q, mult);
    std::sort(h.begin(), h.end(),
              [](const ChainHead& a, const ChainHead& b) { return a.level > b.level; });
    chains.push_back(std::move(h));
  }

  size_t nblocks = 0;
  for (auto& c : chains) nblocks = std::max(nblocks, c.size());

  // combine the k-th largest block of every primary into one invariant
  // factor; the sum of the heads is cyclic of the product order
  struct Block {
    PolyFp a;
    std::vector<i64> v;
  };
  std::vector<Block> blocks;  // descending divisibility
  for (size_t k = 0; k < nblocks; ++k) {
    PolyFp a = PolyFp(p, {1});
    std::vector<i64> v(n, 0);
    for (size_t i = 0; i < chains.size(); ++i) {
      if (k >= chains[i].size()) continue;
      const auto& h = chains[i][k];
      PolyFp qpow = PolyFp(p, {1});
      for (int t = 0; t < h.level; ++t) qpow = qpow * factors[i].first;
      a = a * qpow;
      for (int j = 0; j < n; ++j) v[j] = addmod(v[j], h.w[j], p);
    }
    blocks.push_back({a, v});
  }
  std::reverse(blocks.begin(), blocks.end());  // ascending: a1 | a2 | ...

  MatFp basis(0, n, p);
  for (auto& b : blocks) {
    out.factors.push_back(b.a);
    std::vector<i64> v = b.v;
    for (int t = 0; t < b.a.degree(); ++t) {
      basis = basis.vstack(MatFp::row_vector(p, v));
      v = apply_right(v, m);
    }
  }
  if (basis.rows() != n || !is_invertible(basis))
    throw std::logic_error("fnf: basis assembly failed");
  // rows B satisfy B m = C B with C the block companion sum, so X = B^-1
  out.x = inverse(basis);
  return out;
}

i64 count_subspaces(int n, int d, i64 p) {
  if (d < 0 || d > n) return 0;
  // prod_{i=0}^{d-1} (p^{n-i} - 1) / (p^{d-i} - 1), computed exactly
  i64 num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    num *= ipow(p, n - i) - 1;
    den *= ipow(p, d - i) - 1;
    i64 g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

std::vector<SubspaceFp> enumerate_subspaces(int n, int d, i64 p) {
  std::vector<SubspaceFp> out;
  if (d < 0 || d > n) return out;
  if (d == 0) {
    out.emplace_back(n, p);
    return out;
  }
  // iterate pivot column sets in lexicographic order
  std::vector<int> piv(d);
  for (int i = 0; i < d; ++i) piv[i] = i;
  auto advance = [&]() -> bool {
    int i = d - 1;
    while (i >= 0 && piv[i] == n - d + i) --i;
    if (i < 0) return false;
    ++piv[i];
    for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
    return true;
  };
  do {
    // free positions: (row i, col j) with j > piv[i], j not a pivot
    std::vector<std::pair<int, int>> free_pos;
    std::vector<char> is_piv(n, 0);
    for (int c : piv) is_piv[c] = 1;
    for (int i = 0; i < d; ++i)
      for (int j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    i64 total = ipow(p, static_cast<int>(free_pos.size()));
    for (i64 idx = 0; idx < total; ++idx) {
      MatFp b(d, n, p);
      for (int i = 0; i < d; ++i) b.set(i, piv[i], 1);
      i64 t = idx;
      for (auto& [ri, cj] : free_pos) {
        b.set(ri, cj, t % p);
        t /= p;
      }
      SubspaceFp s(n, p);
      s = SubspaceFp::from_span(b);
      out.push_back(std::move(s));
    }
  } while (advance());
  return out;
}

std::string mat_to_text(const MatFp& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m.at(i, j);
    }
  }
  return os.str();
}

MatFp mat_from_text(i64 p, const std::string& text) {
  std::vector<std::vector<i64>> rows;
  std::istringstream is(text);
  std::string rowtok;
  while (std::getline(is, rowtok, ';')) {
    std::vector<i64> row;
    std::istringstream rs(rowtok);
    std::string tok;
    while (std::getline(rs, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("mat_from_text: empty entry");
      row.push_back(std::stoll(tok));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("mat_from_text: empty matrix");
  MatFp m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), p);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("mat_from_text: ragged rows");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
  }
  return m;
}

}  // namespace gpe
