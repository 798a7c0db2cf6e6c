#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpe/fp.hpp"

namespace gpe {

// Dense matrix over Z_p, row-major, entries reduced mod p. Vectors are rows
// and linear maps act on the right (v -> v*M) unless a function says
// otherwise.
class MatFp {
 public:
  MatFp() : rows_(0), cols_(0), p_(0) {}
  MatFp(int rows, int cols, i64 p);

  static MatFp identity(int n, i64 p);
  static MatFp row_vector(i64 p, const std::vector<i64>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  i64 p() const { return p_; }

  i64 at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, i64 v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  MatFp transpose() const;
  std::vector<i64> row(int i) const;

  friend MatFp operator+(const MatFp& a, const MatFp& b);
  friend MatFp operator-(const MatFp& a, const MatFp& b);
  friend MatFp operator*(const MatFp& a, const MatFp& b);
  friend bool operator==(const MatFp& a, const MatFp& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ &&
           a.a_ == b.a_;
  }
  friend bool operator!=(const MatFp& a, const MatFp& b) { return !(a == b); }

  MatFp scaled(i64 c) const;
  MatFp negated() const;

  // stack b below/right of *this
  MatFp vstack(const MatFp& b) const;
  MatFp hstack(const MatFp& b) const;
  MatFp submatrix(int r0, int c0, int nrows, int ncols) const;

  // flatten row-major into a 1 x (rows*cols) row vector
  MatFp flattened() const;

 private:
  int rows_, cols_;
  i64 p_;
  std::vector<i64> a_;
};

struct RrefResult {
  MatFp mat;
  int rank = 0;
  std::vector<int> pivots;
};

// Canonical reduced row echelon form: pivots 1, pivot columns otherwise
// zero, pivot columns strictly increasing. Idempotent.
RrefResult rref(const MatFp& m);

int rank(const MatFp& m);
MatFp inverse(const MatFp& m);  // throws std::invalid_argument if singular
bool is_invertible(const MatFp& m);

// Z_p-subspace of Z_p^ambient held as its canonical RREF basis (rows =
// dimension). Equality of subspaces is equality of bases.
class SubspaceFp {
 public:
  SubspaceFp() : ambient_(0) {}
  SubspaceFp(int ambient, i64 p);               // zero subspace
  static SubspaceFp from_span(const MatFp& m);  // row space of m

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  i64 p() const { return basis_.p(); }
  const MatFp& basis() const { return basis_; }

  bool contains(const std::vector<i64>& v) const;
  bool contains(const SubspaceFp& other) const;

  // image under a right-acting matrix (ambient x m)
  SubspaceFp image(const MatFp& g) const;
  SubspaceFp sum(const SubspaceFp& other) const;

  // flattened basis entries, for canonical ordering/keys
  std::vector<i64> key() const;

  friend bool operator==(const SubspaceFp& a, const SubspaceFp& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const SubspaceFp& a, const SubspaceFp& b) {
    return !(a == b);
  }
  friend bool operator<(const SubspaceFp& a, const SubspaceFp& b);

 private:
  int ambient_;
  MatFp basis_;
};

struct SolveResult {
  bool consistent = false;
  MatFp particular;    // n x k with coeff * particular = rhs, valid if consistent
  SubspaceFp kernel;   // all x with coeff * x^t = 0, basis rows of length n
};

// Solve coeff * X = rhs for column unknowns (coeff m x n, rhs m x k). The
// homogeneous solutions are returned as a subspace of Z_p^n.
SolveResult solve_linear(const MatFp& coeff, const MatFp& rhs);
SubspaceFp kernel(const MatFp& coeff);

// Monic least-degree annihilator; divides the characteristic polynomial.
PolyFp min_poly(const MatFp& m);

// Companion matrix with superdiagonal ones and last row (-a0, ..., -a_{e-1})
// so that min_poly(companion_std(a)) == a. Input must be monic.
MatFp companion_std(const PolyFp& a);

struct FnfResult {
  MatFp x;                      // invertible; x^-1 * m * x = blocks
  std::vector<PolyFp> factors;  // invariant factors, a1 | a2 | ... | am
};

// Frobenius (rational) normal form with explicit change of basis.
// Deterministic: no randomization anywhere.
FnfResult frobenius_normal_form(const MatFp& m);

bool poly_irreducible(const PolyFp& a);
// Trial-division factorization, ascending canonical order of factors.
std::vector<std::pair<PolyFp, int>> poly_factor(const PolyFp& a);

// Number of d-dimensional subspaces of Z_p^n (Gaussian binomial).
i64 count_subspaces(int n, int d, i64 p);
// All d-dimensional subspaces of Z_p^n in a fixed deterministic order.
std::vector<SubspaceFp> enumerate_subspaces(int n, int d, i64 p);

// "1,0;0,2" = rows separated by ';', entries by ','
std::string mat_to_text(const MatFp& m);
MatFp mat_from_text(i64 p, const std::string& text);

}  // namespace gpe
