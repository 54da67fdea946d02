#pragma once
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "toruscl/numeric.hpp"

namespace toruscl {

// Dense matrix over Z, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(long n);
  static IntMatrix zero(long r, long c) { return IntMatrix(r, c); }
  static IntMatrix diagonal(const std::vector<Int>& d);
  static IntMatrix from_columns(long nrows, const std::vector<std::vector<Int>>& cols);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Int& at(long i, long j) { return a_[i * cols_ + j]; }
  const Int& at(long i, long j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix transpose() const;

  std::vector<Int> mul_vec(const std::vector<Int>& v) const;
  std::vector<Int> column(long j) const;
  std::vector<Int> row(long i) const;
  void set_column(long j, const std::vector<Int>& v);

  // stack rows of `a` then rows of `b` (same cols)
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  // concat columns (same rows)
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  IntMatrix submatrix(long r0, long c0, long nr, long nc) const;

  void swap_rows(long i, long j);
  void swap_cols(long i, long j);

  Int det() const;  // fraction-free Bareiss

  std::string str() const;

 private:
  long rows_, cols_;
  std::vector<Int> a_;
};

struct HnfResult {
  IntMatrix h;  // row Hermite normal form: echelon, positive pivots, entries above pivots reduced into [0, pivot)
  IntMatrix u;  // unimodular, h = u * m
};

// Row HNF with transform. Pivot choice: minimal absolute value nonzero (controls entry growth).
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, d = u * m * v
};

SnfResult snf(const IntMatrix& m);

// ---- column-lattice utilities (lattices are column spans over Z) ----

// canonical basis of the column span: full-column-rank matrix, unique (column-style HNF)
IntMatrix lattice_basis(const IntMatrix& gens);

// solve A x = b over Z; nullopt if unsolvable
std::optional<std::vector<Int>> solve_columns(const IntMatrix& A, const std::vector<Int>& b);

// basis of {x : A x = 0}, as columns
IntMatrix kernel_columns(const IntMatrix& A);

bool lattice_contains(const IntMatrix& basis_or_gens, const std::vector<Int>& v);

// {x : A x in colspan(L)}, as column basis; A maps Z^n -> Z^m, L has m rows
IntMatrix preimage_lattice(const IntMatrix& A, const IntMatrix& L);

bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

long rank_of(const IntMatrix& m);

}  // namespace toruscl
