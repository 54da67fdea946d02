#include "toruscl/int_matrix.hpp"

#include <sstream>

namespace toruscl {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = (long)rows.size();
  cols_ = rows_ ? (long)rows.begin()->size() : 0;
  a_.resize(rows_ * cols_);
  long i = 0;
  for (auto& r : rows) {
    if ((long)r.size() != cols_) throw std::invalid_argument("ragged initializer");
    long j = 0;
    for (long v : r) a_[i * cols_ + j++] = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m((long)d.size(), (long)d.size());
  for (long i = 0; i < (long)d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_columns(long nrows, const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(nrows, (long)cols.size());
  for (long j = 0; j < (long)cols.size(); ++j) {
    if ((long)cols[j].size() != nrows) throw std::invalid_argument("column size mismatch");
    for (long i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("mul shape");
  IntMatrix r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (long j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add shape");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sub shape");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::mul_vec(const std::vector<Int>& v) const {
  if ((long)v.size() != cols_) throw std::invalid_argument("mul_vec shape");
  std::vector<Int> r(rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<Int> IntMatrix::column(long j) const {
  std::vector<Int> c(rows_);
  for (long i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Int> IntMatrix::row(long i) const {
  std::vector<Int> r(cols_);
  for (long j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void IntMatrix::set_column(long j, const std::vector<Int>& v) {
  for (long i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_ && a.rows_ != 0 && b.rows_ != 0) throw std::invalid_argument("vstack shape");
  long cols = a.rows_ ? a.cols_ : b.cols_;
  IntMatrix r(a.rows_ + b.rows_, cols);
  for (long i = 0; i < a.rows_; ++i)
    for (long j = 0; j < cols; ++j) r.at(i, j) = a.at(i, j);
  for (long i = 0; i < b.rows_; ++i)
    for (long j = 0; j < cols; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ && a.cols_ != 0 && b.cols_ != 0) throw std::invalid_argument("hstack shape");
  long rows = a.cols_ ? a.rows_ : b.rows_;
  IntMatrix r(rows, a.cols_ + b.cols_);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (long j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::submatrix(long r0, long c0, long nr, long nc) const {
  IntMatrix r(nr, nc);
  for (long i = 0; i < nr; ++i)
    for (long j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

void IntMatrix::swap_rows(long i, long j) {
  if (i == j) return;
  for (long k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(long i, long j) {
  if (i == j) return;
  for (long k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square");
  long n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j)
        m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream o;
  o << "[";
  for (long i = 0; i < rows_; ++i) {
    o << (i ? " [" : "[");
    for (long j = 0; j < cols_; ++j) o << (j ? "," : "") << at(i, j).get_str();
    o << "]";
  }
  o << "]";
  return o.str();
}

HnfResult hnf(const IntMatrix& m) {
  long R = m.rows(), C = m.cols();
  IntMatrix h = m, u = IntMatrix::identity(R);
  long r = 0;
  for (long c = 0; c < C && r < R; ++c) {
    // repeat euclidean elimination in column c below row r until one nonzero remains
    for (;;) {
      long piv = -1;
      for (long i = r; i < R; ++i) {
        if (h.at(i, c) == 0) continue;
        if (piv < 0 || mpz_cmpabs(h.at(i, c).get_mpz_t(), h.at(piv, c).get_mpz_t()) < 0) piv = i;
      }
      if (piv < 0) break;
      h.swap_rows(r, piv);
      u.swap_rows(r, piv);
      bool again = false;
      for (long i = r + 1; i < R; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = fdiv_q(h.at(i, c), h.at(r, c));
        if (q != 0) {
          for (long j = 0; j < C; ++j) h.at(i, j) -= q * h.at(r, j);
          for (long j = 0; j < R; ++j) u.at(i, j) -= q * u.at(r, j);
        }
        if (h.at(i, c) != 0) again = true;
      }
      if (!again) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      for (long j = 0; j < C; ++j) h.at(r, j) = -h.at(r, j);
      for (long j = 0; j < R; ++j) u.at(r, j) = -u.at(r, j);
    }
    for (long i = 0; i < r; ++i) {
      Int q = fdiv_q(h.at(i, c), h.at(r, c));
      if (q != 0) {
        for (long j = 0; j < C; ++j) h.at(i, j) -= q * h.at(r, j);
        for (long j = 0; j < R; ++j) u.at(i, j) -= q * u.at(r, j);
      }
    }
    ++r;
  }
  return {h, u};
}

SnfResult snf(const IntMatrix& m) {
  long R = m.rows(), C = m.cols();
  IntMatrix d = m, u = IntMatrix::identity(R), v = IntMatrix::identity(C);
  long n = std::min(R, C);
  for (long t = 0; t < n; ++t) {
    for (;;) {
      // find minimal-abs nonzero entry in the trailing block
      long pi = -1, pj = -1;
      for (long i = t; i < R; ++i)
        for (long j = t; j < C; ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        pi = pj = -1;
        break;
      }
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);
      bool clean = true;
      for (long i = t + 1; i < R; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = fdiv_q(d.at(i, t), d.at(t, t));
        if (q != 0) {
          for (long j = 0; j < C; ++j) d.at(i, j) -= q * d.at(t, j);
          for (long j = 0; j < R; ++j) u.at(i, j) -= q * u.at(t, j);
        }
        if (d.at(i, t) != 0) clean = false;
      }
      for (long j = t + 1; j < C; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = fdiv_q(d.at(t, j), d.at(t, t));
        if (q != 0) {
          for (long i = 0; i < R; ++i) d.at(i, j) -= q * d.at(i, t);
          for (long i = 0; i < C; ++i) v.at(i, j) -= q * v.at(i, t);
        }
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility fix-up: pivot must divide the whole trailing block
      bool fixed = true;
      for (long i = t + 1; i < R && fixed; ++i)
        for (long j = t + 1; j < C && fixed; ++j)
          if (!divides(d.at(t, t), d.at(i, j))) {
            for (long k = 0; k < C; ++k) d.at(t, k) += d.at(i, k);
            for (long k = 0; k < R; ++k) u.at(t, k) += u.at(i, k);
            fixed = false;
          }
      if (fixed) break;
    }
    if (d.at(t, t) < 0) {
      d.at(t, t) = -d.at(t, t);
      for (long j = 0; j < R; ++j) u.at(t, j) = -u.at(t, j);
    }
  }
  return {d, u, v};
}

IntMatrix lattice_basis(const IntMatrix& gens) {
  // column HNF: transpose, row-hnf, keep nonzero rows, transpose back
  HnfResult r = hnf(gens.transpose());
  long nz = 0;
  for (long i = 0; i < r.h.rows(); ++i) {
    bool z = true;
    for (long j = 0; j < r.h.cols(); ++j)
      if (r.h.at(i, j) != 0) {
        z = false;
        break;
      }
    if (!z) nz = i + 1;
  }
  return r.h.submatrix(0, 0, nz, r.h.cols()).transpose();
}

std::optional<std::vector<Int>> solve_columns(const IntMatrix& A, const std::vector<Int>& b) {
  // x with A x = b: row-reduce A^T, express b over rows of H
  long n = A.cols();
  if (n == 0) {
    for (auto& x : b)
      if (x != 0) return std::nullopt;
    return std::vector<Int>{};
  }
  HnfResult r = hnf(A.transpose());
  std::vector<Int> resid = b, coef(r.h.rows());
  for (long i = 0; i < r.h.rows(); ++i) {
    long p = -1;
    for (long j = 0; j < r.h.cols(); ++j)
      if (r.h.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) break;
    if (resid[p] == 0) continue;
    if (!divides(r.h.at(i, p), resid[p])) return std::nullopt;
    Int q = exact_div(resid[p], r.h.at(i, p));
    coef[i] = q;
    for (long j = 0; j < r.h.cols(); ++j) resid[j] -= q * r.h.at(i, j);
  }
  for (auto& x : resid)
    if (x != 0) return std::nullopt;
  // x = U^T coef
  std::vector<Int> x(n);
  for (long j = 0; j < n; ++j)
    for (long i = 0; i < r.u.rows(); ++i)
      if (coef[i] != 0 && r.u.at(i, j) != 0) x[j] += r.u.at(i, j) * coef[i];
  return x;
}

IntMatrix kernel_columns(const IntMatrix& A) {
  long n = A.cols();
  HnfResult r = hnf(A.transpose());
  std::vector<std::vector<Int>> cols;
  for (long i = 0; i < r.h.rows(); ++i) {
    bool z = true;
    for (long j = 0; j < r.h.cols(); ++j)
      if (r.h.at(i, j) != 0) {
        z = false;
        break;
      }
    if (z) cols.push_back(r.u.row(i));
  }
  return IntMatrix::from_columns(n, cols);
}

bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& v) {
  return solve_columns(gens, v).has_value();
}

IntMatrix preimage_lattice(const IntMatrix& A, const IntMatrix& L) {
  // {x : A x = L y for some y}: kernel of [A | -L], take x-parts, basis
  long n = A.cols();
  IntMatrix K = kernel_columns(IntMatrix::hstack(A, -L));
  IntMatrix xpart = K.submatrix(0, 0, n, K.cols());
  return lattice_basis(xpart);
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  return lattice_basis(a) == lattice_basis(b);
}

long rank_of(const IntMatrix& m) {
  HnfResult r = hnf(m);
  long rk = 0;
  for (long i = 0; i < r.h.rows(); ++i) {
    bool z = true;
    for (long j = 0; j < r.h.cols(); ++j)
      if (r.h.at(i, j) != 0) {
        z = false;
        break;
      }
    if (!z) ++rk;
  }
  return rk;
}

}  // namespace toruscl
