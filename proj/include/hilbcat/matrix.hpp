#pragma once

// Dense matrices of Scalars with exact elimination. All entries of a
// matrix share one ScalarRing. Reduction, nullspaces and inverses are
// only defined over the field rings.

#include <cstddef>
#include <utility>
#include <vector>

#include "hilbcat/error.hpp"
#include "hilbcat/scalar.hpp"

namespace hilbcat {

class Matrix {
 public:
  Matrix(ScalarRing ring, size_t rows, size_t cols)
      : ring_(ring), rows_(rows), cols_(cols),
        data_(rows * cols, Scalar::zero(ring)) {}

  static Matrix identity(ScalarRing ring, size_t n) {
    Matrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
    return m;
  }

  const ScalarRing& ring() const { return ring_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& s : data_)
      if (!s.is_zero()) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r(a.ring_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i)
      r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r(a.ring_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i)
      r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }

  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix r(a.ring_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.ring_ != b.ring_) throw error("ring mismatch");
    if (a.cols_ != b.rows_) throw error("dimension mismatch in product");
    Matrix r(a.ring_, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j)
          r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
      }
    return r;
  }

 private:
  ScalarRing ring_;
  size_t rows_, cols_;
  std::vector<Scalar> data_;

  void same_shape(const Matrix& b) const {
    if (ring_ != b.ring_) throw error("ring mismatch");
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw error("shape mismatch");
  }
};

inline Matrix transpose(const Matrix& m) {
  Matrix r(m.ring(), m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
  return r;
}

/// Entrywise involution followed by transposition (the ‡ᵀ of the text).
inline Matrix conj_transpose(const Matrix& m) {
  Matrix r(m.ring(), m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(j, i) = involute(m.at(i, j));
  return r;
}

inline bool is_hermitian(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  return conj_transpose(m) == m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) throw error("ring mismatch");
  Matrix r(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) throw error("ring mismatch");
  Matrix r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

/// Vertical stack [a; b].
inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring() || a.cols() != b.cols())
    throw error("vstack mismatch");
  Matrix r(a.ring(), a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

/// Horizontal stack [a b].
inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring() || a.rows() != b.rows())
    throw error("hstack mismatch");
  Matrix r(a.ring(), a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

/// Single-line form "[a,b;c,d]" for witnesses and transcripts.
inline std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ";";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += to_string(m.at(i, j));
    }
  }
  return s + "]";
}

// ---- elimination ----

/// Pivot choice inside a column. MaxNumerator picks the candidate whose
/// numerator height is largest (ties to the lowest row index), which keeps
/// reduced bases reproducible across runs. FirstNonzero exists to produce a
/// second, differently pivoted reduction of the same matrix.
enum class PivotRule { MaxNumerator, FirstNonzero };

namespace detail {

inline mpz_class pivot_height(const Scalar& s) {
  mpz_class h = abs(s.re().get_num());
  mpz_class h2 = abs(s.im().get_num());
  return h >= h2 ? h : h2;
}

}  // namespace detail

struct RrefResult {
  Matrix reduced;
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
};

inline RrefResult rref(const Matrix& m, PivotRule rule = PivotRule::MaxNumerator) {
  if (!m.ring().is_field()) throw error("elimination requires a field ring");
  Matrix a = m;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t best = a.rows();
    for (size_t i = row; i < a.rows(); ++i) {
      if (a.at(i, col).is_zero()) continue;
      if (best == a.rows()) {
        best = i;
        if (rule == PivotRule::FirstNonzero) break;
      } else if (detail::pivot_height(a.at(i, col)) >
                 detail::pivot_height(a.at(best, col))) {
        best = i;
      }
    }
    if (best == a.rows()) continue;
    if (best != row)
      for (size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(row, j), a.at(best, j));
    Scalar inv = invert(a.at(row, col));
    for (size_t j = col; j < a.cols(); ++j) a.at(row, j) = inv * a.at(row, j);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (size_t j = col; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots), row};
}

inline size_t rank(const Matrix& m, PivotRule rule = PivotRule::MaxNumerator) {
  return rref(m, rule).rank;
}

/// Columns form a basis of { x : m x = 0 }.
inline Matrix nullspace_basis(const Matrix& m,
                              PivotRule rule = PivotRule::MaxNumerator) {
  RrefResult r = rref(m, rule);
  std::vector<size_t> free_cols;
  {
    size_t p = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c) { ++p; continue; }
      free_cols.push_back(c);
    }
  }
  Matrix basis(m.ring(), m.cols(), free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(free_cols[k], k) = Scalar::one(m.ring());
    for (size_t p = 0; p < r.pivot_cols.size(); ++p)
      basis.at(r.pivot_cols[p], k) = -r.reduced.at(p, free_cols[k]);
  }
  return basis;
}

/// Columns form a basis of the column space: the original columns at the
/// pivot positions of the reduction.
inline Matrix column_space_basis(const Matrix& m,
                                 PivotRule rule = PivotRule::MaxNumerator) {
  RrefResult r = rref(m, rule);
  Matrix basis(m.ring(), m.rows(), r.pivot_cols.size());
  for (size_t k = 0; k < r.pivot_cols.size(); ++k)
    for (size_t i = 0; i < m.rows(); ++i)
      basis.at(i, k) = m.at(i, r.pivot_cols[k]);
  return basis;
}

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw error("inverse of non-square matrix");
  RrefResult r = rref(hstack(m, Matrix::identity(m.ring(), m.rows())));
  // the augmented matrix always has full row rank; invertibility means the
  // pivots all land in the left block
  for (size_t i = 0; i < m.rows(); ++i)
    if (i >= r.pivot_cols.size() || r.pivot_cols[i] != i)
      throw error("singular matrix");
  Matrix inv(m.ring(), m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      inv.at(i, j) = r.reduced.at(i, m.cols() + j);
  return inv;
}

// ---- exact (semi)definiteness of Hermitian matrices ----

namespace detail {

// Symmetric elimination; each accepted pivot must be positive. With
// allow_zero, a zero pivot is accepted only when its whole row vanishes.
inline bool definite_check(Matrix a, bool allow_zero) {
  size_t n = a.rows();
  for (size_t k = 0; k < n; ++k) {
    const Scalar p = a.at(k, k);
    if (p.is_zero()) {
      if (!allow_zero) return false;
      for (size_t j = k + 1; j < n; ++j)
        if (!a.at(k, j).is_zero()) return false;
      continue;
    }
    if (!is_positive(p)) return false;
    Scalar pinv = invert(p);
    for (size_t i = k + 1; i < n; ++i) {
      Scalar f = a.at(i, k) * pinv;
      if (f.is_zero()) continue;
      // row operation on a Hermitian block with a real pivot leaves the
      // trailing block exactly Hermitian (the Schur complement)
      for (size_t j = k; j < n; ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(k, j);
    }
  }
  return true;
}

}  // namespace detail

/// Exact test: x‡ᵀ m x lies in the positive cone for every x, decided by
/// pivoted symmetric elimination. Requires m Hermitian.
inline bool is_positive_semidefinite(const Matrix& m) {
  if (!is_hermitian(m)) throw error("semidefiniteness needs a Hermitian matrix");
  return detail::definite_check(m, /*allow_zero=*/true);
}

inline bool is_positive_definite(const Matrix& m) {
  if (!is_hermitian(m)) return false;
  return detail::definite_check(m, /*allow_zero=*/false);
}

}  // namespace hilbcat
