#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hlya/errors.hpp"

namespace hlya {

/* Coordinate vectors are plain std::vector<K>; the field travels with the
   elements (or with the surrounding Matrix/algebra when the vector is empty). */
template <class K>
using Vec = std::vector<K>;

/* Dense row-major matrix over an exact scalar type. Zero-row and zero-column
   shapes are legal everywhere; they show up for 0-dimensional algebras and
   empty subspaces. */
template <class K>
class Matrix {
 public:
  using Field = typename K::Field;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, Field f)
      : rows_(rows), cols_(cols), field_(f), e_(rows * cols, K::zero(f)) {}

  static Matrix identity(std::size_t n, Field f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K::one(f);
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols, Field f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  K& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec<K> row(std::size_t i) const {
    Vec<K> r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back((*this)(i, j));
    return r;
  }
  Vec<K> col(std::size_t j) const {
    Vec<K> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  void set_row(std::size_t i, const Vec<K>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void set_col(std::size_t j, const Vec<K>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).str();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<K> e_;
};

/* --- vector helpers ------------------------------------------------------ */

template <class K>
Vec<K> zero_vec(std::size_t n, typename K::Field f) {
  return Vec<K>(n, K::zero(f));
}

template <class K>
Vec<K> unit_vec(std::size_t n, std::size_t i, typename K::Field f) {
  Vec<K> v(n, K::zero(f));
  v[i] = K::one(f);
  return v;
}

template <class K>
bool vec_is_zero(const Vec<K>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length");
  Vec<K> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference length");
  Vec<K> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class K>
Vec<K> vec_neg(const Vec<K>& a) {
  Vec<K> r = a;
  for (auto& x : r) x = -x;
  return r;
}

template <class K>
Vec<K> vec_scale(const K& c, const Vec<K>& a) {
  Vec<K> r = a;
  for (auto& x : r) x = c * x;
  return r;
}

template <class K>
Vec<K> mat_vec(const Matrix<K>& m, const Vec<K>& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector shape");
  Vec<K> r(m.rows(), K::zero(m.field()));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) r[i] += m(i, j) * v[j];
  }
  return r;
}

template <class K>
std::string vec_str(const Vec<K>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

/* Columns of `m` become the first columns of the result, then columns of `o`. */
template <class K>
Matrix<K> hstack(const Matrix<K>& m, const Matrix<K>& o) {
  if (m.rows() != o.rows()) throw DimensionMismatch("hstack row count");
  Matrix<K> r(m.rows(), m.cols() + o.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    for (std::size_t j = 0; j < o.cols(); ++j) r(i, m.cols() + j) = o(i, j);
  }
  return r;
}

template <class K>
Matrix<K> vstack(const Matrix<K>& m, const Matrix<K>& o) {
  if (m.cols() != o.cols()) throw DimensionMismatch("vstack column count");
  Matrix<K> r(m.rows() + o.rows(), m.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  for (std::size_t i = 0; i < o.rows(); ++i)
    for (std::size_t j = 0; j < o.cols(); ++j) r(m.rows() + i, j) = o(i, j);
  return r;
}

}  // namespace hlya
