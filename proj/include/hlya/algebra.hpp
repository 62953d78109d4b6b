#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hlya/linalg.hpp"

namespace hlya {

/* A finite-dimensional algebra with one skew bilinear product, one trilinear
   product skew in its first two slots, and a linear twist map, all stored as
   structure-constant tables over a fixed basis. Values are immutable after
   construction; the constructor symmetrizes sparse input and rejects
   conflicting assignments upstream (see document.cpp), while this type
   enforces the skew identities on whatever tables it receives. */
template <class K>
class Algebra {
 public:
  using Field = typename K::Field;

  Algebra(std::size_t dim, Field field, std::vector<std::string> basis_names,
          std::vector<std::vector<Vec<K>>> binary,
          std::vector<std::vector<std::vector<Vec<K>>>> ternary, Matrix<K> twist)
      : dim_(dim),
        field_(field),
        names_(std::move(basis_names)),
        b_(std::move(binary)),
        t_(std::move(ternary)),
        twist_(std::move(twist)) {
    if (names_.empty()) {
      names_.reserve(dim_);
      for (std::size_t i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i + 1));
    }
    if (names_.size() != dim_) throw DimensionMismatch("basis name count");
    if (b_.size() != dim_ || t_.size() != dim_)
      throw DimensionMismatch("structure table size");
    for (std::size_t i = 0; i < dim_; ++i) {
      if (b_[i].size() != dim_ || t_[i].size() != dim_)
        throw DimensionMismatch("structure table size");
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b_[i][j].size() != dim_ || t_[i][j].size() != dim_)
          throw DimensionMismatch("structure table size");
        for (std::size_t k = 0; k < dim_; ++k)
          if (t_[i][j][k].size() != dim_) throw DimensionMismatch("structure table size");
      }
    }
    if (twist_.rows() != dim_ || twist_.cols() != dim_)
      throw DimensionMismatch("twist matrix shape");
  }

  static Algebra abelian(std::size_t dim, Field field, Matrix<K> twist) {
    std::vector<std::vector<Vec<K>>> b(
        dim, std::vector<Vec<K>>(dim, zero_vec<K>(dim, field)));
    std::vector<std::vector<std::vector<Vec<K>>>> t(
        dim, std::vector<std::vector<Vec<K>>>(
                 dim, std::vector<Vec<K>>(dim, zero_vec<K>(dim, field))));
    return Algebra(dim, field, {}, std::move(b), std::move(t), std::move(twist));
  }

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Matrix<K>& twist() const { return twist_; }

  const Vec<K>& binary(std::size_t i, std::size_t j) const { return b_[i][j]; }
  const Vec<K>& ternary(std::size_t i, std::size_t j, std::size_t k) const {
    return t_[i][j][k];
  }

  /* multilinear extension of the tables to arbitrary coordinate vectors */
  Vec<K> eval_binary(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> out = zero_vec<K>(dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        out = vec_add(out, vec_scale(x[i] * y[j], b_[i][j]));
      }
    }
    return out;
  }
  Vec<K> eval_ternary(const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const {
    Vec<K> out = zero_vec<K>(dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        for (std::size_t k = 0; k < dim_; ++k) {
          if (z[k].is_zero()) continue;
          out = vec_add(out, vec_scale(x[i] * y[j] * z[k], t_[i][j][k]));
        }
      }
    }
    return out;
  }

  Vec<K> apply_twist(const Vec<K>& x) const { return mat_vec(twist_, x); }

  Vec<K> unit(std::size_t i) const { return unit_vec<K>(dim_, i, field_); }

  bool operator==(const Algebra& o) const {
    return dim_ == o.dim_ && field_ == o.field_ && b_ == o.b_ && t_ == o.t_ &&
           twist_ == o.twist_;
  }

 private:
  std::size_t dim_;
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec<K>>> b_;
  std::vector<std::vector<std::vector<Vec<K>>>> t_;
  Matrix<K> twist_;
};

/* Builder that accepts sparse entries for i<j (binary) and i<j (first two
   ternary slots), fills the skew counterparts, and zeroes the diagonal. */
template <class K>
class AlgebraBuilder {
 public:
  using Field = typename K::Field;

  AlgebraBuilder(std::size_t dim, Field field)
      : dim_(dim),
        field_(field),
        b_(dim, std::vector<Vec<K>>(dim, zero_vec<K>(dim, field))),
        t_(dim, std::vector<std::vector<Vec<K>>>(
                    dim, std::vector<Vec<K>>(dim, zero_vec<K>(dim, field)))),
        twist_(Matrix<K>::identity(dim, field)) {}

  AlgebraBuilder& set_binary(std::size_t i, std::size_t j, Vec<K> v) {
    if (i >= dim_ || j >= dim_ || v.size() != dim_)
      throw DimensionMismatch("binary entry out of range");
    if (i == j) {
      if (!vec_is_zero(v)) throw ParseError("nonzero product of a basis vector with itself");
      return *this;
    }
    b_[i][j] = v;
    b_[j][i] = vec_neg(v);
    return *this;
  }
  AlgebraBuilder& set_ternary(std::size_t i, std::size_t j, std::size_t k, Vec<K> v) {
    if (i >= dim_ || j >= dim_ || k >= dim_ || v.size() != dim_)
      throw DimensionMismatch("ternary entry out of range");
    if (i == j) {
      if (!vec_is_zero(v))
        throw ParseError("nonzero ternary product with repeated first arguments");
      return *this;
    }
    t_[i][j][k] = v;
    t_[j][i][k] = vec_neg(v);
    return *this;
  }
  AlgebraBuilder& set_twist(Matrix<K> m) {
    twist_ = std::move(m);
    return *this;
  }
  AlgebraBuilder& set_names(std::vector<std::string> names) {
    names_ = std::move(names);
    return *this;
  }

  Algebra<K> build() {
    return Algebra<K>(dim_, field_, std::move(names_), std::move(b_), std::move(t_),
                      std::move(twist_));
  }

 private:
  std::size_t dim_;
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec<K>>> b_;
  std::vector<std::vector<std::vector<Vec<K>>>> t_;
  Matrix<K> twist_;
};

/* Direct sum: block tables, block-diagonal twist, cross products zero. */
template <class K>
Algebra<K> direct_sum(const Algebra<K>& a, const Algebra<K>& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct sum over different fields");
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  auto lift_a = [&](const Vec<K>& v) {
    Vec<K> out = zero_vec<K>(d, a.field());
    for (std::size_t i = 0; i < n; ++i) out[i] = v[i];
    return out;
  };
  auto lift_b = [&](const Vec<K>& v) {
    Vec<K> out = zero_vec<K>(d, a.field());
    for (std::size_t i = 0; i < m; ++i) out[n + i] = v[i];
    return out;
  };
  AlgebraBuilder<K> bld(d, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) bld.set_binary(i, j, lift_a(a.binary(i, j)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      bld.set_binary(n + i, n + j, lift_b(b.binary(i, j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        bld.set_ternary(i, j, k, lift_a(a.ternary(i, j, k)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        bld.set_ternary(n + i, n + j, n + k, lift_b(b.ternary(i, j, k)));
  Matrix<K> tw(d, d, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tw(i, j) = a.twist()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) tw(n + i, n + j) = b.twist()(i, j);
  std::vector<std::string> names;
  for (const auto& s : a.basis_names()) names.push_back("l." + s);
  for (const auto& s : b.basis_names()) names.push_back("r." + s);
  bld.set_twist(std::move(tw));
  bld.set_names(std::move(names));
  return bld.build();
}

}  // namespace hlya
