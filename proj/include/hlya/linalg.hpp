#pragma once

#include <optional>
#include <utility>

#include "hlya/matrix.hpp"

namespace hlya {

template <class K>
struct RrefResult {
  Matrix<K> m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/* Gauss-Jordan elimination to reduced row echelon form. Pivot choice is the
   first nonzero entry scanning down each column, so the output is the unique
   canonical RREF of the row space. */
template <class K>
RrefResult<K> rref(const Matrix<K>& in) {
  RrefResult<K> res{in, 0, {}};
  Matrix<K>& m = res.m;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    K inv = K::one(m.field()) / m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = inv * m(r, j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

/* Solves m x = rhs column-by-column (rhs may have several columns). Returns
   nullopt when any column is inconsistent. Free variables are set to zero, so
   the result is deterministic. */
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& m, const Matrix<K>& rhs) {
  if (m.rows() != rhs.rows()) throw DimensionMismatch("solve: rhs row count");
  RrefResult<K> red = rref(hstack(m, rhs));
  /* a pivot in the rhs block means some column is inconsistent */
  for (std::size_t p : red.pivots)
    if (p >= m.cols()) return std::nullopt;
  Matrix<K> x(m.cols(), rhs.cols(), m.field());
  for (std::size_t r = 0; r < red.rank; ++r)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      x(red.pivots[r], j) = red.m(r, m.cols() + j);
  return x;
}

template <class K>
std::optional<Vec<K>> solve_vec(const Matrix<K>& m, const Vec<K>& rhs) {
  Matrix<K> b(m.rows(), 1, m.field());
  if (rhs.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  b.set_col(0, rhs);
  auto x = solve(m, b);
  if (!x) return std::nullopt;
  return x->col(0);
}

/* Throws SingularMatrix when m is not square of full rank. */
template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  RrefResult<K> red = rref(hstack(m, Matrix<K>::identity(m.rows(), m.field())));
  /* a pivot inside the appended identity block means m itself is rank-deficient */
  for (std::size_t p : red.pivots)
    if (p >= m.cols()) throw SingularMatrix();
  if (red.rank < m.rows()) throw SingularMatrix();
  Matrix<K> inv(m.rows(), m.rows(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) inv(i, j) = red.m(i, m.cols() + j);
  return inv;
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/* A linear subspace of K^ambient, stored as the canonical RREF basis (one
   basis vector per row). Equal subspaces compare bit-identical. */
template <class K>
class Subspace {
 public:
  using Field = typename K::Field;

  static Subspace zero(std::size_t ambient, Field f) {
    return Subspace(ambient, Matrix<K>(0, ambient, f));
  }
  static Subspace full(std::size_t ambient, Field f) {
    return Subspace(ambient, Matrix<K>::identity(ambient, f));
  }
  /* Canonicalizes arbitrary spanning rows. */
  static Subspace span_rows(const Matrix<K>& rows) {
    RrefResult<K> red = rref(rows);
    Matrix<K> basis(red.rank, rows.cols(), rows.field());
    for (std::size_t i = 0; i < red.rank; ++i) basis.set_row(i, red.m.row(i));
    return Subspace(rows.cols(), std::move(basis));
  }
  static Subspace span_vecs(const std::vector<Vec<K>>& vs, std::size_t ambient, Field f) {
    return span_rows(Matrix<K>::from_rows(vs, ambient, f));
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  Field field() const { return basis_.field(); }
  const Matrix<K>& basis() const { return basis_; }
  Vec<K> basis_vector(std::size_t i) const { return basis_.row(i); }

  /* basis vectors as columns: the embedding K^dim -> K^ambient */
  Matrix<K> embedding() const { return basis_.transpose(); }

  bool contains(const Vec<K>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("membership: ambient mismatch");
    return static_cast<bool>(solve_vec(embedding(), v));
  }
  bool contains(const Subspace& o) const {
    check_ambient(o);
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_vector(i))) return false;
    return true;
  }

  /* Coordinates of v in this basis; nullopt when v lies outside. */
  std::optional<Vec<K>> coords(const Vec<K>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("coords: ambient mismatch");
    return solve_vec(embedding(), v);
  }

  Subspace sum(const Subspace& o) const {
    check_ambient(o);
    return span_rows(vstack(basis_, o.basis_));
  }

  /* Intersection via the kernel of [A^T | -B^T]: x = A^T u = B^T v. */
  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace(std::size_t ambient, Matrix<K> basis)
      : ambient_(ambient), basis_(std::move(basis)) {}
  void check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("subspace ambient mismatch");
  }
  std::size_t ambient_;
  Matrix<K> basis_;
};

/* Kernel of m as a canonical subspace of K^cols. */
template <class K>
Subspace<K> kernel_basis(const Matrix<K>& m) {
  RrefResult<K> red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<Vec<K>> gens;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec<K> v = zero_vec<K>(n, m.field());
    v[c] = K::one(m.field());
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.m(r, c);
    gens.push_back(std::move(v));
  }
  return Subspace<K>::span_vecs(gens, n, m.field());
}

template <class K>
Subspace<K> Subspace<K>::intersect(const Subspace& o) const {
  check_ambient(o);
  const std::size_t d1 = dim(), d2 = o.dim();
  Matrix<K> sys = hstack(embedding(), -o.embedding());
  Subspace<K> ker = kernel_basis(sys);
  std::vector<Vec<K>> gens;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec<K> uv = ker.basis_vector(i);
    Vec<K> x = zero_vec<K>(ambient_, field());
    for (std::size_t j = 0; j < d1; ++j)
      x = vec_add(x, vec_scale(uv[j], basis_vector(j)));
    gens.push_back(std::move(x));
  }
  (void)d2;
  return span_vecs(gens, ambient_, field());
}

struct SubspaceOps {
  bool contains = false;
  bool equal = false;
};

template <class K>
struct SubspaceOpsResult {
  Subspace<K> sum;
  Subspace<K> intersection;
  bool contains;  /* a ⊇ b */
  bool equal;
};

template <class K>
SubspaceOpsResult<K> subspace_ops(const Subspace<K>& a, const Subspace<K>& b) {
  Subspace<K> s = a.sum(b);
  Subspace<K> i = a.intersect(b);
  bool contains = a.contains(b);
  return {std::move(s), std::move(i), contains, contains && a.dim() == b.dim()};
}

/* Deterministic complement of w inside u (w ⊆ u required): scan u's canonical
   basis rows in index order and keep those that extend the span of w. */
template <class K>
Subspace<K> complement(const Subspace<K>& w, const Subspace<K>& u) {
  if (!u.contains(w)) throw DimensionMismatch("complement: w is not contained in u");
  Matrix<K> cur = w.basis();
  std::vector<Vec<K>> keep;
  std::size_t cur_rank = w.dim();
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Vec<K> cand = u.basis_vector(i);
    Matrix<K> trym = vstack(cur, Matrix<K>::from_rows({cand}, u.ambient(), u.field()));
    if (rank(trym) > cur_rank) {
      keep.push_back(cand);
      cur = trym;
      ++cur_rank;
    }
  }
  return Subspace<K>::span_vecs(keep, u.ambient(), u.field());
}

namespace detail {

/* Restriction of the operator t to the subspace u, in u's basis coordinates.
   Requires t·u ⊆ u. */
template <class K>
Matrix<K> restrict_operator(const Matrix<K>& t, const Subspace<K>& u) {
  Matrix<K> emb = u.embedding();
  auto sol = solve(emb, t * emb);
  if (!sol) throw DimensionMismatch("operator does not preserve the subspace");
  return *sol;
}

}  // namespace detail

/* alpha-invariant complement of w in u: parametrize complements of w as
   graphs of phi: c -> w over a fixed complement c, turn invariance into the
   Sylvester equation  T_ww·phi − phi·T_cc = −T_wc,  and solve it exactly via
   the Kronecker/vec form. Free variables are zeroed, so the returned
   complement is deterministic; inconsistency means no invariant complement
   exists and nullopt is returned. */
template <class K>
std::optional<Subspace<K>> invariant_complement(const Subspace<K>& w,
                                                const Subspace<K>& u,
                                                const Matrix<K>& t) {
  using F = typename K::Field;
  const F f = u.field();
  if (!u.contains(w)) throw DimensionMismatch("invariant_complement: w ⊄ u");

  /* work in u-coordinates */
  Matrix<K> t_u = detail::restrict_operator(t, u);  /* throws if t·u ⊄ u */
  const std::size_t d = u.dim();
  std::vector<Vec<K>> w_in_u;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    auto c = u.coords(w.basis_vector(i));
    if (!c) throw DimensionMismatch("invariant_complement: w ⊄ u");
    w_in_u.push_back(*c);
  }
  Subspace<K> wu = Subspace<K>::span_vecs(w_in_u, d, f);
  {
    Matrix<K> im = t_u * wu.embedding();
    for (std::size_t j = 0; j < wu.dim(); ++j)
      if (!wu.contains(im.col(j)))
        throw DimensionMismatch("invariant_complement: t·w ⊄ w");
  }

  const std::size_t m = wu.dim();
  const std::size_t k = d - m;
  Subspace<K> cu = complement(wu, Subspace<K>::full(d, f));
  Matrix<K> W = wu.embedding();  /* d×m */
  Matrix<K> C = cu.embedding();  /* d×k */

  /* Express t in the (w, c) basis: S = [W | C], S⁻¹ t S = [[T_ww, T_wc],[0, T_cc]]. */
  Matrix<K> S = hstack(W, C);
  Matrix<K> T = inverse(S) * t_u * S;
  Matrix<K> Tww(m, m, f), Twc(m, k, f), Tcc(k, k, f);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) Tww(i, j) = T(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) Twc(i, j) = T(i, m + j);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) Tcc(i, j) = T(m + i, m + j);

  /* vec(phi) stacks columns; condition T_ww·phi − phi·T_cc = −T_wc becomes
     (I_k ⊗ T_ww − T_cc^T ⊗ I_m)·vec(phi) = vec(−T_wc). */
  Matrix<K> sys(m * k, m * k, f);
  Matrix<K> rhs(m * k, 1, f);
  for (std::size_t cj = 0; cj < k; ++cj)
    for (std::size_t ri = 0; ri < m; ++ri) {
      const std::size_t row = cj * m + ri;
      for (std::size_t a = 0; a < m; ++a) sys(row, cj * m + a) += Tww(ri, a);
      for (std::size_t b = 0; b < k; ++b) sys(row, b * m + ri) -= Tcc(b, cj);
      rhs(row, 0) = -Twc(ri, cj);
    }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Matrix<K> phi(m, k, f);
  for (std::size_t cj = 0; cj < k; ++cj)
    for (std::size_t ri = 0; ri < m; ++ri) phi(ri, cj) = (*sol)(cj * m + ri, 0);

  /* v = span{ C e_j + W phi e_j }, lifted back to ambient coordinates */
  std::vector<Vec<K>> gens;
  for (std::size_t j = 0; j < k; ++j) {
    Vec<K> in_u = vec_add(C.col(j), mat_vec(W, phi.col(j)));
    Vec<K> amb = mat_vec(u.embedding(), in_u);
    gens.push_back(std::move(amb));
  }
  Subspace<K> v = Subspace<K>::span_vecs(gens, u.ambient(), f);

  /* hard sanity checks: w ⊕ v = u and t·v ⊆ v */
  if (v.dim() != k || w.sum(v) != u || w.intersect(v).dim() != 0)
    throw Error("invariant_complement: internal direct-sum failure");
  Matrix<K> tv = t * v.embedding();
  for (std::size_t j = 0; j < v.dim(); ++j)
    if (!v.contains(tv.col(j))) throw Error("invariant_complement: internal invariance failure");
  return v;
}

}  // namespace hlya
