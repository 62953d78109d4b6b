#pragma once

#include "hlya/algebra.hpp"

namespace hlya {

/* Center: vectors whose binary product with everything and whose ternary
   products in any slot vanish. Skewness reduces "any slot" to the outer two,
   so the center is the kernel of the stacked matrices of
   x -> [x,e_j], x -> {x,e_j,e_k}, x -> {e_j,e_k,x} over all j,k. */
template <class K>
Subspace<K> center(const Algebra<K>& a) {
  const std::size_t n = a.dim();
  Matrix<K> stacked(n * n + 2 * n * n * n, n, a.field());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < n; ++c) {
      const Vec<K>& v = a.binary(c, j);
      for (std::size_t i = 0; i < n; ++i) stacked(j * n + i, c) = v[i];
    }
  const std::size_t base1 = n * n;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) {
        const Vec<K>& v = a.ternary(c, j, k);
        for (std::size_t i = 0; i < n; ++i)
          stacked(base1 + (j * n + k) * n + i, c) = v[i];
      }
  const std::size_t base2 = base1 + n * n * n;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) {
        const Vec<K>& v = a.ternary(j, k, c);
        for (std::size_t i = 0; i < n; ++i)
          stacked(base2 + (j * n + k) * n + i, c) = v[i];
      }
  return kernel_basis(stacked);
}

/* Derived subalgebra: span of all binary and ternary products. */
template <class K>
Subspace<K> derived(const Algebra<K>& a) {
  const std::size_t n = a.dim();
  std::vector<Vec<K>> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(a.binary(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) gens.push_back(a.ternary(i, j, k));
  return Subspace<K>::span_vecs(gens, n, a.field());
}

template <class K>
bool is_stem(const Algebra<K>& a) {
  return derived(a).contains(center(a));
}

template <class K>
bool is_abelian(const Algebra<K>& a) {
  return derived(a).dim() == 0;
}

/* Ideal test: twist-invariant, and closed under products with arbitrary
   elements in every slot. Basis pairs suffice by multilinearity. */
template <class K>
bool is_hom_ideal(const Algebra<K>& a, const Subspace<K>& s) {
  if (s.ambient() != a.dim()) throw DimensionMismatch("ideal ambient mismatch");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec<K> v = s.basis_vector(i);
    if (!s.contains(a.apply_twist(v))) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!s.contains(a.eval_binary(v, a.unit(j)))) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (!s.contains(a.eval_ternary(v, a.unit(j), a.unit(k)))) return false;
        if (!s.contains(a.eval_ternary(a.unit(j), a.unit(k), v))) return false;
      }
    }
  }
  return true;
}

/* Subalgebra test: twist-invariant and closed under both products. */
template <class K>
bool is_subalgebra(const Algebra<K>& a, const Subspace<K>& s) {
  if (s.ambient() != a.dim()) throw DimensionMismatch("subalgebra ambient mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec<K> u = s.basis_vector(i);
    if (!s.contains(a.apply_twist(u))) return false;
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (!s.contains(a.eval_binary(u, s.basis_vector(j)))) return false;
      for (std::size_t k = 0; k < s.dim(); ++k)
        if (!s.contains(a.eval_ternary(u, s.basis_vector(j), s.basis_vector(k))))
          return false;
    }
  }
  return true;
}

/* A subalgebra presented on its own basis, with the embedding back into the
   parent. Structure constants are the parent products re-expressed in the
   subspace coordinates. */
template <class K>
struct SubalgebraPresentation {
  Algebra<K> algebra;
  Matrix<K> embedding;  /* parent_dim × sub_dim, columns are the basis */
};

template <class K>
SubalgebraPresentation<K> restrict_to_subalgebra(const Algebra<K>& a,
                                                 const Subspace<K>& s) {
  if (!is_subalgebra(a, s)) throw NotAnIdeal("subspace is not a twist-invariant subalgebra");
  const std::size_t d = s.dim();
  auto f = a.field();
  AlgebraBuilder<K> bld(d, f);
  auto coord = [&](const Vec<K>& v) {
    auto c = s.coords(v);
    if (!c) throw Error("restriction: product escaped the subalgebra");
    return *c;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      bld.set_binary(i, j, coord(a.eval_binary(s.basis_vector(i), s.basis_vector(j))));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        bld.set_ternary(i, j, k,
                        coord(a.eval_ternary(s.basis_vector(i), s.basis_vector(j),
                                             s.basis_vector(k))));
  Matrix<K> tw(d, d, f);
  for (std::size_t i = 0; i < d; ++i)
    tw.set_col(i, coord(a.apply_twist(s.basis_vector(i))));
  bld.set_twist(std::move(tw));
  return {bld.build(), s.embedding()};
}

}  // namespace hlya
