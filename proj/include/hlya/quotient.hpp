#pragma once

#include "hlya/subobjects.hpp"

namespace hlya {

/* Quotient by a twist-invariant ideal, presented on a concrete transversal:
   the columns of `transversal` are coset representatives forming a basis of
   the quotient, and `projection` sends an ambient vector to its coordinates
   in that basis (projection * transversal = identity, kernel = ideal). */
template <class K>
struct QuotientPresentation {
  Algebra<K> algebra;
  Subspace<K> ideal;
  Matrix<K> transversal;  /* n × q */
  Matrix<K> projection;   /* q × n */
};

/* `section`: a complement of the ideal whose basis becomes the transversal.
   The canonical overload picks the deterministic complement. */
template <class K>
QuotientPresentation<K> quotient_presentation(const Algebra<K>& a,
                                              const Subspace<K>& ideal,
                                              const Subspace<K>& section) {
  if (!is_hom_ideal(a, ideal)) throw NotAnIdeal();
  const std::size_t n = a.dim(), q = section.dim();
  auto f = a.field();
  if (ideal.dim() + q != n || ideal.intersect(section).dim() != 0)
    throw DimensionMismatch("section is not a complement of the ideal");

  Matrix<K> T = section.embedding();             /* n × q */
  Matrix<K> S = hstack(ideal.embedding(), T);    /* n × n, invertible */
  Matrix<K> Sinv = inverse(S);
  Matrix<K> P(q, n, f);
  for (std::size_t i = 0; i < q; ++i) P.set_row(i, Sinv.row(ideal.dim() + i));

  AlgebraBuilder<K> bld(q, f);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      bld.set_binary(i, j, mat_vec(P, a.eval_binary(T.col(i), T.col(j))));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      for (std::size_t k = 0; k < q; ++k)
        bld.set_ternary(i, j, k,
                        mat_vec(P, a.eval_ternary(T.col(i), T.col(j), T.col(k))));
  Matrix<K> qtw = P * (a.twist() * T);
  if (!is_invertible(qtw)) throw TwistNotInvertible("twist is singular on the quotient");
  bld.set_twist(qtw);
  return {bld.build(), ideal, std::move(T), std::move(P)};
}

template <class K>
QuotientPresentation<K> quotient_presentation(const Algebra<K>& a,
                                              const Subspace<K>& ideal) {
  return quotient_presentation(a, ideal,
                               complement(ideal, Subspace<K>::full(a.dim(), a.field())));
}

template <class K>
Algebra<K> quotient(const Algebra<K>& a, const Subspace<K>& ideal) {
  return quotient_presentation(a, ideal).algebra;
}

}  // namespace hlya
