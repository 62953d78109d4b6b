#pragma once

#include "hlya/isoclinism.hpp"

namespace hlya {

/* A = B1 ⊕ B2 with B1 stem (its center inside its derived subalgebra) and B2
   abelian. The witness maps direct_sum(B1, B2) onto A and is verified before
   the result is returned. */
template <class K>
struct Decomposition {
  SubalgebraPresentation<K> stem_part;     /* B1 on the subspace W */
  SubalgebraPresentation<K> abelian_part;  /* B2 on the subspace V */
  Matrix<K> witness;                       /* direct_sum(B1,B2) -> A */
  bool stem_verified = false;
};

template <class K>
Decomposition<K> decompose_stem_abelian(const Algebra<K>& a) {
  const auto f = a.field();
  const std::size_t n = a.dim();
  Subspace<K> zc = center(a);
  Subspace<K> dv = derived(a);
  Subspace<K> kmeet = zc.intersect(dv);

  /* abelian direction: a twist-invariant complement of Z ∩ D inside Z */
  auto v_opt = invariant_complement(kmeet, zc, a.twist());
  if (!v_opt)
    throw NoInvariantComplement(
        "no twist-invariant complement of center ∩ derived inside the center");
  Subspace<K> v = *v_opt;

  /* stem direction: lift a twist-invariant complement of the image of V
     taken inside A/D, then adjoin D */
  if (!is_hom_ideal(a, dv)) throw NotAnIdeal("derived subalgebra is not a twist-invariant ideal");
  QuotientPresentation<K> qd = quotient_presentation(a, dv);
  std::vector<Vec<K>> v_image;
  for (std::size_t i = 0; i < v.dim(); ++i)
    v_image.push_back(mat_vec(qd.projection, v.basis_vector(i)));
  Subspace<K> vbar = Subspace<K>::span_vecs(v_image, qd.algebra.dim(), f);
  auto cbar_opt = invariant_complement(vbar, Subspace<K>::full(qd.algebra.dim(), f),
                                       qd.algebra.twist());
  if (!cbar_opt)
    throw NoInvariantComplement(
        "no twist-invariant complement of the abelian image inside the "
        "derived quotient");
  std::vector<Vec<K>> w_gens;
  for (std::size_t i = 0; i < dv.dim(); ++i) w_gens.push_back(dv.basis_vector(i));
  for (std::size_t i = 0; i < cbar_opt->dim(); ++i)
    w_gens.push_back(mat_vec(qd.transversal, cbar_opt->basis_vector(i)));
  Subspace<K> w = Subspace<K>::span_vecs(w_gens, n, f);

  if (w.dim() + v.dim() != n || w.intersect(v).dim() != 0)
    throw Error("decomposition: internal direct-sum failure");

  SubalgebraPresentation<K> b1 = restrict_to_subalgebra(a, w);
  SubalgebraPresentation<K> b2 = restrict_to_subalgebra(a, v);
  Algebra<K> model = direct_sum(b1.algebra, b2.algebra);
  Matrix<K> phi = hstack(b1.embedding, b2.embedding);
  if (auto defect = isomorphism_defect(phi, model, a))
    throw ReconstructionFailed("decomposition witness failed: " + *defect);

  bool stem_ok = is_stem(b1.algebra) && is_abelian(b2.algebra);
  if (!stem_ok)
    throw StemCheckFailed("restriction is not a stem ⊕ abelian pair");
  return {std::move(b1), std::move(b2), std::move(phi), true};
}

/* --- family-level minimality ------------------------------------------------ */

template <class K>
struct FamilyEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  IsoclinismWitness<K> witness;
};

struct FamilyMemberReport {
  std::size_t dim = 0;
  bool stem = false;
};

struct FamilyReport {
  std::vector<FamilyMemberReport> members;
  std::optional<std::size_t> stem_dim;  /* dimension shared by stem members */
  bool verdict = false;
  std::string note;
};

/* For a family connected by verified witnesses: stem members must share one
   dimension, that dimension must be the family minimum, and every non-stem
   member must exceed it. Absence of stem members in the sample is reported,
   not failed. */
template <class K>
FamilyReport stem_minimality_check(const std::vector<Algebra<K>>& family,
                                   std::vector<FamilyEdge<K>> edges,
                                   const SearchOptions& search_opts = {},
                                   bool search_missing = false) {
  const std::size_t n = family.size();
  if (n == 0) throw NotAFamily("empty family");
  std::vector<PairData<K>> pd;
  pd.reserve(n);
  for (const auto& a : family) pd.push_back(pair_data(a));

  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n) throw NotAFamily("edge endpoint out of range");
    if (!verify_isoclinism(e.witness, pd[e.from], pd[e.to]).verdict)
      throw NotAFamily("supplied witness between " + std::to_string(e.from) + " and " +
                       std::to_string(e.to) + " does not verify");
  }

  /* connectivity via union-find; optionally close gaps by searching */
  std::vector<std::size_t> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = i;
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) { root[find(x)] = find(y); };
  for (const auto& e : edges) unite(e.from, e.to);
  if (search_missing)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (find(i) == find(j)) continue;
        auto sr = search_isoclinism(pd[i], pd[j], search_opts);
        if (sr.witness) {
          edges.push_back({i, j, *sr.witness});
          unite(i, j);
        }
      }
  for (std::size_t i = 1; i < n; ++i)
    if (find(i) != find(0))
      throw NotAFamily("family is not connected by verified witnesses");

  FamilyReport rep;
  std::optional<std::size_t> stem_dim;
  std::size_t min_dim = family[0].dim();
  bool stem_dims_agree = true;
  for (std::size_t i = 0; i < n; ++i) {
    bool st = is_stem(family[i]);
    rep.members.push_back({family[i].dim(), st});
    min_dim = family[i].dim() < min_dim ? family[i].dim() : min_dim;
    if (st) {
      if (stem_dim && *stem_dim != family[i].dim()) stem_dims_agree = false;
      if (!stem_dim) stem_dim = family[i].dim();
    }
  }
  rep.stem_dim = stem_dim;
  if (!stem_dim) {
    rep.note = "no stem member present in sample";
    rep.verdict = true;
    return rep;
  }
  bool minimal = stem_dims_agree && *stem_dim == min_dim;
  bool nonstem_exceed = true;
  for (const auto& m : rep.members)
    if (!m.stem && m.dim <= *stem_dim) nonstem_exceed = false;
  rep.verdict = minimal && nonstem_exceed;
  if (!rep.verdict)
    throw StemCheckFailed(
        "family violates stem minimality: stem dimension " +
        std::to_string(*stem_dim) + ", family minimum " + std::to_string(min_dim));
  return rep;
}

}  // namespace hlya
