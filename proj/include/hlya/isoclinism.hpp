#pragma once

#include <array>

#include "hlya/extensions.hpp"
#include "hlya/morphisms.hpp"
#include "hlya/quotient.hpp"
#include "hlya/subobjects.hpp"

namespace hlya {

/* Everything a witness check needs about one algebra: the central quotient on
   the canonical transversal, the derived subalgebra with its embedding, the
   twist restricted to both, and the bracket tables of transversal
   representatives expressed in derived coordinates. */
template <class K>
struct PairData {
  Algebra<K> algebra;
  QuotientPresentation<K> by_center;
  Subspace<K> derived_space;
  Matrix<K> derived_embedding;  /* n × d */
  Matrix<K> alpha_on_derived;   /* d × d */
  std::vector<std::vector<Vec<K>>> tau2;               /* q×q -> K^d */
  std::vector<std::vector<std::vector<Vec<K>>>> tau3;  /* q×q×q -> K^d */

  std::size_t q() const { return by_center.algebra.dim(); }
  std::size_t d() const { return derived_space.dim(); }

  Vec<K> delta2(const Vec<K>& u, const Vec<K>& v) const {
    Vec<K> out = zero_vec<K>(d(), algebra.field());
    for (std::size_t i = 0; i < q(); ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < q(); ++j) {
        if (v[j].is_zero()) continue;
        out = vec_add(out, vec_scale(u[i] * v[j], tau2[i][j]));
      }
    }
    return out;
  }
  Vec<K> delta3(const Vec<K>& u, const Vec<K>& v, const Vec<K>& w) const {
    Vec<K> out = zero_vec<K>(d(), algebra.field());
    for (std::size_t i = 0; i < q(); ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < q(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t k = 0; k < q(); ++k) {
          if (w[k].is_zero()) continue;
          out = vec_add(out, vec_scale(u[i] * v[j] * w[k], tau3[i][j][k]));
        }
      }
    }
    return out;
  }
};

template <class K>
PairData<K> pair_data(const Algebra<K>& a) {
  Subspace<K> zc = center(a);
  QuotientPresentation<K> qp = quotient_presentation(a, zc);
  Subspace<K> dv = derived(a);
  {
    Matrix<K> im = a.twist() * dv.embedding();
    for (std::size_t j = 0; j < dv.dim(); ++j)
      if (!dv.contains(im.col(j)))
        throw MathError("twist does not preserve the derived subalgebra");
  }
  Matrix<K> alpha_d = dv.dim() == 0
                          ? Matrix<K>(0, 0, a.field())
                          : detail::restrict_operator(a.twist(), dv);
  const std::size_t q = qp.algebra.dim();
  auto dcoords = [&](const Vec<K>& v) {
    auto c = dv.coords(v);
    if (!c) throw Error("bracket value escaped the derived subalgebra");
    return *c;
  };
  std::vector<std::vector<Vec<K>>> tau2(q, std::vector<Vec<K>>(q));
  std::vector<std::vector<std::vector<Vec<K>>>> tau3(
      q, std::vector<std::vector<Vec<K>>>(q, std::vector<Vec<K>>(q)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      tau2[i][j] =
          dcoords(a.eval_binary(qp.transversal.col(i), qp.transversal.col(j)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t k = 0; k < q; ++k)
        tau3[i][j][k] = dcoords(a.eval_ternary(
            qp.transversal.col(i), qp.transversal.col(j), qp.transversal.col(k)));
  Matrix<K> d_emb = dv.embedding();
  return {a,
          std::move(qp),
          std::move(dv),
          std::move(d_emb),
          std::move(alpha_d),
          std::move(tau2),
          std::move(tau3)};
}

template <class K>
struct IsoclinismWitness {
  Matrix<K> theta;  /* q × q between central quotients */
  Matrix<K> beta;   /* d × d between derived subalgebras, derived coords */
};

struct WitnessCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct WitnessReport {
  std::vector<WitnessCheck> checks;
  bool verdict = false;

  const WitnessCheck& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw Error("unknown check: " + name);
  }
};

/* Verifies the two commuting diagrams binding the central quotients to the
   derived subalgebras, plus invertibility and twist compatibility on both
   levels. Shape mismatches are reported as failed checks, not thrown: they
   simply mean this witness cannot connect the two algebras. */
template <class K>
WitnessReport verify_isoclinism(const IsoclinismWitness<K>& w, const PairData<K>& a,
                                const PairData<K>& b) {
  WitnessReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const bool shape_ok = a.q() == b.q() && a.d() == b.d() &&
                        w.theta.rows() == b.q() && w.theta.cols() == a.q() &&
                        w.beta.rows() == b.d() && w.beta.cols() == a.d();
  add("shape", shape_ok,
      shape_ok ? "" : "quotient or derived dimensions are incompatible");
  if (!shape_ok) {
    rep.verdict = false;
    return rep;
  }

  add("theta-invertible", is_invertible(w.theta));
  add("beta-invertible", is_invertible(w.beta));
  add("theta-twist", w.theta * a.by_center.algebra.twist() ==
                         b.by_center.algebra.twist() * w.theta);
  add("beta-twist", w.beta * a.alpha_on_derived == b.alpha_on_derived * w.beta);

  bool bin = true;
  std::string bin_detail;
  for (std::size_t i = 0; i < a.q() && bin; ++i)
    for (std::size_t j = 0; j < a.q() && bin; ++j) {
      Vec<K> lhs = mat_vec(w.beta, a.tau2[i][j]);
      Vec<K> rhs = b.delta2(w.theta.col(i), w.theta.col(j));
      if (lhs != rhs) {
        bin = false;
        bin_detail = "fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  add("binary-diagram", bin, bin_detail);

  bool ter = true;
  std::string ter_detail;
  for (std::size_t i = 0; i < a.q() && ter; ++i)
    for (std::size_t j = 0; j < a.q() && ter; ++j)
      for (std::size_t k = 0; k < a.q() && ter; ++k) {
        Vec<K> lhs = mat_vec(w.beta, a.tau3[i][j][k]);
        Vec<K> rhs = b.delta3(w.theta.col(i), w.theta.col(j), w.theta.col(k));
        if (lhs != rhs) {
          ter = false;
          ter_detail = "fails at (" + std::to_string(i) + "," + std::to_string(j) +
                       "," + std::to_string(k) + ")";
          break;
        }
      }
  add("ternary-diagram", ter, ter_detail);

  rep.verdict = true;
  for (const auto& c : rep.checks) rep.verdict = rep.verdict && c.pass;
  return rep;
}

template <class K>
IsoclinismWitness<K> identity_witness(const PairData<K>& a) {
  return {Matrix<K>::identity(a.q(), a.algebra.field()),
          Matrix<K>::identity(a.d(), a.algebra.field())};
}

template <class K>
IsoclinismWitness<K> invert_witness(const IsoclinismWitness<K>& w) {
  return {inverse(w.theta), inverse(w.beta)};
}

/* second applied after first */
template <class K>
IsoclinismWitness<K> compose_witness(const IsoclinismWitness<K>& second,
                                     const IsoclinismWitness<K>& first) {
  return {second.theta * first.theta, second.beta * first.beta};
}

/* Coset compatibility of a verified witness: on the derived subalgebra,
   passing to the target coset via beta agrees with mapping the source coset
   through theta. A matrix identity on derived basis vectors. */
template <class K>
bool witness_coset_compat(const IsoclinismWitness<K>& w, const PairData<K>& a,
                          const PairData<K>& b) {
  Matrix<K> lhs = (b.by_center.projection * b.derived_space.embedding()) * w.beta;
  Matrix<K> rhs = w.theta * (a.by_center.projection * a.derived_space.embedding());
  return lhs == rhs;
}

/* --- witness construction from structure-preserving maps ------------------ */

/* Induced witness of a homomorphism f: A -> B with ker(f) ∩ A² = 0 and
   im(f) + Z(B) = B: theta is the induced map on central quotients, beta the
   restriction to derived subalgebras. Verified before being returned. */
template <class K>
IsoclinismWitness<K> induced_witness(const Matrix<K>& f, const PairData<K>& a,
                                     const PairData<K>& b) {
  if (auto defect = homomorphism_defect(f, a.algebra, b.algebra))
    throw MathError("map is not a homomorphism: " + *defect);
  Subspace<K> ker = kernel_basis(f);
  Subspace<K> meet = ker.intersect(a.derived_space);
  if (meet.dim() != 0)
    throw MathError("kernel meets the derived subalgebra, intersection basis:\n" +
                    meet.basis().str());
  Subspace<K> image = Subspace<K>::span_rows(f.transpose());
  if (image.sum(center(b.algebra)).dim() != b.algebra.dim())
    throw MathError("image plus target center does not fill the target");

  Matrix<K> theta = b.by_center.projection * (f * a.by_center.transversal);
  auto beta_sol = solve(b.derived_space.embedding(), f * a.derived_space.embedding());
  if (!beta_sol) throw MathError("map does not send derived values into derived values");
  IsoclinismWitness<K> w{std::move(theta), std::move(*beta_sol)};
  WitnessReport rep = verify_isoclinism(w, a, b);
  if (!rep.verdict) {
    std::string which;
    for (const auto& c : rep.checks)
      if (!c.pass) which += (which.empty() ? "" : ", ") + c.name;
    throw WitnessVerificationFailed("induced witness failed checks: " + which);
  }
  return w;
}

/* Surjective homomorphisms with kernel meeting the derived subalgebra
   trivially induce witnesses; the image condition is automatic. */
template <class K>
IsoclinismWitness<K> surjection_isoclinism(const Matrix<K>& f, const PairData<K>& a,
                                           const PairData<K>& b) {
  if (rank(f) != b.algebra.dim()) throw MathError("map is not surjective");
  return induced_witness(f, a, b);
}

/* Witness between A/(I ∩ A²) and A/I along the natural surjection between
   the quotients; when I ∩ A² = 0 the source is A itself. */
template <class K>
struct QuotientWitnessResult {
  Algebra<K> source;  /* A or A/(I ∩ A²) */
  Algebra<K> target;  /* A/I */
  Subspace<K> meet;   /* I ∩ A² */
  bool source_is_original = false;
  IsoclinismWitness<K> witness;
};

template <class K>
QuotientWitnessResult<K> quotient_isoclinism_witness(const Algebra<K>& a,
                                                     const Subspace<K>& ideal) {
  if (!is_hom_ideal(a, ideal)) throw NotAnIdeal();
  Subspace<K> meet = ideal.intersect(derived(a));
  QuotientPresentation<K> qi = quotient_presentation(a, ideal);
  PairData<K> pd_target = pair_data(qi.algebra);
  if (meet.dim() == 0) {
    PairData<K> pd_a = pair_data(a);
    IsoclinismWitness<K> w = surjection_isoclinism(qi.projection, pd_a, pd_target);
    return {a, qi.algebra, std::move(meet), true, std::move(w)};
  }
  QuotientPresentation<K> qj = quotient_presentation(a, meet);
  /* induced surjection A/J -> A/I on transversal representatives */
  Matrix<K> psi = qi.projection * qj.transversal;
  PairData<K> pd_source = pair_data(qj.algebra);
  IsoclinismWitness<K> w = surjection_isoclinism(psi, pd_source, pd_target);
  return {qj.algebra, qi.algebra, std::move(meet), false, std::move(w)};
}

/* --- search ---------------------------------------------------------------- */

template <class K>
struct IsoclinismSearchResult {
  std::optional<IsoclinismWitness<K>> witness;
  std::size_t examined = 0;
  bool finished = false;  /* candidate family exhausted */
  bool complete = false;  /* finished over the whole field: a decision */
};

/* Enumerates theta in lexicographic order; beta is forced by the diagrams on
   the spanning bracket values of the derived subalgebra, so each candidate
   theta determines at most one witness. Over a prime field exhausting the
   enumeration decides the question; over the rationals it only covers the
   integer window and exhaustion is inconclusive. */
template <class K>
IsoclinismSearchResult<K> search_isoclinism(const PairData<K>& a, const PairData<K>& b,
                                            const SearchOptions& opts = {}) {
  IsoclinismSearchResult<K> res;
  if (a.q() != b.q() || a.d() != b.d()) {
    /* dimension invariants differ: no witness exists over any extension */
    res.finished = true;
    res.complete = true;
    return res;
  }
  const std::size_t q = a.q(), d = a.d();
  const auto f = a.algebra.field();

  /* spanning system: columns are the source bracket values in derived
     coordinates; full row rank because every derived value is a combination
     of transversal brackets */
  std::vector<Vec<K>> span_cols;
  std::vector<std::array<std::size_t, 3>> span_idx;  /* (i,j,k) with k==q for pairs */
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j) {
      span_cols.push_back(a.tau2[i][j]);
      span_idx.push_back({i, j, q});
    }
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      for (std::size_t k = 0; k < q; ++k) {
        span_cols.push_back(a.tau3[i][j][k]);
        span_idx.push_back({i, j, k});
      }
  Matrix<K> M(d, span_cols.size(), f);
  for (std::size_t c = 0; c < span_cols.size(); ++c) M.set_col(c, span_cols[c]);
  if (rank(M) != d) throw Error("derived subalgebra not spanned by bracket values");
  Matrix<K> Mt = M.transpose();

  auto try_theta = [&](const Matrix<K>& theta) -> std::optional<IsoclinismWitness<K>> {
    if (!(theta * a.by_center.algebra.twist() ==
          b.by_center.algebra.twist() * theta))
      return std::nullopt;
    if (!is_invertible(theta)) return std::nullopt;
    /* forced beta: beta * M = N where N holds the target-side values */
    Matrix<K> N(d, span_cols.size(), f);
    for (std::size_t c = 0; c < span_cols.size(); ++c) {
      const auto& ix = span_idx[c];
      Vec<K> val = ix[2] == q
                       ? b.delta2(theta.col(ix[0]), theta.col(ix[1]))
                       : b.delta3(theta.col(ix[0]), theta.col(ix[1]), theta.col(ix[2]));
      N.set_col(c, val);
    }
    auto betaT = solve(Mt, N.transpose());
    if (!betaT) return std::nullopt;
    IsoclinismWitness<K> w{theta, betaT->transpose()};
    if (!verify_isoclinism(w, a, b).verdict) return std::nullopt;
    return w;
  };

  DigitScheme<K> ds = entry_digits(f, opts.bound);
  std::optional<IsoclinismWitness<K>> found;
  auto search = search_matrices<K>(q, q, ds, opts, [&](const Matrix<K>& theta) {
    return try_theta(theta).has_value();
  });
  if (search.found) found = try_theta(*search.found);
  res.witness = std::move(found);
  res.examined = search.examined;
  res.finished = search.finished || res.witness.has_value();
  res.complete = res.witness.has_value() || (search.finished && ds.complete);
  return res;
}

}  // namespace hlya
