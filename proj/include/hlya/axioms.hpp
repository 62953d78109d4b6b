#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlya/algebra.hpp"
#include "hlya/linalg.hpp"
#include "hlya/parallel.hpp"

namespace hlya {

struct CheckOptions {
  std::size_t max_failures = 16;  /* per check, first failures in basis order */
  unsigned threads = 0;           /* 0: HLYA_THREADS or hardware */
};

struct AxiomFailure {
  std::vector<std::size_t> at;  /* basis indices of the failing tuple */
  std::string residual;         /* rendered nonzero defect vector */
};

struct AxiomCheckResult {
  std::string name;
  bool pass = true;
  std::vector<AxiomFailure> failures;
};

struct AxiomReport {
  std::vector<AxiomCheckResult> checks;
  bool verdict = false;  /* every check passed */

  const AxiomCheckResult& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw Error("unknown check: " + name);
  }
};

namespace detail {

/* Scans `count` tuples; `residual` maps a flat index to the defect vector.
   Workers own disjoint index blocks and stop collecting at the failure cap,
   so the merged list is the first `max_failures` failures in index order no
   matter how many threads run. */
template <class K, class Fn>
AxiomCheckResult scan_check(const std::string& name, std::size_t count,
                            const CheckOptions& opts, Fn residual) {
  struct Acc {
    std::vector<std::pair<std::size_t, AxiomFailure>> hits;
  };
  const std::size_t cap = opts.max_failures == 0 ? 1 : opts.max_failures;
  auto accs = parallel_blocks<Acc>(count, opts.threads,
                                   [&](std::size_t lo, std::size_t hi, Acc& acc) {
                                     for (std::size_t idx = lo; idx < hi; ++idx) {
                                       auto fail = residual(idx);
                                       if (!fail) continue;
                                       acc.hits.emplace_back(idx, std::move(*fail));
                                       if (acc.hits.size() >= cap) return;
                                     }
                                   });
  AxiomCheckResult res{name, true, {}};
  for (auto& a : accs)
    for (auto& h : a.hits) {
      res.pass = false;
      if (res.failures.size() < cap) res.failures.push_back(std::move(h.second));
    }
  return res;
}

template <class K>
std::optional<AxiomFailure> defect(const Vec<K>& v, std::vector<std::size_t> at) {
  if (vec_is_zero(v)) return std::nullopt;
  return AxiomFailure{std::move(at), vec_str(v)};
}

/* Single definition of every check, shared by the reporting and the
   verdict-only paths. `visit(name, tuple_count, residual)` returns false to
   stop early. Each residual is sound and complete on basis tuples by
   multilinearity of both brackets. */
template <class K, class Visit>
void visit_axiom_checks(const Algebra<K>& a, Visit&& visit) {
  const std::size_t n = a.dim();

  /* precomputed twist images of basis vectors */
  std::vector<Vec<K>> al(n), al2(n);
  Matrix<K> tw2 = a.twist() * a.twist();
  for (std::size_t i = 0; i < n; ++i) {
    al[i] = a.twist().col(i);
    al2[i] = tw2.col(i);
  }
  auto b = [&](const Vec<K>& x, const Vec<K>& y) { return a.eval_binary(x, y); };
  auto t = [&](const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) {
    return a.eval_ternary(x, y, z);
  };

  if (!visit("binary-skew", n * n, [&](std::size_t idx) {
        std::size_t i = idx / n, j = idx % n;
        return defect(vec_add(a.binary(i, j), a.binary(j, i)), {i, j});
      }))
    return;
  if (!visit("binary-alternating", n, [&](std::size_t i) {
        return defect(a.binary(i, i), {i});
      }))
    return;
  if (!visit("ternary-skew", n * n * n, [&](std::size_t idx) {
        std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        return defect(vec_add(a.ternary(i, j, k), a.ternary(j, i, k)), {i, j, k});
      }))
    return;

  /* cyclic sum of [[x,y],tw(z)] plus cyclic sum of {x,y,z} vanishes */
  if (!visit("cyclic-compatibility", n * n * n, [&](std::size_t idx) {
        std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        Vec<K> s = b(a.binary(i, j), al[k]);
        s = vec_add(s, b(a.binary(j, k), al[i]));
        s = vec_add(s, b(a.binary(k, i), al[j]));
        s = vec_add(s, a.ternary(i, j, k));
        s = vec_add(s, a.ternary(j, k, i));
        s = vec_add(s, a.ternary(k, i, j));
        return defect(s, {i, j, k});
      }))
    return;

  /* {[x,y], tw(z), tw(w)} = 0, no cyclic sum */
  if (!visit("composite-kernel", n * n * n * n, [&](std::size_t idx) {
        std::size_t i = idx / (n * n * n), j = (idx / (n * n)) % n, k = (idx / n) % n,
                    l = idx % n;
        return defect(t(a.binary(i, j), al[k], al[l]), {i, j, k, l});
      }))
    return;

  /* cyclic_{x,y,z} {tw(x),tw(y),[z,w]} = [{x,y,z},tw2(w)] + [tw2(z),{x,y,w}] */
  if (!visit("binary-derivation", n * n * n * n, [&](std::size_t idx) {
        std::size_t i = idx / (n * n * n), j = (idx / (n * n)) % n, k = (idx / n) % n,
                    l = idx % n;
        Vec<K> lhs = t(al[i], al[j], a.binary(k, l));
        lhs = vec_add(lhs, t(al[j], al[k], a.binary(i, l)));
        lhs = vec_add(lhs, t(al[k], al[i], a.binary(j, l)));
        Vec<K> rhs = b(a.ternary(i, j, k), al2[l]);
        rhs = vec_add(rhs, b(al2[k], a.ternary(i, j, l)));
        return defect(vec_sub(lhs, rhs), {i, j, k, l});
      }))
    return;

  /* {tw2(x),tw2(y),{z,w,v}} = {{x,y,z},tw2(w),tw2(v)}
                             + {tw2(z),{x,y,w},tw2(v)}
                             + {tw2(z),tw2(w),{x,y,v}} */
  if (!visit("ternary-derivation", n * n * n * n * n, [&](std::size_t idx) {
        std::size_t i = idx / (n * n * n * n), j = (idx / (n * n * n)) % n,
                    k = (idx / (n * n)) % n, l = (idx / n) % n, m = idx % n;
        Vec<K> lhs = t(al2[i], al2[j], a.ternary(k, l, m));
        Vec<K> rhs = t(a.ternary(i, j, k), al2[l], al2[m]);
        rhs = vec_add(rhs, t(al2[k], a.ternary(i, j, l), al2[m]));
        rhs = vec_add(rhs, t(al2[k], al2[l], a.ternary(i, j, m)));
        return defect(vec_sub(lhs, rhs), {i, j, k, l, m});
      }))
    return;

  if (!visit("twist-binary-product", n * n, [&](std::size_t idx) {
        std::size_t i = idx / n, j = idx % n;
        return defect(vec_sub(a.apply_twist(a.binary(i, j)), b(al[i], al[j])), {i, j});
      }))
    return;
  if (!visit("twist-ternary-product", n * n * n, [&](std::size_t idx) {
        std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        return defect(vec_sub(a.apply_twist(a.ternary(i, j, k)), t(al[i], al[j], al[k])),
                      {i, j, k});
      }))
    return;
  visit("twist-invertible", std::size_t{1}, [&](std::size_t) -> std::optional<AxiomFailure> {
    if (is_invertible(a.twist())) return std::nullopt;
    return AxiomFailure{{}, "twist matrix is singular"};
  });
}

}  // namespace detail

/* Verifies the defining identities on all basis tuples, the compatibility of
   the twist with both products, and the invertibility of the twist. */
template <class K>
AxiomReport check_axioms(const Algebra<K>& a, const CheckOptions& opts = {}) {
  AxiomReport rep;
  detail::visit_axiom_checks(a, [&](const std::string& name, std::size_t count,
                                    auto&& residual) {
    rep.checks.push_back(detail::scan_check<K>(name, count, opts, residual));
    return true;
  });
  rep.verdict = true;
  for (const auto& c : rep.checks) rep.verdict = rep.verdict && c.pass;
  return rep;
}

/* Verdict only, sequential, stops at the first failing tuple. Used where many
   candidates are filtered and the transcript does not matter. */
template <class K>
bool axioms_pass(const Algebra<K>& a) {
  bool ok = true;
  detail::visit_axiom_checks(a, [&](const std::string&, std::size_t count,
                                    auto&& residual) {
    for (std::size_t idx = 0; idx < count; ++idx)
      if (residual(idx)) {
        ok = false;
        return false;
      }
    return true;
  });
  return ok;
}

}  // namespace hlya
