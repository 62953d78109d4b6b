/* End-to-end acceptance gates for the library: fixture structure values,
   factor-set roundtrips, extension validity, padding witnesses, the witness
   equivalence laws, search agreement, decompositions, and the exact linear
   algebra property suite. Each gate prints one PASS/FAIL line; artifacts that
   support a verdict are archived under acceptance_archive/. */

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "hlya/corpus.hpp"
#include "hlya/decompose.hpp"
#include "hlya/document.hpp"
#include "hlya/fixtures.hpp"
#include "hlya/isoclinism.hpp"

using namespace hlya;
namespace fs = std::filesystem;

namespace {

const char* kArchiveDir = "acceptance_archive";

struct Gate {
  bool pass = false;
  std::string detail;
};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

Algebra<Rational> qfix(const std::string& name) {
  AnyAlgebraDocument any = fixture(name);
  return std::get<AlgebraDocument<Rational>>(any).algebra;
}

void archive(const std::string& name, const json& j) {
  fs::create_directories(kArchiveDir);
  write_file((fs::path(kArchiveDir) / name).string(), j.dump(2) + "\n");
}

json report_json(const AxiomReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json fails = json::array();
    for (const auto& f : c.failures)
      fails.push_back(json{{"at", f.at}, {"residual", f.residual}});
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"failures", fails}});
  }
  return json{{"verdict", rep.verdict}, {"checks", checks}};
}

template <class K>
Subspace<K> span_units(std::size_t ambient, std::vector<std::size_t> idx,
                       typename K::Field f) {
  std::vector<Vec<K>> gens;
  for (std::size_t i : idx) gens.push_back(unit_vec<K>(ambient, i, f));
  return Subspace<K>::span_vecs(gens, ambient, f);
}

/* shared corpus for gates 2..7: one exhaustive sweep and two seeded samples */
struct Corpus {
  std::vector<Algebra<Fp>> dim2_f2;
  std::vector<Algebra<Fp>> dim3_f2;
  std::vector<Algebra<Fp>> dim3_f3;
  std::vector<Algebra<Rational>> rationals;

  std::size_t size() const {
    return dim2_f2.size() + dim3_f2.size() + dim3_f3.size() + rationals.size();
  }
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    out.dim2_f2 = exhaustive_dim2(2);
    out.dim3_f2 = sample_corpus(2, 3, 50, 7).algebras;
    out.dim3_f3 = sample_corpus(3, 3, 50, 11).algebras;
    out.rationals.push_back(qfix("heisenberg"));
    out.rationals.push_back(qfix("abelian-2"));
    return out;
  }();
  return c;
}

/* ---- gate 1: structure values of the two bundled counterexamples ---------- */

Gate gate1() {
  Timer t;
  Algebra<Rational> a = qfix("example-a");
  Algebra<Rational> b = qfix("example-b");
  auto f = a.field();

  bool ok = true;
  std::string why;
  auto expect = [&](bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  };

  expect(center(a).dim() == 0, "first fixture should be centerless");
  expect(derived(a) == span_units<Rational>(3, {0, 1}, f),
         "first fixture derived span mismatch");
  expect(center(b) == span_units<Rational>(4, {2}, f),
         "second fixture center span mismatch");
  expect(derived(b) == span_units<Rational>(4, {0, 1}, f),
         "second fixture derived span mismatch");

  AxiomReport ra = check_axioms(a);
  AxiomReport rb = check_axioms(b);
  archive("example-a-report.json", report_json(ra));
  archive("example-b-report.json", report_json(rb));
  expect(!ra.verdict && !rb.verdict, "both fixtures should fail the full check");

  const auto& mult_a = ra.check("twist-binary-product");
  expect(!mult_a.pass && !mult_a.failures.empty() &&
             mult_a.failures[0].at == std::vector<std::size_t>{0, 1},
         "first fixture should pinpoint the twist failure at (0,1)");
  const auto& mult_b = rb.check("twist-binary-product");
  expect(!mult_b.pass && !mult_b.failures.empty(),
         "second fixture should pinpoint a twist failure");

  long long ms = t.ms();
  expect(ms < 1000, "runtime exceeded 1s");
  if (!ok) return {false, why};
  return {true, "both fixtures reproduce their structure values, reports archived, " +
                    std::to_string(ms) + " ms"};
}

/* ---- gate 2: extract -> extend -> reconstruct closes on the corpus -------- */

template <class K>
bool roundtrip_one(const Algebra<K>& a, std::string& why) {
  auto [fsdata, sect] = extract_factor_set(a);
  if (!validate_factor_set(fsdata, sect.center_twist, sect.presentation.algebra)
           .verdict) {
    why = "table validation failed";
    return false;
  }
  reconstruct_iso(a, fsdata, sect); /* throws when the rebuilt map fails */
  return true;
}

Gate gate2() {
  Timer t;
  std::size_t closed = 0, skipped = 0;
  std::string why;
  auto drive = [&](const auto& list) {
    for (const auto& a : list) {
      try {
        if (!roundtrip_one(a, why)) return false;
        ++closed;
      } catch (const NoInvariantComplement&) {
        ++skipped;
      }
    }
    return true;
  };
  if (!drive(corpus().dim2_f2) || !drive(corpus().dim3_f2) ||
      !drive(corpus().dim3_f3) || !drive(corpus().rationals))
    return {false, why};
  long long ms = t.ms();
  if (ms >= 60000) return {false, "runtime exceeded 60s"};
  return {true, std::to_string(closed) + " roundtrips closed, " +
                    std::to_string(skipped) + " lacked an invariant complement, " +
                    std::to_string(ms) + " ms"};
}

/* ---- gate 3: every rebuilt extension is a valid algebra ------------------- */

template <class K>
bool extension_valid_one(const Algebra<K>& a, std::size_t index, std::size_t& mismatches,
                         std::string& why) {
  auto [fsdata, sect] = extract_factor_set(a);
  Algebra<K> omega =
      central_extension(sect.center_twist, sect.presentation.algebra, fsdata);
  AxiomReport rep = check_axioms(omega);
  if (!rep.verdict) {
    for (const auto& c : rep.checks)
      if (!c.pass) why = "rebuilt extension fails " + c.name;
    archive("extension-axioms-fail-" + std::to_string(index) + ".json",
            algebra_document_json(omega));
    return false;
  }
  auto zrep = extension_center_report(omega, fsdata.z);
  bool quotient_centerless = center(sect.presentation.algebra).dim() == 0;
  if (quotient_centerless && !zrep.matches_center_summand) {
    why = "centerless quotient but the extension center exceeds the summand";
    return false;
  }
  if (!zrep.matches_center_summand) {
    /* legitimate enlargement; archived for inspection, not a failure */
    archive("extension-center-mismatch-" + std::to_string(index) + ".json",
            json{{"context", "extension center is larger than the adjoined summand"},
                 {"summand_dim", fsdata.z},
                 {"actual_dim", zrep.actual.dim()},
                 {"extension", algebra_document_json(omega)}});
    ++mismatches;
  }
  return true;
}

Gate gate3() {
  Timer t;
  std::size_t built = 0, skipped = 0, mismatches = 0;
  std::string why;
  std::size_t index = 0;
  auto drive = [&](const auto& list) {
    for (const auto& a : list) {
      ++index;
      try {
        if (!extension_valid_one(a, index, mismatches, why)) return false;
        ++built;
      } catch (const NoInvariantComplement&) {
        ++skipped;
      }
    }
    return true;
  };
  if (!drive(corpus().dim2_f2) || !drive(corpus().dim3_f2) ||
      !drive(corpus().dim3_f3) || !drive(corpus().rationals))
    return {false, why};
  return {true, std::to_string(built) + " extensions fully valid, " +
                    std::to_string(mismatches) + " benign center enlargements archived, " +
                    std::to_string(skipped) + " skipped, " + std::to_string(t.ms()) +
                    " ms"};
}

/* ---- gate 4: padding with abelian summands always yields a witness -------- */

/* the left-summand inclusion of an n-space into an n+k space */
template <class K>
Matrix<K> inclusion_matrix(std::size_t n, std::size_t total, typename K::Field f) {
  Matrix<K> m(total, n, f);
  for (std::size_t i = 0; i < n; ++i) m.set_col(i, unit_vec<K>(total, i, f));
  return m;
}

template <class K>
bool pad_witness_one(const Algebra<K>& a, std::size_t k, std::string& why) {
  auto f = a.field();
  Algebra<K> padded = direct_sum(a, AlgebraBuilder<K>(k, f).build());
  PairData<K> pa = pair_data(a);
  PairData<K> pb = pair_data(padded);
  Matrix<K> incl = inclusion_matrix<K>(a.dim(), a.dim() + k, f);
  IsoclinismWitness<K> w = induced_witness(incl, pa, pb);
  if (!verify_isoclinism(w, pa, pb).verdict) {
    why = "padding witness failed verification";
    return false;
  }
  return true;
}

Gate gate4() {
  Timer t;
  std::size_t checked = 0;
  std::string why;
  auto drive = [&](const auto& list) {
    for (const auto& a : list)
      for (std::size_t k : {1u, 2u}) {
        try {
          if (!pad_witness_one(a, k, why)) return false;
        } catch (const Error& e) {
          why = e.what();
          return false;
        }
        ++checked;
      }
    return true;
  };
  if (!drive(corpus().dim2_f2) || !drive(corpus().dim3_f2) ||
      !drive(corpus().dim3_f3) || !drive(corpus().rationals))
    return {false, why};
  long long ms = t.ms();
  if (ms >= 10000) return {false, "runtime exceeded 10s"};
  return {true, std::to_string(checked) + " padding witnesses verified, " +
                    std::to_string(ms) + " ms"};
}

/* ---- gate 5: witnesses form an equivalence relation ------------------------ */

template <class K>
bool equivalence_laws_one(const Algebra<K>& a, std::size_t& instances, std::string& why) {
  auto f = a.field();
  Algebra<K> b = direct_sum(a, AlgebraBuilder<K>(1, f).build());
  Algebra<K> c = direct_sum(a, AlgebraBuilder<K>(2, f).build());
  PairData<K> pa = pair_data(a);
  PairData<K> pb = pair_data(b);
  PairData<K> pc = pair_data(c);

  IsoclinismWitness<K> wab =
      induced_witness(inclusion_matrix<K>(a.dim(), b.dim(), f), pa, pb);
  IsoclinismWitness<K> wbc =
      induced_witness(inclusion_matrix<K>(b.dim(), c.dim(), f), pb, pc);

  auto need = [&](bool cond, const char* what) {
    if (!cond && why.empty()) why = what;
    if (cond) ++instances;
    return cond;
  };
  bool ok = true;
  ok = need(verify_isoclinism(identity_witness(pa), pa, pa).verdict,
            "identity witness failed") && ok;
  ok = need(verify_isoclinism(wab, pa, pb).verdict, "constructed witness failed") && ok;
  ok = need(verify_isoclinism(invert_witness(wab), pb, pa).verdict,
            "inverted witness failed") && ok;
  ok = need(verify_isoclinism(compose_witness(wbc, wab), pa, pc).verdict,
            "composed witness failed") && ok;
  ok = need(verify_isoclinism(compose_witness(invert_witness(wab), wab), pa, pa).verdict,
            "round-trip composition failed") && ok;
  return ok;
}

Gate gate5() {
  Timer t;
  std::size_t instances = 0;
  std::string why;
  /* a slice of the corpus plus both rational fixtures gives a wide pool */
  for (std::size_t i = 0; i < corpus().dim2_f2.size() && i < 4; ++i)
    if (!equivalence_laws_one(corpus().dim2_f2[i], instances, why)) return {false, why};
  for (std::size_t i = 0; i < corpus().dim3_f2.size() && i < 4; ++i)
    if (!equivalence_laws_one(corpus().dim3_f2[i], instances, why)) return {false, why};
  for (std::size_t i = 0; i < corpus().dim3_f3.size() && i < 4; ++i)
    if (!equivalence_laws_one(corpus().dim3_f3[i], instances, why)) return {false, why};
  for (const auto& a : corpus().rationals)
    if (!equivalence_laws_one(a, instances, why)) return {false, why};

  /* search-produced witnesses obey the same laws */
  for (std::size_t i = 0; i + 1 < corpus().dim2_f2.size() && i < 4; ++i) {
    PairData<Fp> p1 = pair_data(corpus().dim2_f2[i]);
    PairData<Fp> p2 = pair_data(corpus().dim2_f2[i + 1]);
    auto sr = search_isoclinism(p1, p2);
    if (!sr.witness) continue;
    bool ok = verify_isoclinism(*sr.witness, p1, p2).verdict &&
              verify_isoclinism(invert_witness(*sr.witness), p2, p1).verdict &&
              verify_isoclinism(compose_witness(invert_witness(*sr.witness), *sr.witness),
                                p1, p1)
                  .verdict;
    if (!ok) return {false, "search witness violated the equivalence laws"};
    instances += 3;
  }
  if (instances < 20)
    return {false, "only " + std::to_string(instances) + " witness instances exercised"};
  return {true, std::to_string(instances) + " witness verifications across identity, " +
                    "inverse and composition, " + std::to_string(t.ms()) + " ms"};
}

/* ---- gate 6: search agreement between the two equivalences ----------------- */

Gate gate6() {
  Timer t;
  std::size_t pairs = 0, agreements = 0;
  std::vector<std::pair<std::size_t, std::size_t>> disagreements;

  auto drive = [&](const std::vector<Algebra<Fp>>& list, const std::string& tag) {
    std::vector<PairData<Fp>> pd;
    pd.reserve(list.size());
    for (const auto& a : list) pd.push_back(pair_data(a));
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        auto clinic = search_isoclinism(pd[i], pd[j]);
        auto morphic = search_isomorphism(list[i], list[j]);
        /* decisive = a witness in hand, or the whole field enumerated */
        if (!clinic.complete || !(morphic.found.has_value() || morphic.finished))
          return std::string("search was not exhaustive at pair (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
        ++pairs;
        bool same = clinic.witness.has_value() == morphic.found.has_value();
        if (same) {
          ++agreements;
        } else {
          if (disagreements.size() < 8) {
            std::string base = "disagreement-" + tag + "-" + std::to_string(i) + "-" +
                               std::to_string(j);
            archive(base + "-left.json", algebra_document_json(list[i]));
            archive(base + "-right.json", algebra_document_json(list[j]));
            json wit = clinic.witness
                           ? witness_json(*clinic.witness)
                           : json{{"note", "no witness on the isoclinic side"}};
            archive(base + "-detail.json",
                    json{{"isoclinic", clinic.witness.has_value()},
                         {"isomorphic", morphic.found.has_value()},
                         {"witness", wit}});
          }
          disagreements.push_back({i, j});
        }
      }
    return std::string();
  };

  std::string err = drive(corpus().dim2_f2, "dim2");
  if (err.empty()) err = drive(corpus().dim3_f2, "dim3");
  if (!err.empty()) return {false, err};

  long long ms = t.ms();
  if (ms >= 600000) return {false, "runtime exceeded 10 min"};
  if (!disagreements.empty())
    return {false, std::to_string(disagreements.size()) + " of " +
                       std::to_string(pairs) +
                       " same-dimension pairs are isoclinic-but-not-isomorphic or "
                       "vice versa; counterexamples archived, " +
                       std::to_string(ms) + " ms"};
  return {true, "all " + std::to_string(pairs) + " same-dimension pairs agree, " +
                    std::to_string(ms) + " ms"};
}

/* ---- gate 7: stem ⊕ abelian decomposition across the corpus ---------------- */

template <class K>
bool decompose_one(const Algebra<K>& a, std::string& why) {
  Decomposition<K> dec = decompose_stem_abelian(a);
  if (!dec.stem_verified) {
    why = "decomposition parts failed their checks";
    return false;
  }
  if (dec.stem_part.algebra.dim() + dec.abelian_part.algebra.dim() != a.dim()) {
    why = "decomposition dimensions do not add up";
    return false;
  }
  Algebra<K> model = direct_sum(dec.stem_part.algebra, dec.abelian_part.algebra);
  if (!is_isomorphism(dec.witness, model, a)) {
    why = "decomposition witness is not an isomorphism";
    return false;
  }
  return true;
}

Gate gate7() {
  Timer t;
  std::size_t split = 0, skipped = 0;
  std::string why;
  auto drive = [&](const auto& list) {
    for (const auto& a : list) {
      try {
        if (!decompose_one(a, why)) return false;
        ++split;
      } catch (const NoInvariantComplement&) {
        ++skipped;
      }
    }
    return true;
  };
  if (!drive(corpus().dim2_f2) || !drive(corpus().dim3_f2) ||
      !drive(corpus().dim3_f3) || !drive(corpus().rationals))
    return {false, why};
  return {true, std::to_string(split) + " decompositions verified, " +
                    std::to_string(skipped) + " lacked an invariant complement, " +
                    std::to_string(t.ms()) + " ms"};
}

/* ---- gate 8: randomized exact linear algebra properties -------------------- */

template <class K, class Rand>
Matrix<K> random_matrix(std::size_t r, std::size_t c, typename K::Field f, Rand&& entry) {
  Matrix<K> m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entry();
  return m;
}

Gate gate8() {
  Timer t;
  const std::size_t reps = 1000;
  std::mt19937 eng(2024);
  auto qf = Rational::Field{};
  Fp::Field pf{5};
  auto q_entry = [&] { return Rational(static_cast<long>(eng() % 7) - 3); };
  auto p_entry = [&] { return Fp(eng() % 5, 5); };
  auto dim_of = [&] { return 1 + eng() % 4; };

  std::string why;
  auto fail = [&](const char* what, std::size_t rep) {
    why = std::string(what) + " failed at instance " + std::to_string(rep);
    return Gate{false, why};
  };

  for (std::size_t rep = 0; rep < reps; ++rep) {
    std::size_t r = dim_of(), c = dim_of();
    /* alternate fields so both scalar types face every property */
    if (rep % 2 == 0) {
      Matrix<Rational> m = random_matrix<Rational>(r, c, qf, q_entry);
      auto red = rref(m);
      if (rref(red.m).m != red.m) return fail("echelon idempotence", rep);
      Subspace<Rational> ker = kernel_basis(m);
      if (red.rank + ker.dim() != c) return fail("rank-nullity", rep);
      for (std::size_t i = 0; i < ker.dim(); ++i)
        if (!vec_is_zero(mat_vec(m, ker.basis_vector(i))))
          return fail("kernel membership", rep);
    } else {
      Matrix<Fp> m = random_matrix<Fp>(r, c, pf, p_entry);
      auto red = rref(m);
      if (rref(red.m).m != red.m) return fail("echelon idempotence", rep);
      Subspace<Fp> ker = kernel_basis(m);
      if (red.rank + ker.dim() != c) return fail("rank-nullity", rep);
      for (std::size_t i = 0; i < ker.dim(); ++i)
        if (!vec_is_zero(mat_vec(m, ker.basis_vector(i))))
          return fail("kernel membership", rep);
    }
  }

  for (std::size_t rep = 0; rep < reps; ++rep) {
    std::size_t n = dim_of();
    Matrix<Rational> m(0, 0, qf);
    do {
      m = random_matrix<Rational>(n, n, qf, q_entry);
    } while (!is_invertible(m));
    Matrix<Rational> inv = inverse(m);
    if (m * inv != Matrix<Rational>::identity(n, qf) ||
        inv * m != Matrix<Rational>::identity(n, qf))
      return fail("inverse roundtrip", rep);
  }

  for (std::size_t rep = 0; rep < reps; ++rep) {
    std::size_t n = 2 + eng() % 3;
    std::vector<Vec<Fp>> ug, vg;
    for (std::size_t i = 0; i < 1 + eng() % n; ++i)
      ug.push_back(random_matrix<Fp>(1, n, pf, p_entry).row(0));
    for (std::size_t i = 0; i < 1 + eng() % n; ++i)
      vg.push_back(random_matrix<Fp>(1, n, pf, p_entry).row(0));
    Subspace<Fp> u = Subspace<Fp>::span_vecs(ug, n, pf);
    Subspace<Fp> v = Subspace<Fp>::span_vecs(vg, n, pf);
    if (u.sum(v).dim() + u.intersect(v).dim() != u.dim() + v.dim())
      return fail("dimension law", rep);
  }

  /* invariant complements: block-triangular operators over a random frame
     always admit one; the shear on a line never does */
  std::size_t found = 0;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    std::size_t n = 2 + eng() % 2;
    Matrix<Rational> s(0, 0, qf);
    do {
      s = random_matrix<Rational>(n, n, qf, q_entry);
    } while (!is_invertible(s));
    std::size_t k = 1 + eng() % (n - 1);
    Matrix<Rational> blocks(n, n, qf);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i < k ? j < k : j >= k) blocks(i, j) = q_entry();
    Matrix<Rational> op = s * (blocks * inverse(s));
    std::vector<Vec<Rational>> ug;
    for (std::size_t i = 0; i < k; ++i) ug.push_back(s.col(i));
    Subspace<Rational> u = Subspace<Rational>::span_vecs(ug, n, qf);
    {
      Matrix<Rational> im = op * u.embedding();
      bool inv_ok = true;
      for (std::size_t j = 0; j < u.dim(); ++j)
        if (!u.contains(im.col(j))) inv_ok = false;
      if (!inv_ok) return fail("frame construction", rep);
    }
    auto comp = invariant_complement(u, Subspace<Rational>::full(n, qf), op);
    if (comp) {
      ++found;
      if (comp->dim() + u.dim() != n || comp->intersect(u).dim() != 0)
        return fail("complement shape", rep);
      Matrix<Rational> im = op * comp->embedding();
      for (std::size_t j = 0; j < comp->dim(); ++j)
        if (!comp->contains(im.col(j))) return fail("complement invariance", rep);
    }

    Matrix<Rational> shear(2, 2, qf);
    shear(0, 0) = Rational(1);
    shear(0, 1) = Rational(1);
    shear(1, 1) = Rational(1);
    Subspace<Rational> line = Subspace<Rational>::span_vecs(
        {unit_vec<Rational>(2, 0, qf)}, 2, qf);
    if (invariant_complement(line, Subspace<Rational>::full(2, qf), shear))
      return fail("shear nonexistence", rep);
  }
  if (found < reps / 2)
    return {false, "too few invariant complements found: " + std::to_string(found)};

  return {true, "5 properties x " + std::to_string(reps) +
                    " randomized instances, zero failures, " + std::to_string(t.ms()) +
                    " ms"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[i + 1]);

  Gate (*gates[])() = {gate1, gate2, gate3, gate4, gate5, gate6, gate7, gate8};
  bool all_pass = true;
  for (int n = 1; n <= 8; ++n) {
    if (only != 0 && only != n) continue;
    Gate g;
    try {
      g = gates[n - 1]();
    } catch (const std::exception& e) {
      g = {false, std::string("unexpected error: ") + e.what()};
    }
    std::printf("criterion %d: %s (%s)\n", n, g.pass ? "PASS" : "FAIL",
                g.detail.c_str());
    all_pass = all_pass && g.pass;
  }
  return all_pass ? 0 : 1;
}
