#include <variant>

#include "doctest.h"
#include "hlya/corpus.hpp"
#include "hlya/decompose.hpp"
#include "hlya/fixtures.hpp"
#include "hlya/isoclinism.hpp"

using namespace hlya;

namespace {

Algebra<Rational> qfix(const std::string& name) {
  AnyAlgebraDocument any = fixture(name);
  return std::get<AlgebraDocument<Rational>>(any).algebra;
}

Algebra<Rational> abelian_q(std::size_t n) {
  return AlgebraBuilder<Rational>(n, Rational::Field{}).build();
}

/* inclusion of A into A ⊕ C as the left summand */
Matrix<Rational> left_inclusion(std::size_t n, std::size_t total) {
  Matrix<Rational> f(total, n, Rational::Field{});
  for (std::size_t i = 0; i < n; ++i) f(i, i) = Rational(1);
  return f;
}

Algebra<Fp> abelian_f2_twisted() {
  Fp::Field f{2};
  AlgebraBuilder<Fp> bld(2, f);
  Matrix<Fp> tw(2, 2, f);
  tw(0, 1) = Fp(1, 2);
  tw(1, 0) = Fp(1, 2);
  tw(1, 1) = Fp(1, 2);
  bld.set_twist(std::move(tw));
  return bld.build();
}

}  // namespace

TEST_CASE("the identity witness verifies and is coset compatible") {
  PairData<Rational> pd = pair_data(qfix("heisenberg"));
  CHECK(pd.q() == 2);
  CHECK(pd.d() == 1);
  auto w = identity_witness(pd);
  auto rep = verify_isoclinism(w, pd, pd);
  CHECK(rep.verdict);
  CHECK(rep.check("binary-diagram").pass);
  CHECK(witness_coset_compat(w, pd, pd));
}

TEST_CASE("a scaled derived map is caught by the binary diagram") {
  PairData<Rational> pd = pair_data(qfix("heisenberg"));
  IsoclinismWitness<Rational> w = identity_witness(pd);
  w.beta(0, 0) = Rational(2);
  auto rep = verify_isoclinism(w, pd, pd);
  CHECK(!rep.verdict);
  CHECK(rep.check("theta-invertible").pass);
  CHECK(rep.check("beta-twist").pass);
  CHECK(!rep.check("binary-diagram").pass);
}

TEST_CASE("witnesses between incompatible quotient shapes fail the shape check") {
  PairData<Rational> pd_h = pair_data(qfix("heisenberg"));
  PairData<Rational> pd_a = pair_data(qfix("abelian-2"));
  auto rep = verify_isoclinism(identity_witness(pd_h), pd_h, pd_a);
  CHECK(!rep.verdict);
  CHECK(!rep.check("shape").pass);
}

TEST_CASE("bracket tables are independent of the coset representative") {
  Algebra<Rational> h = qfix("heisenberg");
  PairData<Rational> pd = pair_data(h);
  auto f = h.field();
  /* x and x + (central) project to the same class */
  Vec<Rational> x = unit_vec<Rational>(3, 0, f);
  Vec<Rational> x_shift = vec_add(x, unit_vec<Rational>(3, 2, f));
  Vec<Rational> y = unit_vec<Rational>(3, 1, f);
  Vec<Rational> ux = mat_vec(pd.by_center.projection, x);
  Vec<Rational> ux_shift = mat_vec(pd.by_center.projection, x_shift);
  Vec<Rational> uy = mat_vec(pd.by_center.projection, y);
  CHECK(ux == ux_shift);
  auto dc = pd.derived_space.coords(h.eval_binary(x_shift, y));
  REQUIRE(dc.has_value());
  CHECK(*dc == pd.delta2(ux, uy));
  auto tc = pd.derived_space.coords(h.eval_ternary(x_shift, y, x));
  REQUIRE(tc.has_value());
  CHECK(*tc == pd.delta3(ux, uy, ux));
}

TEST_CASE("inclusion into a padded sum induces a witness, and witnesses compose") {
  Algebra<Rational> a = qfix("heisenberg");
  Algebra<Rational> b = direct_sum(a, abelian_q(1));
  Algebra<Rational> c = direct_sum(a, abelian_q(2));
  PairData<Rational> pda = pair_data(a);
  PairData<Rational> pdb = pair_data(b);
  PairData<Rational> pdc = pair_data(c);

  auto wab = induced_witness(left_inclusion(3, 4), pda, pdb);
  auto wbc = induced_witness(left_inclusion(4, 5), pdb, pdc);
  CHECK(verify_isoclinism(wab, pda, pdb).verdict);
  CHECK(witness_coset_compat(wab, pda, pdb));

  auto wac = compose_witness(wbc, wab);
  CHECK(verify_isoclinism(wac, pda, pdc).verdict);

  auto wba = invert_witness(wab);
  CHECK(verify_isoclinism(wba, pdb, pda).verdict);
  auto round = compose_witness(wba, wab);
  CHECK(verify_isoclinism(round, pda, pda).verdict);
}

TEST_CASE("maps whose kernel meets the derived subalgebra are rejected") {
  Algebra<Rational> h = qfix("heisenberg");
  PairData<Rational> pd = pair_data(h);
  auto f = h.field();
  Matrix<Rational> collapse(3, 3, f);
  collapse(0, 0) = Rational(1);
  REQUIRE(is_homomorphism(collapse, h, h));
  CHECK_THROWS_AS(induced_witness(collapse, pd, pd), MathError);
}

TEST_CASE("maps whose image misses too much of the target are rejected") {
  Algebra<Rational> h = qfix("heisenberg");
  Algebra<Rational> a1 = abelian_q(1);
  PairData<Rational> pd1 = pair_data(a1);
  PairData<Rational> pdh = pair_data(h);
  Matrix<Rational> f(3, 1, h.field());
  f(0, 0) = Rational(1);
  REQUIRE(is_homomorphism(f, a1, h));
  CHECK_THROWS_AS(induced_witness(f, pd1, pdh), MathError);
}

TEST_CASE("the central quotient map is an isoclinism after shrinking the kernel") {
  Algebra<Rational> h = qfix("heisenberg");
  auto res = quotient_isoclinism_witness(h, center(h));
  CHECK(!res.source_is_original);
  CHECK(res.meet.dim() == 1);
  CHECK(res.source.dim() == 2);
  CHECK(res.target.dim() == 2);
  CHECK(is_abelian(res.source));
  PairData<Rational> ps = pair_data(res.source);
  PairData<Rational> pt = pair_data(res.target);
  CHECK(verify_isoclinism(res.witness, ps, pt).verdict);
}

TEST_CASE("quotients by ideals missing the derived subalgebra keep the original source") {
  Algebra<Rational> big = qfix("heisenberg-abelian-2");
  auto f = big.field();
  Subspace<Rational> leg = Subspace<Rational>::span_vecs(
      {unit_vec<Rational>(5, 4, f)}, 5, f);
  REQUIRE(is_hom_ideal(big, leg));
  auto res = quotient_isoclinism_witness(big, leg);
  CHECK(res.source_is_original);
  CHECK(res.meet.dim() == 0);
  CHECK(res.source.dim() == 5);
  CHECK(res.target.dim() == 4);
  PairData<Rational> ps = pair_data(res.source);
  PairData<Rational> pt = pair_data(res.target);
  CHECK(verify_isoclinism(res.witness, ps, pt).verdict);
}

TEST_CASE("projecting away an abelian summand is an isoclinism") {
  Algebra<Rational> big = qfix("heisenberg-abelian-2");
  Algebra<Rational> h = qfix("heisenberg");
  Matrix<Rational> proj(3, 5, big.field());
  for (std::size_t i = 0; i < 3; ++i) proj(i, i) = Rational(1);
  PairData<Rational> pb = pair_data(big);
  PairData<Rational> ph = pair_data(h);
  auto w = surjection_isoclinism(proj, pb, ph);
  CHECK(verify_isoclinism(w, pb, ph).verdict);
}

TEST_CASE("the search finds a self witness and is deterministic across thread counts") {
  PairData<Rational> pd = pair_data(qfix("heisenberg"));
  SearchOptions o1;
  o1.threads = 1;
  auto r1 = search_isoclinism(pd, pd, o1);
  REQUIRE(r1.witness.has_value());
  CHECK(r1.complete);
  CHECK(verify_isoclinism(*r1.witness, pd, pd).verdict);

  SearchOptions o4;
  o4.threads = 4;
  o4.wave = 64;
  auto r4 = search_isoclinism(pd, pd, o4);
  REQUIRE(r4.witness.has_value());
  CHECK(r1.witness->theta == r4.witness->theta);
  CHECK(r1.witness->beta == r4.witness->beta);
  CHECK(r1.examined == r4.examined);
}

TEST_CASE("search separates isoclinism from isomorphism on a twisted abelian plane") {
  Fp::Field f{2};
  Algebra<Fp> plain = AlgebraBuilder<Fp>(2, f).build();
  Algebra<Fp> twisted = abelian_f2_twisted();
  REQUIRE(axioms_pass(plain));
  REQUIRE(axioms_pass(twisted));

  PairData<Fp> pp = pair_data(plain);
  PairData<Fp> pt = pair_data(twisted);
  CHECK(pp.q() == 0);
  CHECK(pp.d() == 0);
  auto iso_clinic = search_isoclinism(pp, pt);
  REQUIRE(iso_clinic.witness.has_value());
  CHECK(iso_clinic.complete);
  CHECK(verify_isoclinism(*iso_clinic.witness, pp, pt).verdict);

  /* yet no isomorphism exists anywhere over this field */
  auto iso_morphic = search_isomorphism(plain, twisted);
  CHECK(!iso_morphic.found.has_value());
  CHECK(iso_morphic.finished);
}

TEST_CASE("dimension invariants settle mismatched searches immediately") {
  PairData<Rational> ph = pair_data(qfix("heisenberg"));
  PairData<Rational> pa = pair_data(qfix("abelian-2"));
  auto res = search_isoclinism(ph, pa);
  CHECK(!res.witness.has_value());
  CHECK(res.complete);
  CHECK(res.examined == 0);
}

TEST_CASE("a tiny budget leaves the search unfinished") {
  PairData<Rational> pd = pair_data(qfix("heisenberg"));
  SearchOptions opts;
  opts.budget = 1;
  auto res = search_isoclinism(pd, pd, opts);
  CHECK(!res.witness.has_value());
  CHECK(!res.finished);
  CHECK(!res.complete);
  CHECK(res.examined == 1);
}

TEST_CASE("splitting off the abelian summand recovers both parts") {
  Algebra<Rational> big = qfix("heisenberg-abelian-2");
  auto dec = decompose_stem_abelian(big);
  CHECK(dec.stem_verified);
  CHECK(dec.stem_part.algebra.dim() == 3);
  CHECK(dec.abelian_part.algebra.dim() == 2);
  CHECK(is_stem(dec.stem_part.algebra));
  CHECK(is_abelian(dec.abelian_part.algebra));
  Algebra<Rational> model = direct_sum(dec.stem_part.algebra, dec.abelian_part.algebra);
  CHECK(is_isomorphism(dec.witness, model, big));
}

TEST_CASE("decomposition degenerates correctly at both extremes") {
  auto dh = decompose_stem_abelian(qfix("heisenberg"));
  CHECK(dh.stem_part.algebra.dim() == 3);
  CHECK(dh.abelian_part.algebra.dim() == 0);

  auto da = decompose_stem_abelian(qfix("abelian-2"));
  CHECK(da.stem_part.algebra.dim() == 0);
  CHECK(da.abelian_part.algebra.dim() == 2);
}

TEST_CASE("decomposition covers prime-field samples when complements exist") {
  std::size_t split = 0, skipped = 0;
  for (std::uint32_t p : {2u, 3u}) {
    CorpusResult corp = sample_corpus(p, 3, 15, 13);
    for (const auto& a : corp.algebras) {
      try {
        auto dec = decompose_stem_abelian(a);
        CHECK(dec.stem_verified);
        CHECK(dec.stem_part.algebra.dim() + dec.abelian_part.algebra.dim() == a.dim());
      } catch (const NoInvariantComplement&) {
        ++skipped;
        continue;
      }
      ++split;
    }
  }
  CHECK(split >= 20);
  INFO("skipped " << skipped);
}

TEST_CASE("family minimality holds across padded sums of the one-relation algebra") {
  Algebra<Rational> a = qfix("heisenberg");
  Algebra<Rational> b = direct_sum(a, abelian_q(1));
  Algebra<Rational> c = direct_sum(a, abelian_q(2));
  PairData<Rational> pda = pair_data(a);
  PairData<Rational> pdb = pair_data(b);
  PairData<Rational> pdc = pair_data(c);
  std::vector<FamilyEdge<Rational>> edges;
  edges.push_back({0, 1, induced_witness(left_inclusion(3, 4), pda, pdb)});
  edges.push_back({1, 2, induced_witness(left_inclusion(4, 5), pdb, pdc)});
  auto rep = stem_minimality_check<Rational>({a, b, c}, edges);
  CHECK(rep.verdict);
  REQUIRE(rep.stem_dim.has_value());
  CHECK(*rep.stem_dim == 3);
  CHECK(rep.members.size() == 3);
  CHECK(rep.members[0].stem);
  CHECK(!rep.members[1].stem);
}

TEST_CASE("family checks demand connectivity and verified edges") {
  Algebra<Rational> a = qfix("heisenberg");
  Algebra<Rational> b = direct_sum(a, abelian_q(1));
  CHECK_THROWS_AS(stem_minimality_check<Rational>({a, b}, {}), NotAFamily);
  CHECK_THROWS_AS(stem_minimality_check<Rational>({}, {}), NotAFamily);

  /* a wrong witness is rejected even if the pair is in fact isoclinic */
  PairData<Rational> pda = pair_data(a);
  std::vector<FamilyEdge<Rational>> bad;
  IsoclinismWitness<Rational> w = identity_witness(pda);
  w.beta(0, 0) = Rational(2);
  bad.push_back({0, 1, w});
  CHECK_THROWS_AS(stem_minimality_check<Rational>({a, b}, bad), NotAFamily);
}

TEST_CASE("gaps in a family can be closed by searching") {
  Algebra<Rational> a = qfix("heisenberg");
  auto rep = stem_minimality_check<Rational>({a, a}, {}, SearchOptions{}, true);
  CHECK(rep.verdict);
  CHECK(*rep.stem_dim == 3);
}

TEST_CASE("families without stem members report rather than fail") {
  Algebra<Rational> a1 = abelian_q(1);
  Algebra<Rational> a2 = abelian_q(2);
  auto f = Rational::Field{};
  std::vector<FamilyEdge<Rational>> edges;
  edges.push_back({0, 1, IsoclinismWitness<Rational>{Matrix<Rational>(0, 0, f),
                                                     Matrix<Rational>(0, 0, f)}});
  auto rep = stem_minimality_check<Rational>({a1, a2}, edges);
  CHECK(rep.verdict);
  CHECK(!rep.stem_dim.has_value());
  CHECK(rep.note == "no stem member present in sample");
}
