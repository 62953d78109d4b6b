#include "hlya/fixtures.hpp"

#include "hlya/algebra.hpp"

namespace hlya {

namespace {

using Q = Rational;
const Q::Field QF{};

Vec<Q> unit(std::size_t n, std::size_t i) { return unit_vec<Q>(n, i, QF); }

Matrix<Q> diag(const std::vector<long>& d) {
  Matrix<Q> m(d.size(), d.size(), QF);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Q(d[i]);
  return m;
}

/* 3-dim algebra with one central product direction: [e1,e2] = e3. */
Algebra<Q> heisenberg() {
  AlgebraBuilder<Q> b(3, QF);
  b.set_binary(0, 1, unit(3, 2));
  return b.build();
}

Algebra<Q> abelian2() { return Algebra<Q>::abelian(2, QF, Matrix<Q>::identity(2, QF)); }

/* 3-dim fixture with a sign-flipping twist: [e1,e2] = e1, {e1,e3,e3} = e1,
   {e2,e3,e3} = e2, twist diag(1,-1,-1). Centerless by construction. */
Algebra<Q> example_a() {
  AlgebraBuilder<Q> b(3, QF);
  b.set_binary(0, 1, unit(3, 0));
  b.set_ternary(0, 2, 2, unit(3, 0));
  b.set_ternary(1, 2, 2, unit(3, 1));
  b.set_twist(diag({1, -1, -1}));
  return b.build();
}

/* 4-dim fixture: [f1,f4] = f2, {f1,f4,f4} = f1, {f2,f4,f4} = f2, twist taken
   as diag(1,1,-1,-1) so that it is bijective. Center is span{f3}. */
Algebra<Q> example_b() {
  AlgebraBuilder<Q> b(4, QF);
  b.set_names({"f1", "f2", "f3", "f4"});
  b.set_binary(0, 3, unit(4, 1));
  b.set_ternary(0, 3, 3, unit(4, 0));
  b.set_ternary(1, 3, 3, unit(4, 1));
  b.set_twist(diag({1, 1, -1, -1}));
  return b.build();
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"heisenberg", "example-a", "example-b", "abelian-2", "heisenberg-abelian-2"};
}

AnyAlgebraDocument fixture(const std::string& name) {
  if (name == "heisenberg") return AlgebraDocument<Q>{heisenberg(), {}};
  if (name == "example-a") return AlgebraDocument<Q>{example_a(), {}};
  if (name == "example-b") return AlgebraDocument<Q>{example_b(), {}};
  if (name == "abelian-2") return AlgebraDocument<Q>{abelian2(), {}};
  if (name == "heisenberg-abelian-2")
    return AlgebraDocument<Q>{direct_sum(heisenberg(), abelian2()), {}};
  throw ParseError("unknown fixture: " + name);
}

}  // namespace hlya
