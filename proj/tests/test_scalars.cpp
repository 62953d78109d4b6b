#include <random>

#include "doctest.h"
#include "hlya/scalars.hpp"

using namespace hlya;

namespace {
const Rational::Field QF{};
}

TEST_CASE("rationals normalize and print canonically") {
  CHECK(Rational::parse(QF, "2/4").str() == "1/2");
  CHECK(Rational::parse(QF, "-6/4").str() == "-3/2");
  CHECK(Rational::parse(QF, "5").str() == "5");
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK(Rational::zero(QF).str() == "0");
  CHECK(Rational::from_int(QF, -7).str() == "-7");
}

TEST_CASE("rational arithmetic basics") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK_THROWS_AS(a / Rational::zero(QF), Error);
}

TEST_CASE("rational field laws on random values") {
  std::mt19937 eng(11);
  auto rnd = [&]() {
    long num = static_cast<long>(eng() % 19) - 9;
    long den = 1 + static_cast<long>(eng() % 9);
    return Rational(num, den);
  };
  for (int rep = 0; rep < 500; ++rep) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!(b == Rational::zero(QF))) CHECK((a / b) * b == a);
  }
}

TEST_CASE("prime field arithmetic and inverses") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    Fp::Field f{p};
    for (std::uint32_t r = 1; r < p; ++r) {
      Fp x(r, p);
      CHECK(x * x.inv() == Fp::one(f));
    }
    CHECK(Fp::from_int(f, -1) == Fp(p - 1, p));
    CHECK(Fp::from_int(f, static_cast<long>(p)) == Fp::zero(f));
    CHECK(Fp::parse(f, "1") == Fp::one(f));
  }
}

TEST_CASE("mixed-modulus arithmetic is rejected") {
  Fp a(1, 3), b(1, 5);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * b, FieldMismatch);
}

TEST_CASE("prime field division and negation") {
  Fp::Field f{7};
  Fp a(3, 7), b(5, 7);
  CHECK(a / b * b == a);
  CHECK(a + (-a) == Fp::zero(f));
  CHECK_THROWS_AS(a / Fp::zero(f), Error);
}
