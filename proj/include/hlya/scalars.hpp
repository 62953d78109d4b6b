#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hlya/errors.hpp"

namespace hlya {

/* Exact rational scalar backed by GMP. mpq_class keeps values canonical
   (gcd-reduced, positive denominator), which is exactly the normal form the
   rest of the library relies on for bit-exact comparisons. */
class Rational {
 public:
  /* Field descriptor. Rationals need no runtime data; the descriptor exists
     so Matrix/algebra code can mint zeros and ones for any scalar type. */
  struct Field {
    bool operator==(const Field&) const = default;
    static std::string name() { return "Q"; }
  };

  Rational() : v_(0) {}
  explicit Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) {}

  static Rational zero(Field) { return Rational(); }
  static Rational one(Field) { return Rational(1); }
  static Rational from_int(Field, long n) { return Rational(n); }

  /* Accepts "a" or "a/b" with optional sign, arbitrary precision. */
  static Rational parse(Field, const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (v.get_den() == 0) throw ParseError("rational with zero denominator: " + s);
    v.canonicalize();
    return Rational(v);
  }

  Field field() const { return {}; }
  bool is_zero() const { return v_ == 0; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  /* "a/b", with "/b" omitted for integers. */
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/* Residue scalar in F_p with a runtime modulus. Every element carries its
   modulus; mixed-modulus arithmetic is a programming error surfaced as
   FieldMismatch. p is expected prime and small (the CLI admits 2..7). */
class Fp {
 public:
  struct Field {
    std::uint32_t p = 0;
    bool operator==(const Field&) const = default;
    std::string name() const { return "F" + std::to_string(p); }
  };

  Fp() : r_(0), p_(0) {}
  Fp(std::uint32_t residue, std::uint32_t p) : r_(residue % p), p_(p) {}

  static Fp zero(Field f) { return Fp(0, f.p); }
  static Fp one(Field f) { return Fp(1 % f.p, f.p); }
  static Fp from_int(Field f, long n) {
    long r = n % static_cast<long>(f.p);
    if (r < 0) r += f.p;
    return Fp(static_cast<std::uint32_t>(r), f.p);
  }
  static Fp parse(Field f, const std::string& s) {
    try {
      return from_int(f, std::stol(s));
    } catch (const std::exception&) {
      throw ParseError("bad residue literal: " + s);
    }
  }

  Field field() const { return {p_}; }
  std::uint32_t residue() const { return r_; }
  bool is_zero() const { return r_ == 0; }

  Fp operator+(const Fp& o) const { check(o); return Fp(r_ + o.r_, p_); }
  Fp operator-(const Fp& o) const { check(o); return Fp(r_ + p_ - o.r_, p_); }
  Fp operator*(const Fp& o) const { check(o); return Fp(r_ * o.r_, p_); }
  Fp operator/(const Fp& o) const { check(o); return *this * o.inv(); }
  Fp operator-() const { return Fp(p_ - r_, p_); }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

  bool operator==(const Fp& o) const { return r_ == o.r_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp inv() const {
    if (r_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
    /* extended Euclid on (r, p) */
    long long t = 0, new_t = 1, r = p_, new_r = r_;
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t; t = new_t; new_t = tmp;
      tmp = r - q * new_r; r = new_r; new_r = tmp;
    }
    if (r != 1) throw Error("modulus is not prime: " + std::to_string(p_));
    if (t < 0) t += p_;
    return Fp(static_cast<std::uint32_t>(t), p_);
  }

  std::string str() const { return std::to_string(r_); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) throw FieldMismatch("mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }
  std::uint32_t r_;
  std::uint32_t p_;
};

}  // namespace hlya
