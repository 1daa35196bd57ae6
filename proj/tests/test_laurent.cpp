#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfw/error.hpp"
#include "mfw/laurent.hpp"

#include <random>

using mfw::BigInt;
using mfw::LaurentPoly2;

namespace {

LaurentPoly2 mono(int a, int z, int c = 1) { return LaurentPoly2::monomial(a, z, c); }

LaurentPoly2 random_poly(std::mt19937& rng) {
  LaurentPoly2 p;
  int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i)
    p.add_term(static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 9) - 4);
  return p;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly2 p = mono(1, 2, 3);
  p.add_term(1, 2, -3);
  CHECK(p.is_zero());
  CHECK(p == LaurentPoly2{});
  CHECK((mono(2, 0) - mono(2, 0)).size() == 0);
}

TEST_CASE("unlink factor squared") {
  LaurentPoly2 u3 = mfw::unlink_value(3);
  // (a^-1 - a)^2 z^-2 = a^-2 z^-2 - 2 z^-2 + a^2 z^-2
  CHECK(u3 == mono(-2, -2) - mono(0, -2, 2) + mono(2, -2));
  CHECK(mfw::unlink_value(1) == LaurentPoly2::constant(1));
  CHECK_THROWS_AS(mfw::unlink_value(0), mfw::PreconditionError);
}

TEST_CASE("degrees of the Hopf polynomial") {
  LaurentPoly2 h = mono(1, 1) + mono(1, -1) - mono(3, -1);
  auto d = h.degrees();
  CHECK(d.a_max == 3);
  CHECK(d.a_min == 1);
  CHECK(d.z_max == 1);
  CHECK(d.z_min == -1);
  CHECK(h.substitute_a_one().coeff(1) == 1);
  CHECK(h.substitute_a_one().coeff(-1) == 0);
  CHECK_THROWS_WITH_AS(LaurentPoly2{}.degrees(), "degrees undefined", mfw::PreconditionError);
}

TEST_CASE("mirror substitution is an involution and multiplicative") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly2 p = random_poly(rng), q = random_poly(rng);
    CHECK(p.substitute_mirror().substitute_mirror() == p);
    CHECK((p * q).substitute_mirror() == p.substitute_mirror() * q.substitute_mirror());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly2 p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p - p == LaurentPoly2{});
    CHECK(p.scaled(2, -1, 3) == p * mono(2, -1, 3));
  }
}

TEST_CASE("a coefficients and printing") {
  LaurentPoly2 p = mono(8, 8) + mono(8, 0, 7) - mono(10, 2, 14);
  CHECK(p.a_coefficient(8).coeff(8) == 1);
  CHECK(p.a_coefficient(8).coeff(0) == 7);
  CHECK(p.a_coefficient(9).is_zero());
  CHECK(p.to_string() == "7*a^8 + a^8*z^8 - 14*a^10*z^2");
  CHECK(mono(0, -1).to_string() == "z^-1");
}

TEST_CASE("coefficients beyond 64 bits") {
  LaurentPoly2 p = LaurentPoly2::constant(2).pow(100);
  BigInt expected = 1;
  expected <<= 100;
  CHECK(p.coeff(0, 0) == expected);
}
