#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>

namespace mfw {

using BigInt = boost::multiprecision::cpp_int;

struct Degrees {
  int a_max = 0;
  int a_min = 0;
  int z_max = 0;
  int z_min = 0;
};

// Integer Laurent polynomial in one variable z.
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;

  void add_term(int z_exp, const BigInt& coeff);
  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int deg_max() const;
  int deg_min() const;
  BigInt coeff(int z_exp) const;

  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

 private:
  std::map<int, BigInt> terms_;
};

/// Integer Laurent polynomial in a and z, stored sparsely as
/// (a exponent, z exponent) -> coefficient. Zero coefficients are never stored,
/// so structural equality is polynomial equality.
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;

  LaurentPoly2() = default;

  static LaurentPoly2 constant(const BigInt& c);
  static LaurentPoly2 monomial(int a_exp, int z_exp, const BigInt& c = 1);

  void add_term(int a_exp, int z_exp, const BigInt& coeff);
  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(int a_exp, int z_exp) const;

  LaurentPoly2& operator+=(const LaurentPoly2& rhs);
  LaurentPoly2& operator-=(const LaurentPoly2& rhs);
  friend LaurentPoly2 operator+(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs += rhs; }
  friend LaurentPoly2 operator-(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs -= rhs; }
  friend LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs);
  LaurentPoly2 operator-() const;

  // Multiply by c * a^i * z^j.
  LaurentPoly2 scaled(int a_exp, int z_exp, const BigInt& c = 1) const;
  LaurentPoly2 pow(unsigned n) const;

  // Throws PreconditionError("degrees undefined") on the zero polynomial.
  Degrees degrees() const;

  // Coefficient of a^k as a polynomial in z.
  LaurentPoly1 a_coefficient(int a_exp) const;

  // a^i z^j -> (-1)^i a^-i z^j; the HOMFLY-PT polynomial of the mirror image.
  LaurentPoly2 substitute_mirror() const;
  // a = 1; the Conway polynomial when applied to HOMFLY-PT.
  LaurentPoly1 substitute_a_one() const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  std::map<Key, BigInt> terms_;
};

// (a^-1 - a)^(n-1) z^(1-n): the value on a crossingless diagram with n circles.
LaurentPoly2 unlink_value(int components);

}  // namespace mfw
