#include "mfw/laurent.hpp"

#include "mfw/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace mfw {

void LaurentPoly1::add_term(int z_exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(z_exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPoly1::deg_max() const {
  if (terms_.empty()) throw PreconditionError("degrees undefined");
  return terms_.rbegin()->first;
}

int LaurentPoly1::deg_min() const {
  if (terms_.empty()) throw PreconditionError("degrees undefined");
  return terms_.begin()->first;
}

BigInt LaurentPoly1::coeff(int z_exp) const {
  auto it = terms_.find(z_exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly2 LaurentPoly2::constant(const BigInt& c) { return monomial(0, 0, c); }

LaurentPoly2 LaurentPoly2::monomial(int a_exp, int z_exp, const BigInt& c) {
  LaurentPoly2 p;
  p.add_term(a_exp, z_exp, c);
  return p;
}

void LaurentPoly2::add_term(int a_exp, int z_exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a_exp, z_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly2::coeff(int a_exp, int z_exp) const {
  auto it = terms_.find(Key{a_exp, z_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
  LaurentPoly2 out;
  for (const auto& [k1, c1] : lhs.terms_)
    for (const auto& [k2, c2] : rhs.terms_)
      out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return out;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly2 LaurentPoly2::scaled(int a_exp, int z_exp, const BigInt& c) const {
  LaurentPoly2 out;
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(Key{k.first + a_exp, k.second + z_exp}, v * c);
  return out;
}

LaurentPoly2 LaurentPoly2::pow(unsigned n) const {
  LaurentPoly2 result = constant(1);
  LaurentPoly2 base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Degrees LaurentPoly2::degrees() const {
  if (terms_.empty()) throw PreconditionError("degrees undefined");
  Degrees d;
  d.a_min = terms_.begin()->first.first;
  d.a_max = terms_.rbegin()->first.first;
  d.z_min = terms_.begin()->first.second;
  d.z_max = d.z_min;
  for (const auto& [k, c] : terms_) {
    d.z_min = std::min(d.z_min, k.second);
    d.z_max = std::max(d.z_max, k.second);
  }
  return d;
}

LaurentPoly1 LaurentPoly2::a_coefficient(int a_exp) const {
  LaurentPoly1 out;
  for (auto it = terms_.lower_bound(Key{a_exp, std::numeric_limits<int>::min()});
       it != terms_.end() && it->first.first == a_exp; ++it)
    out.add_term(it->first.second, it->second);
  return out;
}

LaurentPoly2 LaurentPoly2::substitute_mirror() const {
  LaurentPoly2 out;
  for (const auto& [k, c] : terms_) out.add_term(-k.first, k.second, (k.first % 2 == 0) ? c : BigInt(-c));
  return out;
}

LaurentPoly1 LaurentPoly2::substitute_a_one() const {
  LaurentPoly1 out;
  for (const auto& [k, c] : terms_) out.add_term(k.second, c);
  return out;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1) && (k.first != 0 || k.second != 0);
    if (!unit) os << mag;
    if (k.first != 0) {
      if (!unit) os << "*";
      os << "a";
      if (k.first != 1) os << "^" << k.first;
    }
    if (k.second != 0) {
      if (!unit || k.first != 0) os << "*";
      os << "z";
      if (k.second != 1) os << "^" << k.second;
    }
  }
  return os.str();
}

LaurentPoly2 unlink_value(int components) {
  if (components < 1) throw PreconditionError("unlink needs at least one component");
  LaurentPoly2 factor = LaurentPoly2::monomial(-1, -1) - LaurentPoly2::monomial(1, -1);
  return factor.pow(static_cast<unsigned>(components - 1));
}

}  // namespace mfw
