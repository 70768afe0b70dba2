#include "statesurf/laurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace statesurf {

LaurentPoly LaurentPoly::constant(long value, std::string variable) {
  return monomial(mpz_class(value), 0, std::move(variable));
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coefficient, int exponent, std::string variable) {
  LaurentPoly p(std::move(variable));
  p.add_term(coefficient, exponent);
  return p;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

mpz_class LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const mpz_class& coefficient, int exponent) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out(variable_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

LaurentPoly LaurentPoly::rescaled(int scale, std::string new_variable) const {
  if (scale == 0) throw std::invalid_argument("rescaling by zero");
  LaurentPoly out(std::move(new_variable));
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * scale, c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result = constant(1, variable_);
  LaurentPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

void LaurentPoly::check_variable(const LaurentPoly& other) const {
  if (!is_zero() && !other.is_zero() && variable_ != other.variable_) {
    throw std::invalid_argument("mixing Laurent polynomials in " + variable_ + " and " + other.variable_);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_variable(other);
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_variable(other);
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  check_variable(other);
  std::map<int, mpz_class> product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) product[ea + eb] += ca * cb;
  }
  std::erase_if(product, [](const auto& term) { return term.second == 0; });
  terms_ = std::move(product);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

namespace {

std::string exponent_text(int exponent, int denominator) {
  const int g = std::gcd(exponent, denominator);
  const int num = exponent / g;
  const int den = denominator / g;
  if (den == 1) return std::to_string(num);
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::string LaurentPoly::to_string(const std::string& name, int denominator) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << '*';
    os << name;
    if (e != denominator) os << '^' << exponent_text(e, denominator);
  }
  return os.str();
}

}  // namespace statesurf
