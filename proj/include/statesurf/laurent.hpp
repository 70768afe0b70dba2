#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace statesurf {

// Exact Laurent polynomial with arbitrary-precision integer coefficients in
// one named formal variable. Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::string variable = "A") : variable_(std::move(variable)) {}

  static LaurentPoly constant(long value, std::string variable = "A");
  static LaurentPoly monomial(const mpz_class& coefficient, int exponent, std::string variable = "A");

  const std::string& variable() const { return variable_; }
  const std::map<int, mpz_class>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;  // requires a nonzero polynomial
  int max_degree() const;
  mpz_class coefficient(int exponent) const;

  void add_term(const mpz_class& coefficient, int exponent);

  // Multiply by variable^shift.
  LaurentPoly shifted(int shift) const;
  // Substitute variable -> new_variable^scale.
  LaurentPoly rescaled(int scale, std::string new_variable) const;
  LaurentPoly pow(unsigned exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const mpz_class& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= mpz_class(-1); }

  // Equality compares coefficients only; the variable name is a label.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Terms in increasing degree, e.g. "t^-2 - t^-1 + 1 - t + t^2". Exponents
  // are divided by `denominator` and printed as reduced fractions when not
  // integral: "2*t^(1/2)".
  std::string to_string(const std::string& name, int denominator = 1) const;
  std::string to_string() const { return to_string(variable_, 1); }

 private:
  void check_variable(const LaurentPoly& other) const;

  std::string variable_;
  std::map<int, mpz_class> terms_;
};

}  // namespace statesurf
