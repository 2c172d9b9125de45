#pragma once

// Integer Laurent polynomials in n commuting variables x1..xn.
//
// Terms are kept in a map ordered graded-lexicographically, leading term
// first, with zero coefficients never stored.  Every cluster variable and
// cluster character in the library is a value of this type.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/errors.hpp"
#include "quiverlab/linalg.hpp"

namespace quiverlab {

using Exponent = std::vector<std::int32_t>;

// Strict order placing the graded-lex larger exponent first: higher total
// degree wins, ties broken by the first differing entry (x1 before x2 ...).
struct GradedLexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer, GradedLexDescending>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c);
  // x_i with 1-based index i.
  static LaurentPoly variable(std::size_t nvars, std::size_t i);
  static LaurentPoly monomial(const Exponent& e, const Integer& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Integer& c);

  // Componentwise minimum of all exponents (zero vector for the zero poly).
  Exponent min_exponents() const;
  // Componentwise maximum of all exponents.
  Exponent max_exponents() const;

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_polynomial() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

// Multiplies by the monomial x^shift.
LaurentPoly shift(const LaurentPoly& p, const Exponent& shift);

LaurentPoly pow(const LaurentPoly& p, unsigned k);

// Returns q with q * den == num.  Throws NotDivisible when no such Laurent
// polynomial exists.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Value at a point with no zero coordinate.
Rational evaluate(const LaurentPoly& p, std::span<const Rational> point);
Rational evaluate_at_ones(const LaurentPoly& p);

// p == numerator / x^denominator with numerator a polynomial not divisible by
// any x_i that occurs in the denominator.
struct Fraction {
  LaurentPoly numerator;
  Exponent denominator;
};
Fraction split_fraction(const LaurentPoly& p);

// True when every coefficient is a positive integer.
bool has_positive_coefficients(const LaurentPoly& p);

enum class RenderStyle {
  Flat,     // "x1^-1*x2*x3 + x1^-1"
  Display,  // "(x2*x3 + 1)/x1"
};

std::string render(const LaurentPoly& p, RenderStyle style = RenderStyle::Display);

// Parses signed integers, x<i> factors, + - * / ^ and parentheses.  Division
// must be exact.  When nvars is omitted it is the largest index used (at
// least 1).
LaurentPoly parse_laurent(std::string_view text, std::optional<std::size_t> nvars = {});

}  // namespace quiverlab
