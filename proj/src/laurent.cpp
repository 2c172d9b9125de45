#include "quiverlab/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

void require_same_nvars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorKind::DimensionMismatch, "Laurent polynomials in " +
                                                  std::to_string(a.nvars()) + " and " +
                                                  std::to_string(b.nvars()) + " variables");
}

std::int64_t degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

bool GradedLexDescending::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Integer& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  if (i == 0 || i > nvars)
    throw Error(ErrorKind::BadLabel, "variable x" + std::to_string(i) + " out of range");
  Exponent e(nvars, 0);
  e[i - 1] = 1;
  return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Integer& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Exponent LaurentPoly::min_exponents() const {
  Exponent out(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) out[i] = first ? e[i] : std::min(out[i], e[i]);
    first = false;
  }
  return out;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent out(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) out[i] = first ? e[i] : std::max(out[i], e[i]);
    first = false;
  }
  return out;
}

bool LaurentPoly::is_polynomial() const {
  const auto lo = min_exponents();
  return std::all_of(lo.begin(), lo.end(), [](auto v) { return v >= 0; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_nvars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_nvars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out(a.nvars());
  for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_nvars(a, b);
  LaurentPoly out(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term(add(ea, eb), ca * cb);
  return out;
}

LaurentPoly shift(const LaurentPoly& p, const Exponent& by) {
  if (by.size() != p.nvars()) throw Error(ErrorKind::DimensionMismatch, "shift length");
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(add(e, by), c);
  return out;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result = LaurentPoly::constant(p.nvars(), 1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  require_same_nvars(num, den);
  if (den.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
  const std::size_t n = num.nvars();
  if (num.is_zero()) return LaurentPoly(n);

  // Clear monomial denominators.  The shifted divisor has no monomial factor,
  // so an exact Laurent quotient of the shifted operands is a polynomial.
  Exponent num_shift = num.min_exponents();
  Exponent den_shift = den.min_exponents();
  for (auto& v : num_shift) v = -v;
  for (auto& v : den_shift) v = -v;
  LaurentPoly remainder = shift(num, num_shift);
  const LaurentPoly divisor = shift(den, den_shift);

  const auto& [lead_exp, lead_coef] = *divisor.terms().begin();
  LaurentPoly quotient(n);
  while (!remainder.is_zero()) {
    const auto& [rexp, rcoef] = *remainder.terms().begin();
    Exponent q_exp(n);
    for (std::size_t i = 0; i < n; ++i) {
      q_exp[i] = rexp[i] - lead_exp[i];
      if (q_exp[i] < 0) throw Error(ErrorKind::NotDivisible, "leading term not divisible");
    }
    if (rcoef % lead_coef != 0)
      throw Error(ErrorKind::NotDivisible, "leading coefficient not divisible");
    const Integer q_coef = rcoef / lead_coef;
    quotient.add_term(q_exp, q_coef);
    for (const auto& [e, c] : divisor.terms()) remainder.add_term(add(e, q_exp), -(c * q_coef));
  }

  Exponent back(n);
  for (std::size_t i = 0; i < n; ++i) back[i] = den_shift[i] - num_shift[i];
  return shift(quotient, back);
}

Rational evaluate(const LaurentPoly& p, std::span<const Rational> point) {
  if (point.size() != p.nvars())
    throw Error(ErrorKind::DimensionMismatch, "evaluation point length");
  for (const auto& v : point)
    if (v == 0) throw Error(ErrorKind::ZeroCoordinate, "evaluation point has a zero coordinate");
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Rational base = e[i] >= 0 ? point[i] : Rational(1) / point[i];
      for (std::int32_t k = 0; k < std::abs(e[i]); ++k) term *= base;
    }
    total += term;
  }
  return total;
}

Rational evaluate_at_ones(const LaurentPoly& p) {
  Integer total = 0;
  for (const auto& [e, c] : p.terms()) total += c;
  return Rational(total);
}

Fraction split_fraction(const LaurentPoly& p) {
  Exponent den = p.min_exponents();
  for (auto& v : den) v = v < 0 ? -v : 0;
  return {shift(p, den), den};
}

bool has_positive_coefficients(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& term) { return term.second > 0; });
}

namespace {

// "x1^2*x3" for the monomial part; empty for the constant monomial.
std::string render_monomial(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string render_flat(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = render_monomial(e);
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::string render(const LaurentPoly& p, RenderStyle style) {
  if (style == RenderStyle::Flat || p.is_zero()) return render_flat(p);
  const Fraction f = split_fraction(p);
  const std::string den = render_monomial(f.denominator);
  std::string num = render_flat(f.numerator);
  if (den.empty()) return num;
  if (f.numerator.size() > 1) num = '(' + num + ')';
  const auto factors = std::count_if(f.denominator.begin(), f.denominator.end(),
                                     [](auto v) { return v != 0; });
  return num + '/' + (factors > 1 ? '(' + den + ')' : den);
}

namespace {

struct Token {
  enum class Kind { Number, Variable, Op, End } kind;
  std::size_t pos;
  Integer number;
  std::size_t var = 0;
  char op = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Kind::Number, start, Integer(std::string(text.substr(start, i - start)))});
    } else if (ch == 'x') {
      const std::size_t start = i++;
      const std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw ParseError(start, "expected variable index after 'x'");
      const auto index = std::stoul(std::string(text.substr(digits, i - digits)));
      if (index == 0) throw ParseError(start, "variable indices start at 1");
      out.push_back({Token::Kind::Variable, start, 0, index});
    } else if (std::string_view("+-*/^()").find(ch) != std::string_view::npos) {
      out.push_back({Token::Kind::Op, i, 0, 0, ch});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::Kind::End, text.size(), 0, 0});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t nvars) : tokens_(std::move(tokens)), n_(nvars) {}

  LaurentPoly parse() {
    LaurentPoly value = expression();
    if (peek().kind != Token::Kind::End) throw ParseError(peek().pos, "unexpected trailing input");
    return value;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_op(char op) const { return peek().kind == Token::Kind::Op && peek().op == op; }

  LaurentPoly expression() {
    LaurentPoly value(n_);
    bool negate = false;
    if (at_op('-') || at_op('+')) {
      negate = at_op('-');
      ++pos_;
    }
    value = term();
    if (negate) value = -value;
    while (at_op('+') || at_op('-')) {
      const bool minus = at_op('-');
      ++pos_;
      const LaurentPoly rhs = term();
      value = minus ? value - rhs : value + rhs;
    }
    return value;
  }

  bool starts_factor() const {
    const auto& t = peek();
    return t.kind == Token::Kind::Number || t.kind == Token::Kind::Variable ||
           (t.kind == Token::Kind::Op && t.op == '(');
  }

  LaurentPoly term() {
    LaurentPoly value = power();
    while (true) {
      if (at_op('*')) {
        ++pos_;
        value = value * power();
      } else if (at_op('/')) {
        const std::size_t at = peek().pos;
        ++pos_;
        const LaurentPoly rhs = power();
        if (rhs.is_zero()) throw ParseError(at, "division by zero");
        value = divide_exact(value, rhs);
      } else if (starts_factor()) {
        value = value * power();
      } else {
        return value;
      }
    }
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (!at_op('^')) return base;
    ++pos_;
    bool negative = false;
    if (at_op('-')) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Token::Kind::Number) throw ParseError(peek().pos, "expected exponent");
    const unsigned k = peek().number.convert_to<unsigned>();
    const std::size_t at = peek().pos;
    ++pos_;
    LaurentPoly raised = pow(base, k);
    if (!negative) return raised;
    if (base.is_zero()) throw ParseError(at, "negative power of zero");
    return divide_exact(LaurentPoly::constant(n_, 1), raised);
  }

  LaurentPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Number:
        ++pos_;
        return LaurentPoly::constant(n_, t.number);
      case Token::Kind::Variable:
        ++pos_;
        return LaurentPoly::variable(n_, t.var);
      case Token::Kind::Op:
        if (t.op == '(') {
          ++pos_;
          LaurentPoly inner = expression();
          if (!at_op(')')) throw ParseError(peek().pos, "expected ')'");
          ++pos_;
          return inner;
        }
        throw ParseError(t.pos, std::string("unexpected '") + t.op + "'");
      case Token::Kind::End:
        break;
    }
    throw ParseError(t.pos, "unexpected end of input");
  }

  std::vector<Token> tokens_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::optional<std::size_t> nvars) {
  auto tokens = tokenize(text);
  std::size_t max_index = 1;
  for (const auto& t : tokens) {
    if (t.kind != Token::Kind::Variable) continue;
    if (nvars && t.var > *nvars)
      throw ParseError(t.pos, "variable x" + std::to_string(t.var) + " exceeds " +
                                  std::to_string(*nvars) + " variables");
    max_index = std::max(max_index, t.var);
  }
  return Parser(std::move(tokens), nvars.value_or(max_index)).parse();
}

}  // namespace quiverlab
