#include "psqm/ham_parser.hpp"

#include <cctype>
#include <map>

namespace psqm {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  int dim;
  std::map<std::string, int> vars;

  explicit Parser(const std::string& src, int d) : s(src), dim(d) {
    if (d == 1) {
      vars = {{"q", 0}, {"p", 1}};
    } else if (d == 2) {
      vars = {{"x", 0}, {"y", 1}, {"px", 2}, {"py", 3}};
    } else {
      throw std::invalid_argument("parse_hamiltonian: dim must be 1 or 2");
    }
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse_hamiltonian: " + what + " at position " +
                                std::to_string(pos) + " in \"" + s + "\"");
  }

  Int read_digits() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    return Int(s.substr(start, pos - start));
  }

  PolynomialSymbol number() {
    Int whole = read_digits();
    Rat value(whole);
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      std::size_t start = pos;
      Int frac = read_digits();
      Rat scale = rat_pow(Rat(10), static_cast<int>(pos - start));
      value += Rat(frac) / scale;
    } else if (peek() == '/') {
      ++pos;
      skip_ws();
      Int den = read_digits();
      if (den == 0) fail("zero denominator");
      value /= Rat(den);
    }
    return PolynomialSymbol::constant(dim, CScalar(value));
  }

  PolynomialSymbol atom() {
    skip_ws();
    if (eat('(')) {
      PolynomialSymbol e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() &&
             std::isalpha(static_cast<unsigned char>(s[pos])))
        ++pos;
      std::string name = s.substr(start, pos - start);
      auto it = vars.find(name);
      if (it == vars.end()) fail("unknown variable '" + name + "'");
      return PolynomialSymbol::variable(dim, it->second);
    }
    fail("expected number, variable, or '('");
  }

  PolynomialSymbol factor() {
    if (eat('-')) return -factor();
    PolynomialSymbol a = atom();
    if (eat('^')) {
      skip_ws();
      Int e = read_digits();
      if (e > 64) fail("exponent too large");
      int n = static_cast<int>(e);
      PolynomialSymbol r = PolynomialSymbol::constant(dim, CScalar(1));
      for (int k = 0; k < n; ++k) r = r * a;
      return r;
    }
    return a;
  }

  // digits with an optional decimal part; used on the right of '/'
  Rat divisor() {
    skip_ws();
    Int whole = read_digits();
    Rat value(whole);
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      std::size_t start = pos;
      Int frac = read_digits();
      value += Rat(frac) / rat_pow(Rat(10), static_cast<int>(pos - start));
    }
    if (value == 0) fail("division by zero");
    return value;
  }

  PolynomialSymbol term() {
    PolynomialSymbol r = factor();
    for (;;) {
      if (eat('*'))
        r = r * factor();
      else if (eat('/'))
        r = CScalar(Rat(1) / divisor()) * r;
      else
        return r;
    }
  }

  PolynomialSymbol expr() {
    PolynomialSymbol r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
};

}  // namespace

PolynomialSymbol parse_hamiltonian(const std::string& src, int dim) {
  Parser p(src, dim);
  PolynomialSymbol r = p.expr();
  p.skip_ws();
  if (p.pos != src.size()) p.fail("trailing input");
  return r;
}

}  // namespace psqm
