#include "qalg/expr.hpp"

#include <cctype>
#include <string>

#include "qalg/algebra.hpp"
#include "qalg/errors.hpp"

namespace qalg {

namespace {

// Recursive-descent parser. Every helper leaves pos at the first
// character it did not consume; whitespace is skipped on demand.
struct Parser {
  const std::string& text;
  const int n;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& msg, size_t at) const {
    fail(ErrCode::syntax_error,
         msg + " at position " + std::to_string(at));
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) err(std::string("expected '") + c + "'", pos);
  }

  long digits() {
    skip_ws();
    const size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) err("expected a number", start);
    if (pos - start > 9) err("number too long", start);
    return std::stol(text.substr(start, pos - start));
  }

  long signed_integer() {
    skip_ws();
    const bool neg = eat('-');
    const long v = digits();
    return neg ? -v : v;
  }

  GLElem expression() {
    GLElem acc = eat('-') ? -term() : term();
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  GLElem term() {
    GLElem acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  enum class AtomKind { general, q_symbol, detq_symbol };

  GLElem factor() {
    auto [kind, base] = atom();
    if (!eat('^')) return base;
    const size_t at = pos;
    const long k = signed_integer();
    switch (kind) {
      case AtomKind::q_symbol:
        return GLElem::unit(n).scale(QScalar::q_power(k, n));
      case AtomKind::detq_symbol:
        return GLElem::det_power_elem(n, static_cast<int>(k));
      case AtomKind::general:
        if (k < 0)
          fail(ErrCode::negative_power_of_generator,
               "negative exponents are allowed only on detq and q "
               "(position " + std::to_string(at) + ")");
        GLElem p = GLElem::unit(n);
        for (long t = 0; t < k; ++t) p = p * base;
        return p;
    }
    err("unreachable", at);
  }

  std::pair<AtomKind, GLElem> atom() {
    const char c = peek();
    if (c == '(') {
      ++pos;
      GLElem inner = expression();
      expect(')');
      return {AtomKind::general, inner};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long num = digits();
      long den = 1;
      if (eat('/')) {
        const size_t at = pos;
        den = digits();
        if (den == 0) err("zero denominator", at);
      }
      mpq_class r(num, den);
      r.canonicalize();
      return {AtomKind::general, GLElem::unit(n).scale(QScalar::rational(r))};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const size_t start = pos;
      while (pos < text.size() &&
             std::isalpha(static_cast<unsigned char>(text[pos])))
        ++pos;
      const std::string name = text.substr(start, pos - start);
      if (name == "q") return {AtomKind::q_symbol, GLElem::unit(n).scale(QScalar::q_power(1, n))};
      if (name == "detq") return {AtomKind::detq_symbol, GLElem::det_power_elem(n, 1)};
      if (name == "x") {
        expect('[');
        const long i = digits();
        expect(',');
        const long j = digits();
        expect(']');
        check_index(n, static_cast<int>(i), static_cast<int>(j));
        return {AtomKind::general,
                GLElem::generator(n, static_cast<int>(i), static_cast<int>(j))};
      }
      err("unknown identifier '" + name + "'", start);
    }
    err("expected an expression", pos);
  }
};

}  // namespace

GLElem parse_expr(const std::string& text, int n) {
  if (n < 1) fail(ErrCode::bad_argument, "matrix size must be positive");
  Parser p{text, n};
  GLElem v = p.expression();
  p.skip_ws();
  if (p.pos != text.size()) p.err("unexpected trailing input", p.pos);
  return v;
}

}  // namespace qalg
