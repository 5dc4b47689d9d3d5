// Shared recursive-descent helpers for polynomial and formula text.

#ifndef ECCAD_SRC_PARSE_UTIL_HPP
#define ECCAD_SRC_PARSE_UTIL_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "eccad/polynomial.hpp"

namespace eccad::detail {

struct Cursor {
  explicit Cursor(std::string_view t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool starts_with(std::string_view s) const {
    return text.substr(pos).starts_with(s);
  }
  bool accept(std::string_view s) {
    skip_ws();
    if (!starts_with(s)) return false;
    pos += s.size();
    return true;
  }

  std::string_view text;
  std::size_t pos = 0;
};

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline Integer parse_integer(Cursor& cur) {
  cur.skip_ws();
  const std::size_t start = cur.pos;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  if (start == cur.pos) throw ParseError("expected integer", start);
  return Integer(std::string(cur.text.substr(start, cur.pos - start)));
}

Polynomial parse_sum(Cursor& cur, const OrderPtr& order);

inline Polynomial parse_primary(Cursor& cur, const OrderPtr& order) {
  cur.skip_ws();
  const char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(order, parse_integer(cur));
  if (ident_start(c)) {
    const std::size_t start = cur.pos;
    while (!cur.done() && ident_char(cur.peek())) ++cur.pos;
    const std::string name(cur.text.substr(start, cur.pos - start));
    auto idx = order->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'", start);
    return Polynomial::variable(order, *idx);
  }
  if (c == '(') {
    ++cur.pos;
    Polynomial p = parse_sum(cur, order);
    if (!cur.accept(")")) throw ParseError("expected ')'", cur.pos);
    return p;
  }
  if (cur.done()) throw ParseError("unexpected end of input", cur.pos);
  throw ParseError(std::string("unexpected character '") + c + "'", cur.pos);
}

inline Polynomial parse_power(Cursor& cur, const OrderPtr& order) {
  Polynomial base = parse_primary(cur, order);
  if (cur.accept("^")) {
    const std::size_t at = cur.pos;
    Integer e = parse_integer(cur);
    if (e > 10000) throw ParseError("exponent too large", at);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }
  return base;
}

inline bool factor_start(const Cursor& cur) {
  const char c = cur.peek();
  return std::isdigit(static_cast<unsigned char>(c)) || ident_start(c) || c == '(';
}

inline Polynomial parse_product(Cursor& cur, const OrderPtr& order) {
  Polynomial p = parse_power(cur, order);
  for (;;) {
    cur.skip_ws();
    if (cur.peek() == '*') {
      ++cur.pos;
      p *= parse_power(cur, order);
    } else if (factor_start(cur)) {
      p *= parse_power(cur, order);
    } else {
      return p;
    }
  }
}

inline Polynomial parse_sum(Cursor& cur, const OrderPtr& order) {
  cur.skip_ws();
  bool negate = false;
  if (cur.peek() == '-') {
    negate = true;
    ++cur.pos;
  } else if (cur.peek() == '+') {
    ++cur.pos;
  }
  Polynomial p = parse_product(cur, order);
  if (negate) p = -p;
  for (;;) {
    cur.skip_ws();
    const char c = cur.peek();
    if (c == '+') {
      ++cur.pos;
      p += parse_product(cur, order);
    } else if (c == '-') {
      ++cur.pos;
      p -= parse_product(cur, order);
    } else {
      return p;
    }
  }
}

}  // namespace eccad::detail

#endif  // ECCAD_SRC_PARSE_UTIL_HPP
