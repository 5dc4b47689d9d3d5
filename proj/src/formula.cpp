#include "eccad/formula.hpp"

#include <algorithm>

#include "eccad/algebra.hpp"
#include "parse_util.hpp"

namespace eccad {

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "/=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

bool relation_holds(Relation r, int s) {
  switch (r) {
    case Relation::Eq: return s == 0;
    case Relation::Ne: return s != 0;
    case Relation::Lt: return s < 0;
    case Relation::Le: return s <= 0;
    case Relation::Gt: return s > 0;
    case Relation::Ge: return s >= 0;
  }
  return false;
}

Formula Formula::atom(Polynomial p, Relation r) {
  Formula f;
  f.kind = Kind::Atom;
  f.poly = std::move(p);
  f.rel = r;
  return f;
}

Formula Formula::negation(Formula g) {
  Formula f;
  f.kind = Kind::Not;
  f.children.push_back(std::move(g));
  return f;
}

namespace {

// Builds an n-ary node, splicing in children of the same kind.
Formula flattened(Formula::Kind kind, std::vector<Formula> fs) {
  if (fs.size() == 1) return std::move(fs.front());
  Formula f;
  f.kind = kind;
  for (auto& c : fs) {
    if (c.kind == kind) {
      for (auto& g : c.children) f.children.push_back(std::move(g));
    } else {
      f.children.push_back(std::move(c));
    }
  }
  return f;
}

}  // namespace

Formula Formula::conjunction(std::vector<Formula> fs) {
  return flattened(Kind::And, std::move(fs));
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  return flattened(Kind::Or, std::move(fs));
}

Formula Formula::constant(bool value) {
  Formula f;
  f.kind = value ? Kind::True : Kind::False;
  return f;
}

std::string Formula::to_string() const {
  auto wrap = [](const Formula& c) {
    const bool compound = c.kind == Kind::And || c.kind == Kind::Or;
    return compound ? "(" + c.to_string() + ")" : c.to_string();
  };
  switch (kind) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Atom:
      return poly.to_string() + " " + std::string(relation_symbol(rel)) + " 0";
    case Kind::Not: return "~" + wrap(children[0]);
    case Kind::And:
    case Kind::Or: {
      std::string sep = kind == Kind::And ? " /\\ " : " \\/ ";
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += sep;
        out += wrap(children[i]);
      }
      return out;
    }
  }
  return "";
}

namespace {

using detail::Cursor;

class FormulaParser {
 public:
  FormulaParser(std::string_view text, OrderPtr order)
      : cur_(text), order_(std::move(order)) {}

  Formula parse() {
    Formula f = disjunction();
    cur_.skip_ws();
    if (!cur_.done()) throw ParseError("unexpected trailing input", cur_.pos);
    return f;
  }

 private:
  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (cur_.accept("\\/")) parts.push_back(conjunction());
    return Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (cur_.accept("/\\")) parts.push_back(unary());
    return Formula::conjunction(std::move(parts));
  }

  bool keyword(std::string_view word) {
    cur_.skip_ws();
    if (!cur_.starts_with(word)) return false;
    const std::size_t end = cur_.pos + word.size();
    if (end < cur_.text.size() && detail::ident_char(cur_.text[end])) return false;
    if (order_->index_of(word)) return false;
    cur_.pos = end;
    return true;
  }

  Formula unary() {
    if (cur_.accept("~")) return Formula::negation(unary());
    if (keyword("true")) return Formula::constant(true);
    if (keyword("false")) return Formula::constant(false);
    cur_.skip_ws();
    if (cur_.peek() == '(') {
      const std::size_t saved = cur_.pos;
      try {
        ++cur_.pos;
        Formula f = disjunction();
        if (cur_.accept(")")) return f;
      } catch (const ParseError&) {
      }
      cur_.pos = saved;  // a parenthesised polynomial
    }
    return atom();
  }

  Formula atom() {
    Polynomial lhs = detail::parse_sum(cur_, order_);
    cur_.skip_ws();
    const std::size_t at = cur_.pos;
    Relation rel;
    if (cur_.accept("<=")) rel = Relation::Le;
    else if (cur_.accept(">=")) rel = Relation::Ge;
    else if (cur_.accept("/=")) rel = Relation::Ne;
    else if (cur_.accept("=")) rel = Relation::Eq;
    else if (cur_.accept("<")) rel = Relation::Lt;
    else if (cur_.accept(">")) rel = Relation::Gt;
    else throw ParseError("expected relation", at);
    Polynomial rhs = detail::parse_sum(cur_, order_);
    return Formula::atom(lhs - rhs, rel);
  }

  Cursor cur_;
  OrderPtr order_;
};

void collect_atoms(const Formula& f, std::vector<Polynomial>& out) {
  if (f.kind == Formula::Kind::Atom) {
    if (!f.poly.is_constant()) out.push_back(f.poly);
    return;
  }
  for (const auto& c : f.children) collect_atoms(c, out);
}

}  // namespace

Formula parse_formula(std::string_view text, const OrderPtr& order) {
  return FormulaParser(text, order).parse();
}

bool evaluate(const Formula& f, std::span<const RealAlgebraic> point) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: return relation_holds(f.rel, sign_at(f.poly, point));
    case K::Not: return !evaluate(f.children[0], point);
    case K::And:
      return std::all_of(f.children.begin(), f.children.end(),
                         [&](const Formula& c) { return evaluate(c, point); });
    case K::Or:
      return std::any_of(f.children.begin(), f.children.end(),
                         [&](const Formula& c) { return evaluate(c, point); });
  }
  return false;
}

std::vector<Polynomial> atom_polynomials(const Formula& f) {
  std::vector<Polynomial> out;
  collect_atoms(f, out);
  canonicalize_set(out);
  return out;
}

std::vector<Polynomial> explicit_ecs(const Formula& f) {
  std::vector<Polynomial> out;
  auto take = [&](const Formula& g) {
    if (g.kind == Formula::Kind::Atom && g.rel == Relation::Eq &&
        !g.poly.is_constant())
      out.push_back(g.poly);
  };
  if (f.kind == Formula::Kind::And)
    for (const auto& c : f.children) take(c);
  else
    take(f);
  canonicalize_set(out);
  return out;
}

}  // namespace eccad
