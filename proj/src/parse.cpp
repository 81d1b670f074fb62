#include <cctype>
#include <optional>

#include "arith/ast.hpp"

namespace arith {
namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : src_(s) {}

  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip();
    return pos_ == src_.size();
  }

  bool accept(std::string_view tok) {
    skip();
    if (src_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, pos_);
  }

  std::optional<VarIndex> try_var() {
    skip();
    if (pos_ + 1 < src_.size() && src_[pos_] == 'v' &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      ++pos_;
      std::uint64_t v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
        if (v > 0xFFFFFFFFull) fail("variable index too large");
        ++pos_;
      }
      return static_cast<VarIndex>(v);
    }
    return std::nullopt;
  }

  VarIndex var() {
    auto v = try_var();
    if (!v) fail("expected variable");
    return *v;
  }

  Term term() {
    skip();
    if (accept("0")) return Term::zero();
    if (accept("1")) return Term::one();
    if (auto v = try_var()) return Term::var(*v);
    if (accept("(")) {
      Term l = term();
      bool plus;
      if (accept("+")) plus = true;
      else if (accept("*")) plus = false;
      else fail("expected '+' or '*'");
      Term r = term();
      expect(")");
      return plus ? Term::add(l, r) : Term::mul(l, r);
    }
    fail("expected term");
  }

  Formula formula() {
    skip();
    if (accept("~")) return Formula::negation(formula());
    if (!accept("(")) fail("expected formula");
    skip();
    // Quantifier prefix: "(A v.." / "(E v.."
    const std::size_t qpos = pos_;
    if (accept("A") || accept("E")) {
      const bool universal = src_[qpos] == 'A';
      const VarIndex v = var();
      if (accept(")")) {
        Formula body = formula();
        return universal ? Formula::uforall(v, body) : Formula::uexists(v, body);
      }
      expect("<=");
      Term b = term();
      expect(")");
      Formula body = formula();
      try {
        return universal ? Formula::bforall(v, b, body) : Formula::bexists(v, b, body);
      } catch (const Error& e) {
        throw ParseError(e.what(), qpos);
      }
    }
    // Atomic: "(term = term)" / "(term <= term)"; otherwise a binary connective.
    const std::size_t after_paren = pos_;
    std::optional<ParseError> atom_err;
    try {
      Term l = term();
      bool eq;
      if (accept("=")) eq = true;
      else if (accept("<=")) eq = false;
      else fail("expected '=' or '<='");
      Term r = term();
      expect(")");
      return eq ? Formula::eq(l, r) : Formula::le(l, r);
    } catch (const ParseError& e) {
      atom_err = e;
    }
    reset(after_paren);
    try {
      Formula a = formula();
      Formula::Kind k;
      if (accept("->")) k = Formula::Kind::Implies;
      else if (accept("&")) k = Formula::Kind::And;
      else if (accept("|")) k = Formula::Kind::Or;
      else fail("expected '->', '&' or '|'");
      Formula b = formula();
      expect(")");
      if (k == Formula::Kind::Implies) return Formula::implies(a, b);
      if (k == Formula::Kind::And) return Formula::conj(a, b);
      return Formula::disj(a, b);
    } catch (const ParseError& e) {
      // Report whichever reading got further.
      if (atom_err && atom_err->position > e.position) throw *atom_err;
      throw;
    }
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  if (!p.at_end()) p.fail("trailing input");
  return f;
}

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  if (!p.at_end()) p.fail("trailing input");
  return t;
}

Syntax parse(std::string_view text) {
  try {
    return parse_formula(text);
  } catch (const ParseError& fe) {
    try {
      return parse_term(text);
    } catch (const ParseError& te) {
      if (te.position > fe.position) throw;
      throw fe;
    }
  }
}

}  // namespace arith
