#include <algorithm>
#include <set>

#include "arith/coding.hpp"
#include "bytes.hpp"

namespace arith {

using detail::Bytes;
using detail::from_bytes;
using detail::to_bytes;

unsigned symbol_code(Scheme s, Sym sym) {
  const auto k = static_cast<unsigned>(sym);
  // Zero One [Var] Add Mul Eq Le Not Imp All -> 1 3 5 7 9 11 13 15 17 (compact: bytes 2..10, Var 11)
  const unsigned slot = k > static_cast<unsigned>(Sym::Var) ? k - 1 : k;
  if (s == Scheme::Compact) return sym == Sym::Var ? 11 : slot + 2;
  if (sym == Sym::Var) throw Error("variables have no fixed symbol code under the paper scheme");
  return 2 * slot + 1;
}

Natural var_code(Scheme s, VarIndex i) {
  if (s == Scheme::Paper) return 2 * nat(i) + 2;
  if (i > 255) throw Error("compact coding supports variables v0..v255 only");
  return nat(11 * 256 + i);
}

std::optional<VarIndex> var_of(Scheme s, const Natural& c) {
  if (s == Scheme::Paper) {
    if (c < 2 || mpz_odd_p(c.get_mpz_t())) return std::nullopt;
    const Natural i = (c - 2) / 2;
    if (i > 0xFFFFFFFFu) return std::nullopt;
    return static_cast<VarIndex>(to_u64(i));
  }
  if (c < 2816 || c > 3071) return std::nullopt;
  return static_cast<VarIndex>(to_u64(c) - 2816);
}

namespace {

std::optional<Sym> sym_of(Scheme s, std::uint64_t code) {
  for (int k = 0; k <= static_cast<int>(Sym::All); ++k) {
    const auto sym = static_cast<Sym>(k);
    if (s == Scheme::Paper && sym == Sym::Var) continue;
    if (symbol_code(s, sym) == code) return sym;
  }
  return std::nullopt;
}

std::size_t arity_of(Sym op) {
  switch (op) {
    case Sym::Not: return 1;
    case Sym::All: return 3;
    case Sym::Zero:
    case Sym::One:
    case Sym::Var: return 0;
    default: return 2;
  }
}

// ---- compact byte streams ----

void put_term(Bytes& out, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: out.push_back(2); return;
    case Term::Kind::One: out.push_back(3); return;
    case Term::Kind::Var:
      if (t.var_index() > 255) throw Error("compact coding supports variables v0..v255 only");
      out.push_back(11);
      out.push_back(static_cast<std::uint8_t>(t.var_index()));
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out.push_back(t.kind() == Term::Kind::Add ? 4 : 5);
      put_term(out, t.left());
      put_term(out, t.right());
      return;
  }
}

void put_formula(Bytes& out, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Le:
      out.push_back(f.kind() == K::Eq ? 6 : 7);
      put_term(out, f.lhs());
      put_term(out, f.rhs());
      return;
    case K::Not:
      out.push_back(8);
      put_formula(out, f.sub());
      return;
    case K::Implies:
      out.push_back(9);
      put_formula(out, f.first());
      put_formula(out, f.second());
      return;
    case K::BForall:
      out.push_back(10);
      put_term(out, Term::var(f.var()));
      put_term(out, f.bound());
      put_formula(out, f.body());
      return;
    default: throw Error("only the {~, ->, bounded A} core can be coded: " + print(f));
  }
}

class ByteReader {
public:
  explicit ByteReader(Bytes b) : b_(std::move(b)) {}

  Syntax expr() {
    const std::size_t at = pos_;
    const std::uint8_t op = next();
    switch (op) {
      case 2: return Term::zero();
      case 3: return Term::one();
      case 11: return Term::var(next());
      case 4:
      case 5: {
        Term l = term(), r = term();
        return op == 4 ? Term::add(l, r) : Term::mul(l, r);
      }
      case 6:
      case 7: {
        Term l = term(), r = term();
        return op == 6 ? Formula::eq(l, r) : Formula::le(l, r);
      }
      case 8: return Formula::negation(formula());
      case 9: {
        Formula a = formula(), b = formula();
        return Formula::implies(a, b);
      }
      case 10: {
        const std::size_t vpos = pos_;
        if (next() != 11) throw DecodeError("expected a variable after the quantifier", vpos);
        const VarIndex v = next();
        Term t = term();
        Formula body = formula();
        try {
          return Formula::bforall(v, t, body);
        } catch (const Error&) {
          throw DecodeError("quantified variable occurs in its bound", at);
        }
      }
      default: throw DecodeError("unknown symbol byte " + std::to_string(op), at);
    }
  }

  Term term() {
    const std::size_t at = pos_;
    Syntax x = expr();
    if (auto* t = std::get_if<Term>(&x)) return *t;
    throw DecodeError("expected a term", at);
  }

  Formula formula() {
    const std::size_t at = pos_;
    Syntax x = expr();
    if (auto* f = std::get_if<Formula>(&x)) return *f;
    throw DecodeError("expected a formula", at);
  }

  void finish() const {
    if (pos_ != b_.size()) throw DecodeError("trailing bytes", pos_);
  }

private:
  std::uint8_t next() {
    if (pos_ >= b_.size()) throw DecodeError("code ends early", pos_);
    return b_[pos_++];
  }
  Bytes b_;
  std::size_t pos_ = 0;
};

// ---- paper codes ----

Natural paper_compose(Sym op, const std::vector<Natural>& parts) {
  std::vector<Natural> xs{nat(symbol_code(Scheme::Paper, op))};
  xs.insert(xs.end(), parts.begin(), parts.end());
  return 2 * seq_encode(Scheme::Paper, xs) + 1;
}

Natural paper_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 1;
    case Term::Kind::One: return 3;
    case Term::Kind::Var: return var_code(Scheme::Paper, t.var_index());
    case Term::Kind::Add: return paper_compose(Sym::Add, {paper_term(t.left()), paper_term(t.right())});
    case Term::Kind::Mul: return paper_compose(Sym::Mul, {paper_term(t.left()), paper_term(t.right())});
  }
  return 0;
}

Natural paper_formula(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: return paper_compose(Sym::Eq, {paper_term(f.lhs()), paper_term(f.rhs())});
    case K::Le: return paper_compose(Sym::Le, {paper_term(f.lhs()), paper_term(f.rhs())});
    case K::Not: return paper_compose(Sym::Not, {paper_formula(f.sub())});
    case K::Implies: return paper_compose(Sym::Imp, {paper_formula(f.first()), paper_formula(f.second())});
    case K::BForall:
      return paper_compose(Sym::All, {var_code(Scheme::Paper, f.var()), paper_term(f.bound()), paper_formula(f.body())});
    default: throw Error("only the {~, ->, bounded A} core can be coded: " + print(f));
  }
}

class PaperReader {
public:
  Syntax expr(const Natural& c) {
    const std::size_t at = node_++;
    if (c == 1) return Term::zero();
    if (c == 3) return Term::one();
    if (auto v = var_of(Scheme::Paper, c)) return Term::var(*v);
    if (c < 5) throw DecodeError("not an expression code", at);
    auto xs = seq_decode(Scheme::Paper, (c - 1) / 2);
    if (!xs || xs->empty() || !fits_u64(xs->front())) throw DecodeError("not a sequence of symbol and parts", at);
    const auto op = sym_of(Scheme::Paper, to_u64(xs->front()));
    if (!op || arity_of(*op) == 0 || arity_of(*op) + 1 != xs->size())
      throw DecodeError("bad symbol or part count", at);
    const auto& p = *xs;
    switch (*op) {
      case Sym::Add: {
        Term l = term(p[1]), r = term(p[2]);
        return Term::add(l, r);
      }
      case Sym::Mul: {
        Term l = term(p[1]), r = term(p[2]);
        return Term::mul(l, r);
      }
      case Sym::Eq: {
        Term l = term(p[1]), r = term(p[2]);
        return Formula::eq(l, r);
      }
      case Sym::Le: {
        Term l = term(p[1]), r = term(p[2]);
        return Formula::le(l, r);
      }
      case Sym::Not: return Formula::negation(formula(p[1]));
      case Sym::Imp: {
        Formula a = formula(p[1]), b = formula(p[2]);
        return Formula::implies(a, b);
      }
      case Sym::All: {
        auto v = var_of(Scheme::Paper, p[1]);
        if (!v) throw DecodeError("expected a variable after the quantifier", node_);
        ++node_;
        Term t = term(p[2]);
        Formula body = formula(p[3]);
        try {
          return Formula::bforall(*v, t, body);
        } catch (const Error&) {
          throw DecodeError("quantified variable occurs in its bound", at);
        }
      }
      default: throw DecodeError("bad symbol", at);
    }
  }

  Term term(const Natural& c) {
    const std::size_t at = node_;
    Syntax x = expr(c);
    if (auto* t = std::get_if<Term>(&x)) return *t;
    throw DecodeError("expected a term", at);
  }

  Formula formula(const Natural& c) {
    const std::size_t at = node_;
    Syntax x = expr(c);
    if (auto* f = std::get_if<Formula>(&x)) return *f;
    throw DecodeError("expected a formula", at);
  }

private:
  std::size_t node_ = 0;
};

}  // namespace

Natural encode(Scheme s, const Term& t) {
  if (s == Scheme::Paper) return paper_term(t);
  Bytes b;
  put_term(b, t);
  return from_bytes(b);
}

Natural encode(Scheme s, const Formula& f) {
  const Formula core = desugar(f);
  if (s == Scheme::Paper) return paper_formula(core);
  Bytes b;
  put_formula(b, core);
  return from_bytes(b);
}

Natural encode(Scheme s, const Syntax& x) {
  return std::visit([&](const auto& v) { return encode(s, v); }, x);
}

Syntax decode(Scheme s, const Natural& c) {
  if (s == Scheme::Paper) {
    PaperReader r;
    return r.expr(c);
  }
  ByteReader r(to_bytes(c));
  Syntax x = r.expr();
  r.finish();
  return x;
}

Term decode_term(Scheme s, const Natural& c) {
  Syntax x = decode(s, c);
  if (auto* t = std::get_if<Term>(&x)) return *t;
  throw DecodeError("code is a formula, not a term", 0);
}

Formula decode_formula(Scheme s, const Natural& c) {
  Syntax x = decode(s, c);
  if (auto* f = std::get_if<Formula>(&x)) return *f;
  throw DecodeError("code is a term, not a formula", 0);
}

std::vector<Split> splits(Scheme s, const Natural& c) {
  std::vector<Split> out;
  if (s == Scheme::Paper) {
    if (c < 5 || !mpz_odd_p(c.get_mpz_t())) return out;
    auto xs = seq_decode(Scheme::Paper, (c - 1) / 2);
    if (!xs || xs->empty() || !fits_u64(xs->front())) return out;
    const auto op = sym_of(Scheme::Paper, to_u64(xs->front()));
    if (!op || arity_of(*op) == 0 || arity_of(*op) + 1 != xs->size()) return out;
    out.push_back(Split{*op, std::vector<Natural>(xs->begin() + 1, xs->end())});
    return out;
  }
  const Bytes b = to_bytes(c);
  if (b.empty()) return out;
  const auto op = sym_of(Scheme::Compact, b[0]);
  if (!op || *op == Sym::Var || arity_of(*op) == 0) return out;
  const std::size_t n = b.size();
  auto part = [&](std::size_t from, std::size_t to) { return from_bytes(b.data() + from, to - from); };
  auto ok = [&](std::size_t from, std::size_t to) { return to > from && b[from] != 0; };
  if (*op == Sym::Not) {
    if (ok(1, n)) out.push_back(Split{*op, {part(1, n)}});
    return out;
  }
  if (*op == Sym::All) {
    for (std::size_t i = 2; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (ok(1, i) && ok(i, j) && ok(j, n)) out.push_back(Split{*op, {part(1, i), part(i, j), part(j, n)}});
    return out;
  }
  for (std::size_t i = 2; i < n; ++i)
    if (ok(1, i) && ok(i, n)) out.push_back(Split{*op, {part(1, i), part(i, n)}});
  return out;
}

Natural compose(Scheme s, Sym op, const std::vector<Natural>& parts) {
  if (parts.size() != arity_of(op)) throw Error("wrong number of parts for symbol");
  if (s == Scheme::Paper) return paper_compose(op, parts);
  Bytes b{static_cast<std::uint8_t>(symbol_code(s, op))};
  for (const auto& p : parts) {
    const Bytes pb = to_bytes(p);
    b.insert(b.end(), pb.begin(), pb.end());
  }
  return from_bytes(b);
}

SynPred parse_synpred(std::string_view s) {
  if (s == "var") return SynPred::Var;
  if (s == "trm") return SynPred::Trm;
  if (s == "atm") return SynPred::Atm;
  if (s == "fml" || s == "fml_delta0") return SynPred::Fml;
  throw Error("unknown syntactic predicate '" + std::string(s) + "'");
}

std::string to_string(SynPred p) {
  switch (p) {
    case SynPred::Var: return "var";
    case SynPred::Trm: return "trm";
    case SynPred::Atm: return "atm";
    case SynPred::Fml: return "fml_delta0";
  }
  return {};
}

bool syn(Scheme s, SynPred p, const Natural& c) {
  if (p == SynPred::Var) return var_of(s, c).has_value();
  try {
    Syntax x = decode(s, c);
    if (p == SynPred::Trm) return std::holds_alternative<Term>(x);
    const auto* f = std::get_if<Formula>(&x);
    return f && (p == SynPred::Fml || f->is_atomic());
  } catch (const DecodeError&) {
    return false;
  }
}

namespace {

void collect(Scheme s, const Term& t, std::vector<Natural>& out, std::set<Natural>& seen) {
  if (t.kind() == Term::Kind::Add || t.kind() == Term::Kind::Mul) {
    collect(s, t.left(), out, seen);
    collect(s, t.right(), out, seen);
  }
  Natural c = encode(s, t);
  if (seen.insert(c).second) out.push_back(std::move(c));
}

void collect(Scheme s, const Formula& f, std::vector<Natural>& out, std::set<Natural>& seen) {
  switch (f.kind()) {
    case Formula::Kind::Not: collect(s, f.sub(), out, seen); break;
    case Formula::Kind::Implies:
      collect(s, f.first(), out, seen);
      collect(s, f.second(), out, seen);
      break;
    case Formula::Kind::BForall: collect(s, f.body(), out, seen); break;
    default: break;
  }
  Natural c = encode(s, f);
  if (seen.insert(c).second) out.push_back(std::move(c));
}

void paper_pool(const Natural& c, std::set<Natural>& pool) {
  if (!pool.insert(c).second) return;
  for (const auto& sp : splits(Scheme::Paper, c))
    for (const auto& p : sp.parts) paper_pool(p, pool);
}

}  // namespace

std::vector<Natural> canonical_elements(Scheme s, const Syntax& x) {
  std::vector<Natural> out;
  std::set<Natural> seen;
  if (const auto* t = std::get_if<Term>(&x)) collect(s, *t, out, seen);
  else collect(s, desugar(std::get<Formula>(x)), out, seen);
  return out;
}

Natural canonical_buildseq(Scheme s, const Syntax& x) { return seq_encode(s, canonical_elements(s, x)); }

std::vector<Natural> greedy_elements(Scheme s, SynPred kind, const Natural& c) {
  if (kind != SynPred::Trm && kind != SynPred::Fml) throw Error("building sequences exist for terms and formulas only");
  std::set<Natural> pool;
  if (s == Scheme::Paper) {
    paper_pool(c, pool);
  } else {
    const Bytes b = to_bytes(c);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0)
        for (std::size_t j = i + 1; j <= b.size(); ++j) pool.insert(from_bytes(b.data() + i, j - i));
  }
  const Natural zero = s == Scheme::Paper ? Natural(1) : Natural(2);
  const Natural one = s == Scheme::Paper ? Natural(3) : Natural(3);
  std::set<Natural> kept;
  std::vector<Natural> out;
  for (const auto& e : pool) {
    bool keep = false;
    if (kind == SynPred::Trm) {
      keep = e == zero || e == one || var_of(s, e).has_value();
      for (const auto& sp : splits(s, e))
        if ((sp.op == Sym::Add || sp.op == Sym::Mul) && kept.count(sp.parts[0]) && kept.count(sp.parts[1])) keep = true;
    } else {
      keep = syn(s, SynPred::Atm, e);
      for (const auto& sp : splits(s, e)) {
        if (keep) break;
        if (sp.op == Sym::Not) keep = kept.count(sp.parts[0]) > 0;
        if (sp.op == Sym::Imp) keep = kept.count(sp.parts[0]) && kept.count(sp.parts[1]);
        if (sp.op == Sym::All)
          keep = var_of(s, sp.parts[0]).has_value() && syn(s, SynPred::Trm, sp.parts[1]) && kept.count(sp.parts[2]) &&
                 !free_vars(decode_term(s, sp.parts[1])).count(*var_of(s, sp.parts[0]));
      }
    }
    if (keep) {
      kept.insert(e);
      out.push_back(e);
    }
  }
  if (out.empty() || out.back() != c) return {};
  return out;
}

}  // namespace arith
