#include "arith/eval.hpp"

#include <optional>
#include <sstream>
#include <unordered_map>

namespace arith {

std::string to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::True: return "true";
    case Verdict3::False: return "false";
    case Verdict3::Unknown: return "unknown";
  }
  return "unknown";
}

Verdict3 kleene_not(Verdict3 a) {
  if (a == Verdict3::Unknown) return a;
  return a == Verdict3::True ? Verdict3::False : Verdict3::True;
}

Verdict3 kleene_and(Verdict3 a, Verdict3 b) {
  if (a == Verdict3::False || b == Verdict3::False) return Verdict3::False;
  if (a == Verdict3::True && b == Verdict3::True) return Verdict3::True;
  return Verdict3::Unknown;
}

Verdict3 kleene_or(Verdict3 a, Verdict3 b) {
  if (a == Verdict3::True || b == Verdict3::True) return Verdict3::True;
  if (a == Verdict3::False && b == Verdict3::False) return Verdict3::False;
  return Verdict3::Unknown;
}

Verdict3 kleene_implies(Verdict3 a, Verdict3 b) { return kleene_or(kleene_not(a), b); }

Valuation parse_valuation(const std::string& text) {
  Valuation rho;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq < 2 || item[0] != 'v') throw Error("bad valuation entry '" + item + "'");
    const auto idx = parse_natural(item.substr(1, eq - 1));
    rho[static_cast<VarIndex>(to_u64(idx))] = parse_natural(item.substr(eq + 1));
  }
  return rho;
}

Natural eval_term(const Term& t, const Valuation& rho) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return 1;
    case Term::Kind::Var: {
      auto it = rho.find(t.var_index());
      if (it == rho.end()) throw Error("unbound variable v" + std::to_string(t.var_index()));
      return it->second;
    }
    case Term::Kind::Add: return eval_term(t.left(), rho) + eval_term(t.right(), rho);
    case Term::Kind::Mul: return eval_term(t.left(), rho) * eval_term(t.right(), rho);
  }
  return 0;
}

namespace {

std::uint64_t bound_value(const Formula& f, const Valuation& rho) {
  const Natural b = eval_term(f.bound(), rho);
  if (b > 100'000'000) throw FeasibilityError("quantifier bound too large: " + to_string(b));
  return to_u64(b);
}

}  // namespace

bool eval_delta0(const Formula& f, const Valuation& rho) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: return eval_term(f.lhs(), rho) == eval_term(f.rhs(), rho);
    case K::Le: return eval_term(f.lhs(), rho) <= eval_term(f.rhs(), rho);
    case K::Not: return !eval_delta0(f.sub(), rho);
    case K::Implies: return !eval_delta0(f.first(), rho) || eval_delta0(f.second(), rho);
    case K::And: return eval_delta0(f.first(), rho) && eval_delta0(f.second(), rho);
    case K::Or: return eval_delta0(f.first(), rho) || eval_delta0(f.second(), rho);
    case K::BForall:
    case K::BExists: {
      const std::uint64_t n = bound_value(f, rho);
      const bool universal = f.kind() == K::BForall;
      Valuation inner = rho;
      for (std::uint64_t x = 0; x <= n; ++x) {
        inner[f.var()] = nat(x);
        const bool v = eval_delta0(f.body(), inner);
        if (universal && !v) return false;
        if (!universal && v) return true;
      }
      return universal;
    }
    default: throw Error("not a bounded formula: " + print(f));
  }
}

namespace {

bool eval_counted(const Formula& f, Valuation& rho, std::uint64_t& left) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not: return !eval_counted(f.sub(), rho, left);
    case K::Implies: return !eval_counted(f.first(), rho, left) || eval_counted(f.second(), rho, left);
    case K::And: return eval_counted(f.first(), rho, left) && eval_counted(f.second(), rho, left);
    case K::Or: return eval_counted(f.first(), rho, left) || eval_counted(f.second(), rho, left);
    case K::BForall:
    case K::BExists: {
      const Natural n = eval_term(f.bound(), rho);
      const bool universal = f.kind() == K::BForall;
      const auto saved = rho.find(f.var()) != rho.end() ? std::optional<Natural>(rho[f.var()]) : std::nullopt;
      bool result = universal;
      for (Natural x = 0; x <= n; ++x) {
        if (left == 0) throw FeasibilityError("evaluation step budget exhausted");
        --left;
        rho[f.var()] = x;
        if (eval_counted(f.body(), rho, left) != universal) {
          result = !universal;
          break;
        }
      }
      if (saved) rho[f.var()] = *saved;
      else rho.erase(f.var());
      return result;
    }
    default: return eval_delta0(f, rho);
  }
}

}  // namespace

Verdict3 eval_delta0_budgeted(const Formula& f, const Valuation& rho, std::uint64_t steps) {
  Valuation r = rho;
  try {
    return verdict(eval_counted(f, r, steps));
  } catch (const FeasibilityError&) {
    return Verdict3::Unknown;
  }
}

Verdict3 eval_fo(const Formula& f, const Valuation& rho, std::uint64_t budget) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Le: return verdict(eval_delta0(f, rho));
    case K::Not: return kleene_not(eval_fo(f.sub(), rho, budget));
    case K::Implies: {
      const Verdict3 a = eval_fo(f.first(), rho, budget);
      if (a == Verdict3::False) return Verdict3::True;
      return kleene_implies(a, eval_fo(f.second(), rho, budget));
    }
    case K::And: {
      const Verdict3 a = eval_fo(f.first(), rho, budget);
      if (a == Verdict3::False) return a;
      return kleene_and(a, eval_fo(f.second(), rho, budget));
    }
    case K::Or: {
      const Verdict3 a = eval_fo(f.first(), rho, budget);
      if (a == Verdict3::True) return a;
      return kleene_or(a, eval_fo(f.second(), rho, budget));
    }
    case K::BForall:
    case K::BExists: {
      const std::uint64_t n = bound_value(f, rho);
      const bool universal = f.kind() == K::BForall;
      Verdict3 acc = universal ? Verdict3::True : Verdict3::False;
      Valuation inner = rho;
      for (std::uint64_t x = 0; x <= n; ++x) {
        inner[f.var()] = nat(x);
        const Verdict3 v = eval_fo(f.body(), inner, budget);
        acc = universal ? kleene_and(acc, v) : kleene_or(acc, v);
        if (universal && acc == Verdict3::False) break;
        if (!universal && acc == Verdict3::True) break;
      }
      return acc;
    }
    case K::UForall:
    case K::UExists: {
      const bool universal = f.kind() == K::UForall;
      Valuation inner = rho;
      for (std::uint64_t x = 0; x <= budget; ++x) {
        inner[f.var()] = nat(x);
        const Verdict3 v = eval_fo(f.body(), inner, budget);
        if (universal && v == Verdict3::False) return v;
        if (!universal && v == Verdict3::True) return v;
      }
      return Verdict3::Unknown;
    }
  }
  return Verdict3::Unknown;
}

namespace {

class TruncatedEvaluator {
public:
  explicit TruncatedEvaluator(std::uint64_t budget) : budget_(budget) {}

  bool eval(const Formula& f, const Valuation& rho) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Eq:
      case K::Le: return eval_delta0(f, rho);
      case K::Not: return !eval(f.sub(), rho);
      case K::Implies: return !eval(f.first(), rho) || eval(f.second(), rho);
      case K::And: return eval(f.first(), rho) && eval(f.second(), rho);
      case K::Or: return eval(f.first(), rho) || eval(f.second(), rho);
      default: break;
    }
    // Quantifier: memoize on (node, values of its free variables).
    std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(f.id()));
    for (VarIndex v : free_vars_of(f)) {
      auto it = rho.find(v);
      if (it == rho.end()) throw Error("unbound variable v" + std::to_string(v));
      key += ',' + it->second.get_str(16);
    }
    if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;

    const bool universal = f.kind() == K::BForall || f.kind() == K::UForall;
    const std::uint64_t n = f.is_bounded_quantifier() ? bound_value(f, rho) : budget_;
    bool result = universal;
    Valuation inner = rho;
    for (std::uint64_t x = 0; x <= n; ++x) {
      inner[f.var()] = nat(x);
      const bool v = eval(f.body(), inner);
      if (universal && !v) {
        result = false;
        break;
      }
      if (!universal && v) {
        result = true;
        break;
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

private:
  const std::set<VarIndex>& free_vars_of(const Formula& f) {
    auto it = fv_.find(f.id());
    if (it == fv_.end()) it = fv_.emplace(f.id(), free_vars(f)).first;
    return it->second;
  }

  std::uint64_t budget_;
  std::unordered_map<std::string, bool> memo_;
  std::unordered_map<const void*, std::set<VarIndex>> fv_;
};

}  // namespace

bool eval_truncated(const Formula& f, const Valuation& rho, std::uint64_t budget) {
  TruncatedEvaluator ev(budget);
  return ev.eval(f, rho);
}

}  // namespace arith
