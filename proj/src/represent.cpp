#include "arith/represent.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "arith/coding.hpp"

namespace arith {

namespace {

VarIndex fresh_after(const Formula& f) {
  VarIndex v = 1;
  for (VarIndex u : all_vars(f)) v = std::max(v, u);
  return v + 1;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "a<TAB>b" lines, with line numbers for errors
std::vector<std::pair<std::string, std::string>> tsv(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error("line " + std::to_string(no) + ": expected two tab-separated fields");
    out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

Natural field_natural(const std::string& s, std::size_t row) {
  try {
    return parse_natural(s);
  } catch (const Error&) {
    throw Error("row " + std::to_string(row) + ": '" + s + "' is not a natural number");
  }
}

Outcome summarize(const std::vector<RepInstance>& xs) {
  Outcome o = Outcome::Pass;
  for (const auto& x : xs) {
    if (x.verdict == Verdict3::False) return Outcome::Fail;
    if (x.verdict == Verdict3::Unknown) o = Outcome::Inconclusive;
  }
  return o;
}

// E!u A(u), A given with the free variable u
Formula exists_unique(const Formula& a, VarIndex u, VarIndex w) {
  const Formula aw = substitute(a, u, Term::var(w));
  return Formula::uexists(u, Formula::conj(a, Formula::uforall(w, Formula::implies(aw, Formula::eq(Term::var(w), Term::var(u))))));
}

void check_pair_formula(const Formula& f, const char* what) {
  for (VarIndex v : free_vars(f))
    if (v > 1) throw Error(std::string(what) + " may only have v0 and v1 free, found v" + std::to_string(v));
}

}  // namespace

// ---- oracles ----

TheoryOracle mock_oracle(std::map<Natural, Formula> table, std::string conditions) {
  auto tb = std::make_shared<const std::map<Natural, Formula>>(std::move(table));
  TheoryOracle t;
  t.kind = "mock";
  t.conditions = std::move(conditions);
  t.proof_check = [tb](const Natural& k, const Formula& f) {
    auto it = tb->find(k);
    return it != tb->end() && it->second == f;
  };
  t.enumerator = [tb](const Natural& k) -> std::optional<Formula> {
    auto it = tb->find(k);
    if (it == tb->end()) return std::nullopt;
    return it->second;
  };
  t.find_proof = [tb](const Formula& f) -> std::optional<Natural> {
    for (const auto& [k, g] : *tb)
      if (g == f) return k;
    return std::nullopt;
  };
  t.decides = [tb](const Formula& f) {
    for (const auto& [k, g] : *tb)
      if (g == f) return true;
    return false;
  };
  return t;
}

std::map<Natural, Formula> parse_mock_table(const std::string& text) {
  std::map<Natural, Formula> out;
  std::size_t row = 0;
  for (const auto& [k, f] : tsv(text)) {
    ++row;
    const Natural idx = field_natural(k, row);
    if (out.count(idx)) throw Error("row " + std::to_string(row) + ": duplicate proof index " + k);
    try {
      out.emplace(idx, parse_formula(f));
    } catch (const ParseError& e) {
      throw Error("row " + std::to_string(row) + ": " + e.what());
    }
  }
  return out;
}

TheoryOracle truth_oracle(std::uint64_t budget) {
  if (budget == 0) throw Error("budget must be positive");
  TheoryOracle t;
  t.kind = "budgeted_truth";
  t.conditions = "abc";
  t.decides = [budget](const Formula& f) { return is_sentence(f) && eval_truncated(f, {}, budget); };
  auto code = [](const Formula& f) -> std::optional<Natural> {
    try {
      return encode(Scheme::Compact, desugar(f));
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const auto decides = t.decides;
  t.find_proof = [decides, code](const Formula& f) -> std::optional<Natural> {
    if (!decides(f)) return std::nullopt;
    return code(f);
  };
  t.proof_check = [decides, code](const Natural& k, const Formula& f) {
    auto c = code(f);
    return c && *c == k && decides(f);
  };
  t.enumerator = [decides](const Natural& k) -> std::optional<Formula> {
    try {
      Formula f = decode_formula(Scheme::Compact, k);
      if (decides(f)) return f;
    } catch (const FeasibilityError&) {
      throw;
    } catch (const Error&) {
    }
    return std::nullopt;
  };
  return t;
}

TheoryOracle make_oracle(const std::string& spec) {
  if (spec == "q") return q_oracle();
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon), arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "mock") {
    if (arg.empty()) throw Error("mock oracle needs a table file: mock:<path>");
    return mock_oracle(parse_mock_table(read_file(arg)));
  }
  if (kind == "truth" || kind == "budgeted_truth") {
    if (arg.empty()) throw Error("truth oracle needs a budget: truth:<n>");
    return truth_oracle(to_u64(parse_natural(arg)));
  }
  throw Error("unknown oracle '" + spec + "' (expected mock:<path>, truth:<budget> or q)");
}

Verdict3 provable(const TheoryOracle& t, const Formula& f, std::uint64_t budget) {
  if (t.find_proof) {
    if (auto k = t.find_proof(f); k && t.proof_check(*k, f)) return Verdict3::True;
  } else {
    for (std::uint64_t k = 0; k <= budget; ++k)
      if (t.proof_check(nat(k), f)) return Verdict3::True;
  }
  if (t.decides) return verdict(t.decides(f));
  return Verdict3::Unknown;
}

Verdict3 unprovable(const TheoryOracle& t, const Formula& f, std::uint64_t budget) {
  return kleene_not(provable(t, f, budget));
}

// ---- tables and modes ----

RepMode parse_repmode(std::string_view s) {
  for (RepMode m : {RepMode::RelWeak, RepMode::RelRep, RepMode::FunWeak, RepMode::FunRep, RepMode::FunStrong,
                    RepMode::FunProvTotal})
    if (to_string(m) == s) return m;
  throw Error("unknown mode '" + std::string(s) + "'");
}

std::string to_string(RepMode m) {
  switch (m) {
    case RepMode::RelWeak: return "RelWeak";
    case RepMode::RelRep: return "RelRep";
    case RepMode::FunWeak: return "FunWeak";
    case RepMode::FunRep: return "FunRep";
    case RepMode::FunStrong: return "FunStrong";
    case RepMode::FunProvTotal: return "FunProvTotal";
  }
  return {};
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return {};
}

RepTable function_table(std::map<Natural, Natural> f) {
  RepTable t;
  for (const auto& [n, m] : f) t.m_max = std::max(t.m_max, Natural(m + 1));
  t.function = std::move(f);
  return t;
}

RepTable relation_table(std::vector<Natural> domain, std::set<Natural> members) {
  RepTable t;
  t.domain = std::move(domain);
  t.members = std::move(members);
  return t;
}

RepTable parse_table(const std::string& text, bool function) {
  std::map<Natural, Natural> f;
  std::vector<Natural> domain;
  std::set<Natural> members;
  std::size_t row = 0;
  for (const auto& [a, b] : tsv(text)) {
    ++row;
    const Natural n = field_natural(a, row), m = field_natural(b, row);
    if (function) {
      if (!f.emplace(n, m).second) throw Error("row " + std::to_string(row) + ": f(" + a + ") given twice");
    } else {
      if (m > 1) throw Error("row " + std::to_string(row) + ": membership must be 0 or 1");
      domain.push_back(n);
      if (m == 1) members.insert(n);
    }
  }
  return function ? function_table(std::move(f)) : relation_table(std::move(domain), std::move(members));
}

Formula instance(const Formula& phi, const Natural& n) { return substitute(phi, 0, numeral(n)); }

Formula instance(const Formula& phi, const Natural& n, const Natural& m) {
  return substitute(substitute(phi, 0, numeral(n)), 1, numeral(m));
}

std::string to_string(const RepReport& r) {
  std::ostringstream out;
  out << "mode: " << to_string(r.mode) << "\n";
  out << "subject: " << r.subject << "\n";
  for (const auto& x : r.instances) out << "instance: " << to_string(x.verdict) << "\t" << x.clause << "\n";
  out << "overall: " << to_string(r.overall) << "\n";
  return out.str();
}

RepReport check_representation(RepMode mode, const Formula& phi, const RepTable& table, const TheoryOracle& t,
                               std::uint64_t budget) {
  if (budget == 0) throw Error("budget must be positive");
  const bool fn = is_function_mode(mode);
  for (VarIndex v : free_vars(phi))
    if (v > (fn ? 1u : 0u))
      throw Error(std::string(fn ? "a function mode needs free variables among v0, v1" : "a relation mode needs v0 as the only free variable") +
                  "; found v" + std::to_string(v));
  RepReport r{mode, print(phi), {}, Outcome::Pass};
  auto prove = [&](const Formula& f) { r.instances.push_back({"T |- " + print(f), provable(t, f, budget)}); };
  auto not_prove = [&](const Formula& f) { r.instances.push_back({"T |/- " + print(f), unprovable(t, f, budget)}); };

  switch (mode) {
    case RepMode::RelWeak:
    case RepMode::RelRep:
      for (const Natural& n : table.domain) {
        const Formula f = instance(phi, n);
        if (table.members.count(n)) prove(f);
        else if (mode == RepMode::RelWeak) not_prove(f);
        else prove(Formula::negation(f));
      }
      break;
    case RepMode::FunWeak:
    case RepMode::FunRep:
      for (const auto& [n, fn_n] : table.function)
        for (Natural m = 0; m <= table.m_max; ++m) {
          const Formula f = instance(phi, n, m);
          if (m == fn_n) prove(f);
          else if (mode == RepMode::FunWeak) not_prove(f);
          else prove(Formula::negation(f));
        }
      break;
    case RepMode::FunStrong: {
      const VarIndex y = fresh_after(phi), z = y + 1;
      for (const auto& [n, fn_n] : table.function) {
        prove(instance(phi, n, fn_n));
        const Formula at_n = instance(phi, n);
        const Formula ty = substitute(at_n, 1, Term::var(y)), tz = substitute(at_n, 1, Term::var(z));
        prove(Formula::uforall(y, Formula::uforall(z, Formula::implies(Formula::conj(ty, tz), Formula::eq(Term::var(y), Term::var(z))))));
      }
      break;
    }
    case RepMode::FunProvTotal: {
      for (const auto& [n, fn_n] : table.function) prove(instance(phi, n, fn_n));
      const VarIndex z = fresh_after(phi);
      const Formula ez = substitute(phi, 1, Term::var(z));
      prove(Formula::uforall(0, Formula::uexists(1, Formula::conj(phi, Formula::uforall(z, Formula::implies(ez, Formula::eq(Term::var(1), Term::var(z))))))));
      break;
    }
  }
  r.overall = summarize(r.instances);
  return r;
}

// ---- transformations ----

Formula strengthen(const Formula& psi) {
  check_pair_formula(psi, "strengthen: psi");
  const VarIndex z = fresh_after(psi);
  const Term zt = Term::var(z), y = Term::var(1);
  return Formula::conj(psi, Formula::bforall(z, y, Formula::implies(less_than(zt, y), Formula::negation(substitute(psi, 1, zt)))));
}

Formula totalize(const Formula& theta) {
  check_pair_formula(theta, "totalize: theta");
  const VarIndex z = fresh_after(theta), w = z + 1;
  const Formula unique = exists_unique(substitute(theta, 1, Term::var(z)), z, w);
  return Formula::disj(Formula::conj(unique, theta),
                       Formula::conj(Formula::negation(unique), Formula::eq(Term::var(1), Term::zero())));
}

Rosser::Rosser(Formula phi, TheoryOracle t) : phi_(std::move(phi)), t_(std::move(t)) {
  check_pair_formula(phi_, "rosserize: phi");
}

std::optional<Natural> Rosser::first_proof(const Formula& f, std::uint64_t budget) const {
  if (t_.find_proof) {
    auto k = t_.find_proof(f);
    if (k && t_.proof_check(*k, f)) return k;
    return std::nullopt;
  }
  for (std::uint64_t k = 0; k <= budget; ++k)
    if (t_.proof_check(nat(k), f)) return nat(k);
  return std::nullopt;
}

Verdict3 Rosser::holds(const Natural& n, const Natural& m, std::uint64_t budget) const {
  const Formula target = instance(phi_, n, m);
  if (t_.decides && !t_.decides(target)) return Verdict3::False;
  // the least z with rho(z, target) is the first proof; competitors found
  // there stay for every larger z
  const auto k = first_proof(target, budget);
  if (!k || *k > budget) return Verdict3::Unknown;
  std::unordered_set<std::string> rivals;
  for (Natural y = 0; y <= *k; ++y)
    if (y != m) rivals.insert(print(desugar(instance(phi_, n, y))));
  if (t_.enumerator) {
    for (Natural u = 0; u <= *k; ++u)
      if (auto g = t_.enumerator(u); g && rivals.count(print(desugar(*g))) && t_.proof_check(u, *g)) return Verdict3::False;
    return Verdict3::True;
  }
  for (Natural y = 0; y <= *k; ++y) {
    if (y == m) continue;
    const Formula rival = instance(phi_, n, y);
    if (auto j = first_proof(rival, to_u64(*k)); j && *j <= *k) return Verdict3::False;
  }
  return Verdict3::True;
}

std::string Rosser::display() const {
  const std::string at_y = print(phi_), at_y1 = print(substitute(phi_, 1, Term::var(fresh_after(phi_))));
  return "(E z)[rho(z, <" + at_y + ">) & (A y' <= z)(~(y' = v1) -> ~rho(z, <" + at_y1 +
         ">))], rho(z, x) = (E u <= z) Proof(u, x), y' = v" + std::to_string(fresh_after(phi_));
}

Rosser rosserize(const Formula& phi, const TheoryOracle& t) { return Rosser(phi, t); }

RepReport check_representation(RepMode mode, const Rosser& psi, const RepTable& table, std::uint64_t budget) {
  if (mode != RepMode::FunWeak && mode != RepMode::FunRep) throw Error("the Rosser predicate is checked in FunWeak or FunRep");
  if (budget == 0) throw Error("budget must be positive");
  RepReport r{mode, psi.display(), {}, Outcome::Pass};
  for (const auto& [n, fn_n] : table.function)
    for (Natural m = 0; m <= table.m_max; ++m) {
      const Verdict3 h = psi.holds(n, m, budget);
      const std::string at = "psi(" + to_string(n) + ", " + to_string(m) + ")";
      if (m == fn_n) r.instances.push_back({"T |- " + at, h});
      else if (mode == RepMode::FunWeak) r.instances.push_back({"T |/- " + at, kleene_not(h)});
      else r.instances.push_back({"T |- ~" + at, kleene_not(h)});
    }
  r.overall = summarize(r.instances);
  return r;
}

}  // namespace arith
