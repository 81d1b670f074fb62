#include "arith/pr.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace arith {

PRTerm PRTerm::zero() { return PRTerm(std::make_shared<const Node>(Node{Kind::Zero, 0, 0, {}, 1})); }
PRTerm PRTerm::succ() { return PRTerm(std::make_shared<const Node>(Node{Kind::Succ, 0, 0, {}, 1})); }

PRTerm PRTerm::proj(unsigned i, unsigned n) {
  const int ar = (i >= 1 && i <= n) ? static_cast<int>(n) : -1;
  return PRTerm(std::make_shared<const Node>(Node{Kind::Proj, i, n, {}, ar}));
}

PRTerm PRTerm::comp(PRTerm f, std::vector<PRTerm> gs) {
  int ar = -1;
  if (!gs.empty() && f.arity() == static_cast<int>(gs.size())) {
    ar = gs.front().arity();
    for (const auto& g : gs)
      if (g.arity() != ar) ar = -1;
    if (ar < 1) ar = -1;
  }
  std::vector<PRTerm> children;
  children.reserve(gs.size() + 1);
  children.push_back(std::move(f));
  for (auto& g : gs) children.push_back(std::move(g));
  return PRTerm(std::make_shared<const Node>(Node{Kind::Comp, 0, 0, std::move(children), ar}));
}

PRTerm PRTerm::rec(PRTerm f, PRTerm g) {
  int ar = -1;
  if (f.arity() >= 1 && g.arity() == f.arity() + 2) ar = f.arity() + 1;
  return PRTerm(std::make_shared<const Node>(Node{Kind::Rec, 0, 0, {std::move(f), std::move(g)}, ar}));
}

bool operator==(const PRTerm& a, const PRTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == PRTerm::Kind::Proj) return a.proj_index() == b.proj_index() && a.proj_arity() == b.proj_arity();
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  return ca.size() == cb.size() && std::equal(ca.begin(), ca.end(), cb.begin());
}

namespace {

unsigned validate_at(const PRTerm& t, const std::string& path) {
  switch (t.kind()) {
    case PRTerm::Kind::Zero:
    case PRTerm::Kind::Succ: return 1;
    case PRTerm::Kind::Proj:
      if (t.proj_index() < 1 || t.proj_index() > t.proj_arity())
        throw ArityError("projection P(" + std::to_string(t.proj_index()) + "," + std::to_string(t.proj_arity()) +
                         ") out of range at " + path);
      return t.proj_arity();
    case PRTerm::Kind::Comp: {
      const unsigned fa = validate_at(t.head(), path + ".f");
      const auto gs = t.args();
      if (fa != gs.size())
        throw ArityError("composition expects " + std::to_string(fa) + " inner functions, got " +
                         std::to_string(gs.size()) + " at " + path);
      unsigned n = 0;
      for (std::size_t k = 0; k < gs.size(); ++k) {
        const unsigned ga = validate_at(gs[k], path + ".g" + std::to_string(k + 1));
        if (k == 0) n = ga;
        else if (ga != n)
          throw ArityError("inner functions disagree on arity (" + std::to_string(n) + " vs " + std::to_string(ga) +
                           ") at " + path);
      }
      return n;
    }
    case PRTerm::Kind::Rec: {
      const unsigned fa = validate_at(t.base(), path + ".f");
      const unsigned ga = validate_at(t.step(), path + ".g");
      if (ga != fa + 2)
        throw ArityError("recursion step must have arity " + std::to_string(fa + 2) + ", got " + std::to_string(ga) +
                         " at " + path);
      return fa + 1;
    }
  }
  return 0;
}

}  // namespace

unsigned validate(const PRTerm& t) {
  if (t.arity() >= 1) return static_cast<unsigned>(t.arity());
  return validate_at(t, "root");
}

// ---- serialization ----

std::string serialize(const PRTerm& t) {
  switch (t.kind()) {
    case PRTerm::Kind::Zero: return "Z";
    case PRTerm::Kind::Succ: return "S";
    case PRTerm::Kind::Proj: return "P(" + std::to_string(t.proj_index()) + "," + std::to_string(t.proj_arity()) + ")";
    case PRTerm::Kind::Comp: {
      std::string s = "C(" + serialize(t.head()) + ";";
      bool first = true;
      for (const auto& g : t.args()) {
        s += first ? " " : ", ";
        s += serialize(g);
        first = false;
      }
      return s + ")";
    }
    case PRTerm::Kind::Rec: return "R(" + serialize(t.base()) + "; " + serialize(t.step()) + ")";
  }
  return {};
}

namespace {

class PRParser {
public:
  explicit PRParser(std::string_view s) : s_(s) {}

  PRTerm term() {
    skip();
    if (accept('Z')) return PRTerm::zero();
    if (accept('S')) return PRTerm::succ();
    if (accept('P')) {
      expect('(');
      const unsigned i = number();
      expect(',');
      const unsigned n = number();
      expect(')');
      return PRTerm::proj(i, n);
    }
    if (accept('C')) {
      expect('(');
      PRTerm f = term();
      expect(';');
      std::vector<PRTerm> gs{term()};
      while (accept(',')) gs.push_back(term());
      expect(')');
      return PRTerm::comp(std::move(f), std::move(gs));
    }
    if (accept('R')) {
      expect('(');
      PRTerm f = term();
      expect(';');
      PRTerm g = term();
      expect(')');
      return PRTerm::rec(std::move(f), std::move(g));
    }
    fail("expected Z, S, P, C or R");
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("trailing input");
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  unsigned number() {
    skip();
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    if (pos_ == start) fail("expected number");
    return static_cast<unsigned>(v);
  }
  [[noreturn]] void fail(const std::string& m) { throw Error("PR term syntax: " + m + " at offset " + std::to_string(pos_)); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PRTerm parse_prterm(std::string_view text) {
  PRParser p(text);
  PRTerm t = p.term();
  p.finish();
  return t;
}

namespace {

template <class F>
void walk_dag(const PRTerm& t, std::unordered_set<const void*>& seen, F&& visit) {
  if (!seen.insert(t.id()).second) return;
  visit(t);
  if (t.kind() == PRTerm::Kind::Comp) {
    walk_dag(t.head(), seen, visit);
    for (const auto& g : t.args()) walk_dag(g, seen, visit);
  } else if (t.kind() == PRTerm::Kind::Rec) {
    walk_dag(t.base(), seen, visit);
    walk_dag(t.step(), seen, visit);
  }
}

}  // namespace

std::size_t dag_size(const PRTerm& t) {
  std::unordered_set<const void*> seen;
  walk_dag(t, seen, [](const PRTerm&) {});
  return seen.size();
}

bool contains(const PRTerm& haystack, const PRTerm& needle) {
  std::unordered_set<const void*> seen;
  bool found = false;
  walk_dag(haystack, seen, [&](const PRTerm& n) { found = found || n.id() == needle.id(); });
  return found;
}

// ---- evaluation ----

namespace {

struct MemoKey {
  const void* id = nullptr;
  std::vector<Natural> args;
  bool operator==(const MemoKey&) const = default;
};

// size and a few limbs; equality settles the rest
struct SampledHash {
  std::size_t operator()(const Natural& a) const {
    const auto* z = a.get_mpz_t();
    const std::size_t n = mpz_size(z);
    std::size_t h = n;
    for (std::size_t i = 0; i < n && i < 4; ++i) h = h * 1000003u ^ z->_mp_d[i];
    for (std::size_t i = n > 4 ? n - 4 : n; i < n; ++i) h = h * 1000003u ^ z->_mp_d[i];
    return h;
  }
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = std::hash<const void*>()(k.id);
    for (const auto& a : k.args) h = h * 1000003u ^ SampledHash()(a) ^ (mpz_sgn(a.get_mpz_t()) < 0);
    return h;
  }
};

class Evaluator {
public:
  explicit Evaluator(const EvalOptions& o) : opts_(o) {}

  Natural eval(const PRTerm& t, std::span<const Natural> args) {
    if (++steps_ > opts_.max_steps) throw BudgetExhausted("PR evaluation step budget exhausted");
    switch (t.kind()) {
      case PRTerm::Kind::Zero: return 0;
      case PRTerm::Kind::Succ: return args[0] + 1;
      case PRTerm::Kind::Proj: return args[t.proj_index() - 1];
      default: break;
    }
    const bool memo = opts_.memoize;
    MemoKey key;
    if (memo) {
      key = key_of(t, args);
      if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;
    }
    auto remember = [&](Natural r) {
      if (memo) memo_.emplace(std::move(key), r);
      return r;
    };
    if (opts_.kernels) {
      if (auto it = opts_.kernels->find(t.id()); it != opts_.kernels->end() && !disabled(it->second.name))
        return remember(it->second.fn(args));
    }
    if (opts_.hooks) {
      if (auto it = opts_.hooks->find(t.id()); it != opts_.hooks->end()) return remember(search(it->second, args));
    }
    return remember(t.kind() == PRTerm::Kind::Comp ? compose(t, args) : recurse(t, args));
  }

private:
  Natural compose(const PRTerm& t, std::span<const Natural> args) {
    std::vector<Natural> inner;
    inner.reserve(t.args().size());
    for (const auto& g : t.args()) inner.push_back(eval(g, args));
    return eval(t.head(), inner);
  }

  Natural recurse(const PRTerm& t, std::span<const Natural> args) {
    const Natural& y = args.back();
    if (y > opts_.max_recursion) throw FeasibilityError("recursion counter too large: " + arith::to_string(y));
    const std::uint64_t n = to_u64(y);
    Natural acc = eval(t.base(), args.first(args.size() - 1));
    std::vector<Natural> gargs;
    gargs.reserve(args.size() + 1);
    gargs.push_back(0);
    for (std::size_t k = 0; k + 1 < args.size(); ++k) gargs.push_back(args[k]);
    gargs.push_back(0);
    for (std::uint64_t k = 0; k < n; ++k) {
      gargs.front() = acc;
      gargs.back() = nat(k);
      acc = eval(t.step(), gargs);
    }
    return acc;
  }

  Natural search(const SearchHook& hook, std::span<const Natural> args) {
    std::vector<Natural> inner(args.begin(), args.end());
    inner.push_back(0);
    for (const Natural& c : hook.candidates(args)) {
      ++steps_;
      std::optional<bool> ok = hook.within_bound ? hook.within_bound(args, c) : std::nullopt;
      if (!ok) ok = c <= eval(hook.bound, args);
      if (!*ok) continue;
      inner.back() = c;
      if (eval(hook.body, inner) != 0) return 1;
    }
    return 0;
  }

  bool disabled(const std::string& name) const {
    return std::find(opts_.disabled_kernels.begin(), opts_.disabled_kernels.end(), name) !=
           opts_.disabled_kernels.end();
  }

  // big arguments are interned and stand in the key as -(id+1)
  MemoKey key_of(const PRTerm& t, std::span<const Natural> args) {
    MemoKey k{t.id(), {}};
    k.args.reserve(args.size());
    for (const auto& a : args) {
      if (mpz_size(a.get_mpz_t()) <= 64) {
        k.args.push_back(a);
        continue;
      }
      auto [it, fresh] = interned_.try_emplace(a, interned_.size());
      k.args.push_back(-Natural(it->second + 1));
    }
    return k;
  }

  const EvalOptions& opts_;
  std::uint64_t steps_ = 0;
  std::unordered_map<MemoKey, Natural, MemoHash> memo_;
  std::unordered_map<Natural, std::size_t, SampledHash> interned_;
};

}  // namespace

Natural eval_pr(const PRTerm& t, std::span<const Natural> args, const EvalOptions& opts) {
  const unsigned n = validate(t);
  if (n != args.size())
    throw ArityError("term has arity " + std::to_string(n) + " but " + std::to_string(args.size()) +
                     " arguments were given");
  Evaluator ev(opts);
  return ev.eval(t, args);
}

Natural eval_pr(const PRTerm& t, std::initializer_list<std::uint64_t> args, const EvalOptions& opts) {
  std::vector<Natural> v;
  for (auto a : args) v.push_back(nat(a));
  return eval_pr(t, v, opts);
}

}  // namespace arith
