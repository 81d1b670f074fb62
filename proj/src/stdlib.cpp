#include "stdlib_impl.hpp"

namespace arith {

namespace prb {

PRTerm P(unsigned i, unsigned n) { return PRTerm::proj(i, n); }
PRTerm C(PRTerm f, std::vector<PRTerm> gs) { return PRTerm::comp(std::move(f), std::move(gs)); }
PRTerm R(PRTerm f, PRTerm g) { return PRTerm::rec(std::move(f), std::move(g)); }

PRTerm konst(const Natural& c) {
  if (c == 0) return PRTerm::zero();
  if (c == 1) return C(PRTerm::succ(), {PRTerm::zero()});
  static const PRTerm twice = C(stdlib("add"), {P(1, 1), P(1, 1)});
  PRTerm half = C(twice, {konst(c / 2)});
  if (mpz_odd_p(c.get_mpz_t())) return C(PRTerm::succ(), {half});
  return half;
}

PRTerm konst(const Natural& c, unsigned n) {
  if (n == 1) return konst(c);
  return C(konst(c), {P(1, n)});
}

PRTerm rec0(const Natural& a, PRTerm g) {
  // Two-argument recursion with a dummy first argument, then diagonalized.
  PRTerm h = R(konst(a), C(std::move(g), {P(1, 3), P(3, 3)}));
  return C(h, {P(1, 1), P(1, 1)});
}

namespace {

PRTerm bfold(PRTerm chi, const PRTerm& op) {
  const int ar = chi.arity();
  if (ar < 2) throw ArityError("bounded fold needs a characteristic term of arity >= 2");
  const unsigned n = static_cast<unsigned>(ar) - 1;
  std::vector<PRTerm> base_args, step_args;
  for (unsigned i = 1; i <= n; ++i) {
    base_args.push_back(P(i, n));
    step_args.push_back(P(i + 1, n + 2));
  }
  base_args.push_back(konst(0, n));
  step_args.push_back(C(PRTerm::succ(), {P(n + 2, n + 2)}));
  PRTerm base = C(chi, std::move(base_args));
  PRTerm step = C(op, {P(1, n + 2), C(chi, std::move(step_args))});
  return R(std::move(base), std::move(step));
}

}  // namespace

PRTerm bsum(PRTerm chi) { return bfold(std::move(chi), stdlib("add")); }
PRTerm bprod(PRTerm chi) { return bfold(std::move(chi), stdlib("mul")); }

// sum_{k<=b} prod_{j<=k} sgbar(chi(x, j)) counts the leading failures.
PRTerm bmu(PRTerm chi) { return bsum(bprod(C(stdlib("sgbar"), {std::move(chi)}))); }

}  // namespace prb

namespace detail {

const PRTerm& Registry::add(std::string name, PRTerm term, NativeFn direct, bool pub) {
  const unsigned ar = validate(term);
  kernels[term.id()] = Kernel{name, direct};
  index_[name] = entries.size();
  entries.push_back(Entry{std::move(name), std::move(term), ar, std::move(direct), pub});
  return entries.back().term;
}

const Entry* Registry::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &entries[it->second];
}

const PRTerm& Registry::get(std::string_view name) const {
  if (const Entry* e = find(name)) return e->term;
  throw Error("unknown stdlib entry '" + std::string(name) + "'");
}

namespace {

Registry& registry_storage() {
  static Registry r;
  return r;
}

// Guards recursive stdlib() lookups made while the registry is being built.
bool& building() {
  static bool b = false;
  return b;
}

const Registry& registry() {
  static const bool once = [] {
    building() = true;
    register_arith(registry_storage());
    register_coding(registry_storage());
    building() = false;
    return true;
  }();
  (void)once;
  return registry_storage();
}

}  // namespace

}  // namespace detail

const PRTerm& stdlib(std::string_view name) {
  if (detail::building()) return detail::registry_storage().get(name);
  return detail::registry().get(name);
}

bool stdlib_has(std::string_view name) { return detail::registry().find(name) != nullptr; }

std::vector<std::string> stdlib_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::registry().entries)
    if (e.pub) out.push_back(e.name);
  return out;
}

std::vector<std::string> stdlib_all_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::registry().entries) out.push_back(e.name);
  return out;
}

unsigned stdlib_arity(std::string_view name) {
  const auto* e = detail::registry().find(name);
  if (!e) throw Error("unknown stdlib entry '" + std::string(name) + "'");
  return e->arity;
}

Natural stdlib_direct(std::string_view name, std::span<const Natural> args) {
  const auto* e = detail::registry().find(name);
  if (!e) throw Error("unknown stdlib entry '" + std::string(name) + "'");
  if (args.size() != e->arity) throw ArityError(std::string(name) + " expects " + std::to_string(e->arity) + " arguments");
  return e->direct(args);
}

const KernelTable& stdlib_kernels() { return detail::registry().kernels; }

RelOp parse_relop(std::string_view s) {
  if (s == "and") return RelOp::And;
  if (s == "or") return RelOp::Or;
  if (s == "not") return RelOp::Not;
  if (s == "bforall") return RelOp::BForall;
  if (s == "bexists") return RelOp::BExists;
  throw Error("unknown relation operator '" + std::string(s) + "'");
}

PRTerm rel_combine(RelOp op, const std::vector<PRTerm>& args) {
  using namespace prb;
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw ArityError("relation operator expects " + std::to_string(k) + " arguments");
    for (const auto& a : args) validate(a);
  };
  switch (op) {
    case RelOp::Not:
      need(1);
      return C(stdlib("sgbar"), {args[0]});
    case RelOp::And:
    case RelOp::Or: {
      need(2);
      if (args[0].arity() != args[1].arity()) throw ArityError("characteristic terms disagree on arity");
      if (op == RelOp::And) return C(stdlib("mul"), {args[0], args[1]});
      return C(stdlib("sg"), {C(stdlib("add"), {args[0], args[1]})});
    }
    case RelOp::BForall:
    case RelOp::BExists: {
      need(2);
      const PRTerm& chi = args[0];
      const PRTerm& bound = args[1];
      if (chi.arity() != bound.arity() + 1)
        throw ArityError("quantified term must have arity one more than the bound");
      const unsigned n = static_cast<unsigned>(bound.arity());
      // H(x, 0) = chi(x, 0); H(x, k+1) = H(x, k) * chi(x, k+1)   (forall)
      //                      H(x, k+1) = sg(H(x, k) + chi(x, k+1)) (exists)
      PRTerm h = op == RelOp::BForall ? bprod(chi) : [&] {
        std::vector<PRTerm> base_args, step_args;
        for (unsigned i = 1; i <= n; ++i) {
          base_args.push_back(P(i, n));
          step_args.push_back(P(i + 1, n + 2));
        }
        base_args.push_back(konst(0, n));
        step_args.push_back(C(PRTerm::succ(), {P(n + 2, n + 2)}));
        PRTerm step = C(stdlib("sg"), {C(stdlib("add"), {P(1, n + 2), C(chi, std::move(step_args))})});
        return R(C(chi, std::move(base_args)), std::move(step));
      }();
      std::vector<PRTerm> outer;
      for (unsigned i = 1; i <= n; ++i) outer.push_back(P(i, n));
      outer.push_back(bound);
      return C(std::move(h), std::move(outer));
    }
  }
  throw Error("bad relation operator");
}

PRTerm graph_of(const PRTerm& f) {
  using namespace prb;
  const unsigned n = validate(f);
  std::vector<PRTerm> args;
  for (unsigned i = 1; i <= n; ++i) args.push_back(P(i, n + 1));
  return C(stdlib("chi_eq"), {C(f, std::move(args)), P(n + 1, n + 1)});
}

}  // namespace arith
