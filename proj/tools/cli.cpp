#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "arith/compiler.hpp"
#include "arith/qkernel.hpp"
#include "arith/represent.hpp"
#include "arith/sat.hpp"

namespace arith::cli {

namespace {

constexpr std::uint64_t kDefaultSteps = 1'000'000;
constexpr std::uint64_t kDefaultFoBudget = 64;
constexpr std::uint64_t kDefaultRepBudget = 100;

const char* kSynopsis =
    "usage: arith <command> [flags]   global: --budget B --scheme paper|compact --seed S\n"
    "  parse    --formula TEXT | --term TEXT\n"
    "  eval     --formula TEXT [--val v0=4,v1=7]\n"
    "  compile  --formula TEXT --vars v0,v1 [--pr-bound NODE=FILE]...\n"
    "  pr-eval  (--term PRTERM | --term-file FILE) [--args 1,2]\n"
    "  encode   --formula TEXT | --term TEXT\n"
    "  decode   --code N\n"
    "  syn      --pred var|trm|atm|fml --code N\n"
    "  bound    --kind buildseq|termval --x N [--z N]\n"
    "  sat      --code N --value A [--pr]\n"
    "  falsify  --formula TEXT\n"
    "  rep      --mode MODE --formula TEXT --table FILE --oracle ORACLE [--rosser]\n"
    "  qprove   --schema NAME --params 0,1 [--emit FILE]\n"
    "  qcheck   FILE\n";

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

VarIndex parse_var(const std::string& s) {
  if (s.size() < 2 || s[0] != 'v' || s.find_first_not_of("0123456789", 1) != std::string::npos)
    throw Error("not a variable: '" + s + "'");
  return static_cast<VarIndex>(std::stoul(s.substr(1)));
}

std::uint64_t to_u64(const Natural& n, const std::string& what) {
  if (!n.fits_ulong_p()) throw Error(what + " too large");
  return n.get_ui();
}

Syntax syntax_arg(const std::string& formula, const std::string& term) {
  if (formula.empty() == term.empty()) throw CLI::ValidationError("exactly one of --formula and --term is required");
  if (!formula.empty()) return parse_formula(formula);
  return parse_term(term);
}

std::string path_text(const std::vector<std::size_t>& path) {
  if (path.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "." : "") + std::to_string(path[i]);
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"arithmetic syntax, coding and representability toolkit", "arith"};
  app.require_subcommand(1);
  app.set_help_flag();

  std::optional<std::uint64_t> budget;
  std::string scheme_name = "compact";
  std::uint64_t seed = 0;
  app.add_option("--budget", budget);
  app.add_option("--scheme", scheme_name)->check(CLI::IsMember({"paper", "compact"}));
  app.add_option("--seed", seed);

  std::string formula, term, term_file, vals, vars, nargs, code, value, pred, kind, x = "", z = "0";
  std::string mode, table, oracle, schema, params, emit, proof_file;
  std::vector<std::string> pr_bounds;
  bool via_pr = false, rosser = false;

  auto sub = [&](const char* name) {
    CLI::App* s = app.add_subcommand(name);
    s->fallthrough();
    s->set_help_flag();
    return s;
  };
  CLI::App* c_parse = sub("parse");
  c_parse->add_option("--formula", formula);
  c_parse->add_option("--term", term);
  CLI::App* c_eval = sub("eval");
  c_eval->add_option("--formula", formula)->required();
  c_eval->add_option("--val", vals);
  CLI::App* c_compile = sub("compile");
  c_compile->add_option("--formula", formula)->required();
  c_compile->add_option("--vars", vars)->required();
  c_compile->add_option("--pr-bound", pr_bounds);
  CLI::App* c_preval = sub("pr-eval");
  c_preval->add_option("--term", term);
  c_preval->add_option("--term-file", term_file);
  c_preval->add_option("--args", nargs);
  CLI::App* c_encode = sub("encode");
  c_encode->add_option("--formula", formula);
  c_encode->add_option("--term", term);
  CLI::App* c_decode = sub("decode");
  c_decode->add_option("--code", code)->required();
  CLI::App* c_syn = sub("syn");
  c_syn->add_option("--pred", pred)->required();
  c_syn->add_option("--code", code)->required();
  CLI::App* c_bound = sub("bound");
  c_bound->add_option("--kind", kind)->required();
  c_bound->add_option("--x", x)->required();
  c_bound->add_option("--z", z);
  CLI::App* c_sat = sub("sat");
  c_sat->add_option("--code", code)->required();
  c_sat->add_option("--value", value)->required();
  c_sat->add_flag("--pr", via_pr);
  CLI::App* c_falsify = sub("falsify");
  c_falsify->add_option("--formula", formula)->required();
  CLI::App* c_rep = sub("rep");
  c_rep->add_option("--mode", mode)->required();
  c_rep->add_option("--formula", formula)->required();
  c_rep->add_option("--table", table)->required();
  c_rep->add_option("--oracle", oracle)->required();
  c_rep->add_flag("--rosser", rosser);
  CLI::App* c_qprove = sub("qprove");
  c_qprove->add_option("--schema", schema)->required();
  c_qprove->add_option("--params", params);
  c_qprove->add_option("--emit", emit);
  CLI::App* c_qcheck = sub("qcheck");
  c_qcheck->add_option("file", proof_file)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n" << kSynopsis;
    return 2;
  }

  try {
    const Scheme sc = parse_scheme(scheme_name);
    const std::uint64_t steps = budget.value_or(kDefaultSteps);

    if (*c_parse) {
      out << print(syntax_arg(formula, term)) << "\n";
    } else if (*c_eval) {
      const Formula f = parse_formula(formula);
      const Valuation rho = parse_valuation(vals);
      if (is_delta0(f)) {
        out << (budget ? to_string(eval_delta0_budgeted(f, rho, *budget)) : std::string(eval_delta0(f, rho) ? "true" : "false"))
            << "\n";
      } else {
        out << to_string(eval_fo(f, rho, budget.value_or(kDefaultFoBudget))) << "\n";
      }
    } else if (*c_compile) {
      std::vector<VarIndex> order;
      for (const auto& v : split(vars, ',')) order.push_back(parse_var(v));
      PRBounds bounds;
      for (const auto& b : pr_bounds) {
        const auto eq = b.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--pr-bound expects NODE=FILE");
        bounds.insert_or_assign(to_u64(parse_natural(b.substr(0, eq)), "node index"), parse_prterm(read_file(b.substr(eq + 1))));
      }
      out << serialize(compile(parse_formula(formula), order, bounds).term) << "\n";
    } else if (*c_preval) {
      if (term.empty() == term_file.empty()) throw CLI::ValidationError("exactly one of --term and --term-file is required");
      const PRTerm t = parse_prterm(term.empty() ? read_file(term_file) : term);
      std::vector<Natural> xs;
      for (const auto& a : split(nargs, ',')) xs.push_back(parse_natural(a));
      EvalOptions opts;
      if (budget) opts.max_steps = *budget;
      out << to_string(eval_pr(t, xs, opts)) << "\n";
    } else if (*c_encode) {
      out << to_string(encode(sc, syntax_arg(formula, term))) << "\n";
    } else if (*c_decode) {
      out << print(decode(sc, parse_natural(code))) << "\n";
    } else if (*c_syn) {
      out << (syn(sc, parse_synpred(pred), parse_natural(code)) ? "true" : "false") << "\n";
    } else if (*c_bound) {
      out << paper_bound(parse_boundkind(kind), parse_natural(x), parse_natural(z)).str() << "\n";
    } else if (*c_sat) {
      const Natural c = parse_natural(code), a = parse_natural(value);
      out << to_string(via_pr ? sat_pr_value(sc, c, a, steps) : sat_direct_budgeted(sc, c, a, steps)) << "\n";
    } else if (*c_falsify) {
      const Counterexample ce = falsify(parse_formula(formula), sc, steps);
      out << "scheme: " << to_string(sc) << "\n"
          << "candidate: " << print(ce.candidate) << "\n"
          << "diagonal: " << print(ce.diagonal) << "\n"
          << "m: " << to_string(ce.m) << "\n"
          << "point: (" << to_string(ce.point.first) << ", " << to_string(ce.point.second) << ")\n"
          << "candidate_value: " << to_string(ce.candidate_value) << "\n"
          << "sat_value: " << to_string(ce.sat_value) << "\n";
      const bool decided = ce.candidate_value != Verdict3::Unknown && ce.sat_value != Verdict3::Unknown;
      out << "differ: " << (decided ? (ce.candidate_value != ce.sat_value ? "true" : "false") : "unknown") << "\n";
    } else if (*c_rep) {
      const RepMode m = parse_repmode(mode);
      const Formula phi = parse_formula(formula);
      const RepTable tab = parse_table(read_file(table), is_function_mode(m));
      const TheoryOracle t = make_oracle(oracle);
      const std::uint64_t b = budget.value_or(kDefaultRepBudget);
      out << to_string(rosser ? check_representation(m, rosserize(phi, t), tab, b) : check_representation(m, phi, tab, t, b));
    } else if (*c_qprove) {
      std::vector<std::uint64_t> ps;
      for (const auto& p : split(params, ',')) ps.push_back(to_u64(parse_natural(p), "parameter"));
      const QProof proof = prove_schema(parse_qschema(schema), ps);
      const std::string text = serialize(proof);
      if (emit.empty()) {
        out << text << "\n";
      } else {
        std::ofstream f(emit, std::ios::binary);
        if (!(f << text << "\n")) throw Error("cannot write " + emit);
        out << print(proof.conclusion) << "\n";
      }
    } else if (*c_qcheck) {
      std::string text = read_file(proof_file);
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
      const QProof proof = deserialize(text);
      const QCheck r = check_proof(proof);
      if (!r.valid) {
        out << "invalid at " << path_text(r.path) << ": " << r.reason << "\n";
        return 1;
      }
      out << "valid: " << print(proof.conclusion) << "\n"
          << "size: " << proof_size(proof) << "\n";
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: usage: " << e.what() << "\n" << kSynopsis;
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace arith::cli
