#pragma once

// Schema parameter grids and one-node proof corruptions, shared by the
// kernel tests and the acceptance runner.

#include <functional>

#include "arith/qkernel.hpp"

namespace arith::test {

inline std::vector<std::pair<QSchema, std::vector<std::uint64_t>>> schema_grid(std::uint64_t top) {
  std::vector<std::pair<QSchema, std::vector<std::uint64_t>>> out;
  for (int i = 0; i <= static_cast<int>(QSchema::LT_SUCC_DISJ); ++i) {
    const auto s = static_cast<QSchema>(i);
    switch (schema_arity(s)) {
      case 0: out.push_back({s, {}}); break;
      case 1:
        for (std::uint64_t n = 0; n <= top; ++n) out.push_back({s, {n}});
        break;
      default:
        for (std::uint64_t a = 0; a <= top; ++a)
          for (std::uint64_t b = 0; b <= top; ++b) {
            if (s == QSchema::NEQ ? a == b : a > b) continue;
            out.push_back({s, {a, b}});
          }
    }
  }
  return out;
}

inline void proof_nodes(QProof& p, std::vector<QProof*>& out) {
  out.push_back(&p);
  for (auto& c : p.children) proof_nodes(c, out);
}

// one-node corruptions of p, each a fresh copy
inline std::vector<QProof> proof_mutants(const QProof& p) {
  std::vector<QProof> out;
  std::vector<QProof*> all;
  QProof probe = p;
  proof_nodes(probe, all);
  const std::vector<std::function<bool(QProof&)>> edits = {
      [](QProof& n) { n.conclusion = Formula::negation(n.conclusion); return true; },
      [](QProof& n) {
        if (n.rule != QRule::MP) return false;
        std::swap(n.children[0], n.children[1]);
        return true;
      },
      [](QProof& n) {
        if (n.children.empty()) return false;
        n.children.pop_back();
        return true;
      },
      [](QProof& n) {
        if (!n.term) return false;
        n.term = Term::add(*n.term, Term::one());
        return true;
      },
      [](QProof& n) {
        if (n.rule != QRule::AX) return false;
        n.axiom = n.axiom % kQAxioms + 1;
        return true;
      },
      [](QProof& n) {
        if (!n.shape) return false;
        n.shape = Formula::negation(*n.shape);
        return true;
      },
      [](QProof& n) {
        if (n.rule != QRule::TAUT) return false;
        n.rule = QRule::REFL;
        return true;
      },
  };
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& e : edits) {
      QProof copy = p;
      std::vector<QProof*> at;
      proof_nodes(copy, at);
      if (e(*at[i])) out.push_back(std::move(copy));
    }
  return out;
}

}  // namespace arith::test
