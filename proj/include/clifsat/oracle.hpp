#pragma once

#include <cstdint>
#include <optional>

#include "clifsat/cnf.hpp"
#include "clifsat/limits.hpp"

// Ground-truth satisfiability, independent of the algebra code paths: an
// exhaustive enumerator and a plain recursive DPLL. Both operate on the Cnf
// data model only.

namespace clifsat {

enum class Verdict { Sat, Unsat };

struct BruteForceResult {
  Verdict verdict = Verdict::Unsat;
  std::uint64_t model_count = 0;
  std::optional<Assignment> witness;  // lowest-index satisfying assignment
};

/// Enumerates all 2^n assignments. Exact model count.
inline BruteForceResult brute_force(const Cnf& f) {
  require_within_limit(f.n, kMaxVarsOracle, "brute_force");
  BruteForceResult out;
  const std::uint64_t total = std::uint64_t{1} << f.n;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (eval(f, Assignment(f.n, a))) {
      ++out.model_count;
      if (!out.witness) out.witness = Assignment(f.n, a);
    }
  }
  out.verdict = out.model_count > 0 ? Verdict::Sat : Verdict::Unsat;
  return out;
}

struct DpllResult {
  Verdict verdict = Verdict::Unsat;
  std::optional<Assignment> witness;
};

namespace detail {

// Unit propagation and pure-literal elimination to fixpoint; records the
// forced values in `model`.
inline Cnf propagate(Cnf f, Assignment& model) {
  for (;;) {
    if (f.has_empty_clause() || f.clause_free()) return f;
    // unit clause
    const Clause* unit = nullptr;
    for (const Clause& c : f.clauses)
      if (c.size() == 1) {
        unit = &c;
        break;
      }
    if (unit != nullptr) {
      const Literal l = unit->lits.front();
      model = model.with(l.var, l.positive);
      f = restrict(f, l.var, l.positive);
      continue;
    }
    // pure literal
    std::vector<int> seen(static_cast<std::size_t>(f.n) + 1, 0);  // bit0 pos, bit1 neg
    for (const Clause& c : f.clauses)
      for (Literal l : c.lits) seen[static_cast<std::size_t>(l.var)] |= l.positive ? 1 : 2;
    int pure_var = 0;
    bool pure_value = false;
    for (int v = 1; v <= f.n; ++v) {
      if (seen[static_cast<std::size_t>(v)] == 1 || seen[static_cast<std::size_t>(v)] == 2) {
        pure_var = v;
        pure_value = seen[static_cast<std::size_t>(v)] == 1;
        break;
      }
    }
    if (pure_var != 0) {
      model = model.with(pure_var, pure_value);
      f = restrict(f, pure_var, pure_value);
      continue;
    }
    return f;
  }
}

inline bool dpll_rec(const Cnf& f, Assignment& model) {
  Assignment local = model;
  const Cnf g = propagate(f, local);
  if (g.clause_free()) {
    model = local;
    return true;
  }
  if (g.has_empty_clause()) return false;
  // branch on the lowest-index variable still occurring, false first
  int v = 0;
  for (int cand = 1; cand <= g.n && v == 0; ++cand)
    if (g.mentions(cand)) v = cand;
  for (const bool value : {false, true}) {
    Assignment next = local.with(v, value);
    if (dpll_rec(restrict(g, v, value), next)) {
      model = next;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Recursive DPLL with unit propagation and pure-literal elimination.
/// Unconstrained variables default to false in the witness.
inline DpllResult dpll(const Cnf& f) {
  DpllResult out;
  Assignment model(f.n, 0);
  if (detail::dpll_rec(f, model)) {
    out.verdict = Verdict::Sat;
    out.witness = model;
  }
  return out;
}

}  // namespace clifsat
