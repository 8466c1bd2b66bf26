#pragma once

// Test-only reference machinery, kept independent of the code paths it
// checks: an alternative clause compilation that folds the OR rule literal
// by literal, eval-based equivalence, and exhaustive CNF enumeration.

#include <cstdint>
#include <functional>
#include <vector>

#include "clifsat/cnf.hpp"
#include "clifsat/truth_table.hpp"

namespace testsupport {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// The 3-variable, 5-clause unsatisfiable instance used across the suites.
inline clifsat::Cnf known_unsat_3var() {
  using clifsat::Literal;
  clifsat::Cnf f;
  f.n = 3;
  f.clauses = {
      clifsat::Clause{Literal::pos(1), Literal::neg(2)},
      clifsat::Clause{Literal::pos(2), Literal::pos(3)},
      clifsat::Clause{Literal::neg(1), Literal::neg(3)},
      clifsat::Clause{Literal::neg(1), Literal::neg(2), Literal::pos(3)},
      clifsat::Clause{Literal::pos(1), Literal::pos(2), Literal::neg(3)},
  };
  return f;
}

inline const char* known_unsat_3var_dimacs() {
  return "p cnf 3 5\n1 -2 0\n2 3 0\n-1 -3 0\n-1 -2 3 0\n1 2 -3 0\n";
}

/// Clause table by folding or(x, y) = x + y - x*y over the literals, in
/// integer-table arithmetic. Independent route from the product-of-
/// complements compilation.
inline clifsat::TruthTable or_fold_clause(int n, const clifsat::Clause& c) {
  clifsat::IntTable acc(n);  // starts as the empty disjunction: constant 0
  for (clifsat::Literal l : c.lits) {
    const clifsat::IntTable lit{clifsat::TruthTable::literal(n, l)};
    acc = acc + lit - acc * lit;
  }
  return acc.as_truth_table();
}

inline clifsat::TruthTable compile_or_fold(const clifsat::Cnf& f) {
  clifsat::TruthTable acc = clifsat::TruthTable::ones(f.n);
  for (const clifsat::Clause& c : f.clauses) acc &= or_fold_clause(f.n, c);
  return acc;
}

/// Logical equivalence by direct evaluation of both formulas everywhere.
inline bool logically_equivalent(const clifsat::Cnf& a, const clifsat::Cnf& b) {
  if (a.n != b.n) return false;
  const std::uint64_t total = std::uint64_t{1} << a.n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const clifsat::Assignment x(a.n, bits);
    if (eval(a, x) != eval(b, x)) return false;
  }
  return true;
}

/// Eval-based model count, bypassing both the oracle module and the tables.
inline std::uint64_t direct_model_count(const clifsat::Cnf& f) {
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << f.n;
  for (std::uint64_t bits = 0; bits < total; ++bits)
    if (eval(f, clifsat::Assignment(f.n, bits))) ++count;
  return count;
}

/// All normalized clauses over variables 1..n with 1..max_k literals:
/// distinct variables, each with either polarity.
inline std::vector<clifsat::Clause> all_normalized_clauses(int n, int max_k) {
  std::vector<clifsat::Clause> out;
  const int top = 1 << n;
  for (int vars = 1; vars < top; ++vars) {
    const int width = __builtin_popcount(static_cast<unsigned>(vars));
    if (width > max_k) continue;
    std::vector<int> members;
    for (int v = 1; v <= n; ++v)
      if ((vars >> (v - 1)) & 1) members.push_back(v);
    for (int pol = 0; pol < (1 << width); ++pol) {
      clifsat::Clause c;
      for (int j = 0; j < width; ++j)
        c.lits.emplace_back(members[static_cast<std::size_t>(j)], ((pol >> j) & 1) != 0);
      out.push_back(std::move(c));
    }
  }
  return out;
}

/// Calls fn on every CNF made of 1..max_m distinct normalized clauses.
inline void for_each_normalized_cnf(int n, int max_m, int max_k,
                                    const std::function<void(const clifsat::Cnf&)>& fn) {
  const std::vector<clifsat::Clause> pool = all_normalized_clauses(n, max_k);
  std::vector<std::size_t> pick;
  const std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) {
      clifsat::Cnf f;
      f.n = n;
      for (std::size_t idx : pick) f.clauses.push_back(pool[idx]);
      fn(f);
    }
    if (pick.size() == static_cast<std::size_t>(max_m)) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace testsupport
