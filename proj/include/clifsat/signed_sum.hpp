#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "clifsat/cnf.hpp"
#include "clifsat/limits.hpp"
#include "clifsat/oracle.hpp"

// Signed sums of CNF problems and the recursive literal-elimination test:
// a sum is a scalar multiple of the constant-true function exactly when
// every single-variable elimination step maps it to the zero function. One
// elimination replaces each term S with its two cofactors, S|v=F minus
// S|v=T, doubling the term count. Satisfiable component problems certify
// asymmetry early; how hard we look for them is the detector level.

namespace clifsat {

enum class DetectorLevel { L0, L1, L2 };

/// L0 flags only clause-free problems as satisfiable. L1 adds unit
/// propagation and pure-literal elimination where they decide the problem
/// outright. L2 runs a full search on each term. Higher levels only add
/// detection power; they never flip a verdict a lower level already gives.
struct DetectorConfig {
  DetectorLevel level = DetectorLevel::L1;
};

enum class ProblemClass { TriviallyUnsat, Tautology, KnownSat, Unknown };

inline ProblemClass classify(const Cnf& f, DetectorConfig d) {
  if (f.clause_free()) return ProblemClass::Tautology;
  if (f.has_empty_clause()) return ProblemClass::TriviallyUnsat;
  switch (d.level) {
    case DetectorLevel::L0:
      return ProblemClass::Unknown;
    case DetectorLevel::L1: {
      Assignment scratch(f.n, 0);
      const Cnf g = detail::propagate(f, scratch);
      if (g.clause_free()) return ProblemClass::KnownSat;
      if (g.has_empty_clause()) return ProblemClass::TriviallyUnsat;
      return ProblemClass::Unknown;
    }
    case DetectorLevel::L2:
      return dpll(f).verdict == Verdict::Sat ? ProblemClass::KnownSat
                                             : ProblemClass::TriviallyUnsat;
  }
  return ProblemClass::Unknown;
}

struct SignedCnf {
  int sign = +1;  // +1 or -1
  Cnf problem;
};

/// Formal sum of +/- CNF problems over a shared variable universe, with the
/// set of variables not yet eliminated. Invariant: every literal of every
/// term uses a live variable.
struct SignedSum {
  int n = 0;
  std::vector<SignedCnf> terms;
  std::vector<int> live_vars;  // ascending

  static SignedSum of(const Cnf& f) {
    SignedSum s;
    s.n = f.n;
    s.terms.push_back({+1, f});
    s.live_vars.resize(static_cast<std::size_t>(f.n));
    for (int v = 1; v <= f.n; ++v) s.live_vars[static_cast<std::size_t>(v - 1)] = v;
    return s;
  }

  bool is_live(int v) const {
    return std::binary_search(live_vars.begin(), live_vars.end(), v);
  }
};

/// One elimination step: each term (s, S) becomes (s, S|v=F), (-s, S|v=T)
/// and v stops being live. Term count doubles exactly.
inline SignedSum eliminate(const SignedSum& sum, int v) {
  if (!sum.is_live(v)) throw std::invalid_argument("eliminate: variable not live");
  SignedSum out;
  out.n = sum.n;
  out.terms.reserve(sum.terms.size() * 2);
  for (const SignedCnf& t : sum.terms) {
    out.terms.push_back({t.sign, restrict(t.problem, v, false)});
    out.terms.push_back({-t.sign, restrict(t.problem, v, true)});
  }
  out.live_vars.reserve(sum.live_vars.size() - 1);
  for (int lv : sum.live_vars)
    if (lv != v) out.live_vars.push_back(lv);
  return out;
}

/// Drops terms the detector proves unsatisfiable — those are the zero
/// function and contribute nothing. Equal problems of opposite sign are
/// deliberately NOT cancelled: if such a problem is satisfiable, replacing
/// the pair by zero would swap an asymmetric value for a symmetric one.
inline SignedSum simplify(const SignedSum& sum,
                          DetectorConfig d = {DetectorLevel::L0}) {
  SignedSum out;
  out.n = sum.n;
  out.live_vars = sum.live_vars;
  for (const SignedCnf& t : sum.terms)
    if (classify(t.problem, d) != ProblemClass::TriviallyUnsat)
      out.terms.push_back(t);
  return out;
}

/// Removes equal problems of opposite sign pairwise. The sum's pointwise
/// value is unchanged, but a satisfiable pair is asymmetric evidence that a
/// zero is not, so the solver treats this as a non-faithful speed mode and
/// keeps it off by default.
inline SignedSum cancel_opposite_pairs(const SignedSum& sum) {
  std::vector<std::vector<std::vector<int>>> keys;  // canonical clause keys
  keys.reserve(sum.terms.size());
  for (const SignedCnf& t : sum.terms) {
    std::vector<std::vector<int>> key;
    key.reserve(t.problem.clauses.size());
    for (const Clause& c : t.problem.clauses) key.push_back(c.canonical_key());
    std::sort(key.begin(), key.end());
    keys.push_back(std::move(key));
  }
  std::vector<bool> dropped(sum.terms.size(), false);
  for (std::size_t i = 0; i < sum.terms.size(); ++i) {
    if (dropped[i]) continue;
    for (std::size_t j = i + 1; j < sum.terms.size(); ++j) {
      if (dropped[j] || sum.terms[i].sign == sum.terms[j].sign) continue;
      if (keys[i] == keys[j]) {
        dropped[i] = dropped[j] = true;
        break;
      }
    }
  }
  SignedSum out;
  out.n = sum.n;
  out.live_vars = sum.live_vars;
  for (std::size_t i = 0; i < sum.terms.size(); ++i)
    if (!dropped[i]) out.terms.push_back(sum.terms[i]);
  return out;
}

/// Value of a variable-free sum: tautology terms contribute their sign,
/// empty-clause terms contribute nothing.
inline long long scalar_value(const SignedSum& sum) {
  if (!sum.live_vars.empty())
    throw std::logic_error("scalar_value: live variables remain");
  long long acc = 0;
  for (const SignedCnf& t : sum.terms) {
    if (t.problem.clause_free())
      acc += t.sign;
    else if (!t.problem.has_empty_clause())
      throw std::logic_error("scalar_value: non-trivial term");
  }
  return acc;
}

/// Pointwise value of the sum at a full-width assignment; this is the
/// coefficient of the sum's table at a. Dead variables never occur in any
/// clause, so only live positions of a matter.
inline long long eval_sigma(const SignedSum& sum, const Assignment& a) {
  if (a.n != sum.n) throw std::invalid_argument("eval_sigma: width mismatch");
  long long acc = 0;
  for (const SignedCnf& t : sum.terms)
    if (eval(t.problem, a)) acc += t.sign;
  return acc;
}

/// Reference check by exhaustive evaluation over the live variables:
/// returns the constant when the sum is one, nullopt otherwise.
inline std::optional<long long> constant_value(const SignedSum& sum) {
  require_within_limit(static_cast<int>(sum.live_vars.size()), kMaxVarsTruthTable,
                       "constant_value");
  const std::uint64_t combos = std::uint64_t{1} << sum.live_vars.size();
  std::optional<long long> value;
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    Assignment a(sum.n, 0);
    for (std::size_t r = 0; r < sum.live_vars.size(); ++r)
      if ((mask >> r) & 1u) a = a.with(sum.live_vars[r], true);
    const long long v = eval_sigma(sum, a);
    if (!value)
      value = v;
    else if (*value != v)
      return std::nullopt;
  }
  return value;
}

enum class PickHeuristic { MaxOccurrence, LowestIndex };

enum class ExitKind { EmptySum, ScalarZero, ScalarNonzero, SatTermFound };

struct TraceLevel {
  int var = 0;                 // variable eliminated to reach the next level
  std::size_t terms_before = 0;  // before simplification
  std::size_t terms_after = 0;   // after simplification
};

struct SolveTrace {
  std::vector<TraceLevel> levels;
  ExitKind exit = ExitKind::EmptySum;
  long long scalar = 0;  // meaningful for the scalar exits
};

namespace detail {

inline std::vector<std::size_t> occurrence_counts(const SignedSum& sum) {
  std::vector<std::size_t> occ(static_cast<std::size_t>(sum.n) + 1, 0);
  for (const SignedCnf& t : sum.terms)
    for (const Clause& c : t.problem.clauses)
      for (Literal l : c.lits) ++occ[static_cast<std::size_t>(l.var)];
  return occ;
}

inline int pick_variable(const SignedSum& sum, const std::vector<std::size_t>& occ,
                         PickHeuristic h) {
  int best = 0;
  std::size_t best_count = 0;
  for (int v : sum.live_vars) {
    const std::size_t c = occ[static_cast<std::size_t>(v)];
    if (c == 0) continue;  // absent variables are deferred
    if (h == PickHeuristic::LowestIndex) return v;
    if (c > best_count) {
      best = v;
      best_count = c;
    }
  }
  return best;
}

}  // namespace detail

/// Recursive elimination test. Returns true when the sum is certified (or,
/// with a cheap detector, claimed) different from every scalar multiple of
/// the constant-true function, false when it collapses to one.
///
/// Per round: simplify, exit false on the empty sum; once no live variable
/// occurs anywhere the surviving terms are all clause-free, so the sum is a
/// known scalar and its value decides; otherwise any term the detector
/// certifies satisfiable proves asymmetry; else eliminate the picked
/// variable and continue. Terminates because the live set shrinks.
inline bool detect_asymmetry(SignedSum sum, DetectorConfig d = {},
                             PickHeuristic h = PickHeuristic::MaxOccurrence,
                             SolveTrace* trace = nullptr,
                             bool cancel_pairs = false) {
  if (trace != nullptr) *trace = SolveTrace{};
  for (;;) {
    const std::size_t before = sum.terms.size();
    sum = simplify(sum, d);
    if (cancel_pairs) sum = cancel_opposite_pairs(sum);
    const std::size_t after = sum.terms.size();

    if (sum.terms.empty()) {
      if (trace != nullptr) {
        trace->levels.push_back({0, before, after});
        trace->exit = ExitKind::EmptySum;
      }
      return false;
    }

    const std::vector<std::size_t> occ = detail::occurrence_counts(sum);
    const bool any_live_occurs =
        std::any_of(sum.live_vars.begin(), sum.live_vars.end(),
                    [&occ](int v) { return occ[static_cast<std::size_t>(v)] > 0; });
    if (!any_live_occurs) {
      // every surviving clause would need a live literal, so none has any:
      // all terms are clause-free tautologies
      long long value = 0;
      for (const SignedCnf& t : sum.terms) value += t.sign;
      if (trace != nullptr) {
        trace->levels.push_back({0, before, after});
        trace->exit = value == 0 ? ExitKind::ScalarZero : ExitKind::ScalarNonzero;
        trace->scalar = value;
      }
      return value != 0;
    }

    for (const SignedCnf& t : sum.terms) {
      const ProblemClass c = classify(t.problem, d);
      if (c == ProblemClass::Tautology || c == ProblemClass::KnownSat) {
        if (trace != nullptr) {
          trace->levels.push_back({0, before, after});
          trace->exit = ExitKind::SatTermFound;
        }
        return true;
      }
    }

    const int v = detail::pick_variable(sum, occ, h);
    if (trace != nullptr) trace->levels.push_back({v, before, after});
    sum = eliminate(sum, v);
  }
}

/// Unsatisfiability test for a single nonempty normalized problem: the
/// problem is unsatisfiable exactly when its signed sum stays scalar all
/// the way down. Clause-free input is rejected — the scalar criterion
/// cannot tell the constant-true problem from the constant-false one.
inline Verdict solve_symmetry(const Cnf& f, DetectorConfig d = {},
                              PickHeuristic h = PickHeuristic::MaxOccurrence,
                              SolveTrace* trace = nullptr,
                              bool cancel_pairs = false) {
  const Cnf g = normalize(f);
  if (g.clause_free())
    throw std::invalid_argument("solve_symmetry: clause-free after normalization");
  return detect_asymmetry(SignedSum::of(g), d, h, trace, cancel_pairs)
             ? Verdict::Sat
             : Verdict::Unsat;
}

/// The stricter recursion this method relaxes: a problem is unsatisfiable
/// iff both cofactors are, with the trivial base cases.
inline Verdict solve_exact_recursion(const Cnf& f) {
  if (f.clause_free()) return Verdict::Sat;
  if (f.has_empty_clause()) return Verdict::Unsat;
  int v = 0;
  for (int cand = 1; cand <= f.n && v == 0; ++cand)
    if (f.mentions(cand)) v = cand;
  if (solve_exact_recursion(restrict(f, v, false)) == Verdict::Sat) return Verdict::Sat;
  return solve_exact_recursion(restrict(f, v, true));
}

}  // namespace clifsat
