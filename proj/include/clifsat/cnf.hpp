#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clifsat {

/// A variable (1-based) together with a polarity. Encodes to the usual
/// signed-integer convention: +v for the variable, -v for its complement.
struct Literal {
  int var = 0;
  bool positive = true;

  constexpr Literal() = default;
  constexpr Literal(int v, bool pos) : var(v), positive(pos) {}

  static constexpr Literal pos(int v) { return {v, true}; }
  static constexpr Literal neg(int v) { return {v, false}; }

  static Literal from_int(int code) {
    if (code == 0) throw std::invalid_argument("literal code 0");
    return {code < 0 ? -code : code, code > 0};
  }

  constexpr int to_int() const { return positive ? var : -var; }
  constexpr Literal negated() const { return {var, !positive}; }

  friend constexpr bool operator==(Literal a, Literal b) {
    return a.var == b.var && a.positive == b.positive;
  }
  friend constexpr bool operator<(Literal a, Literal b) {
    return a.var != b.var ? a.var < b.var : a.positive < b.positive;
  }
};

/// Disjunction of literals. An empty clause is the constant false.
struct Clause {
  std::vector<Literal> lits;

  Clause() = default;
  Clause(std::initializer_list<Literal> ls) : lits(ls) {}
  explicit Clause(std::vector<Literal> ls) : lits(std::move(ls)) {}

  bool empty() const { return lits.empty(); }
  std::size_t size() const { return lits.size(); }

  bool contains(Literal l) const {
    return std::find(lits.begin(), lits.end(), l) != lits.end();
  }
  bool mentions(int var) const {
    return std::any_of(lits.begin(), lits.end(),
                       [var](Literal l) { return l.var == var; });
  }
  /// True when some variable occurs in both polarities.
  bool tautological() const {
    for (Literal l : lits)
      if (contains(l.negated())) return true;
    return false;
  }

  /// Drops repeated literals, keeping first occurrences in order.
  void dedup_literals() {
    std::vector<Literal> out;
    out.reserve(lits.size());
    for (Literal l : lits)
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    lits = std::move(out);
  }

  /// Order-insensitive key: sorted signed codes.
  std::vector<int> canonical_key() const {
    std::vector<int> key;
    key.reserve(lits.size());
    for (Literal l : lits) key.push_back(l.to_int());
    std::sort(key.begin(), key.end(), [](int a, int b) {
      int va = a < 0 ? -a : a, vb = b < 0 ? -b : b;
      return va != vb ? va < vb : a < b;
    });
    return key;
  }

  friend bool operator==(const Clause& a, const Clause& b) {
    return a.canonical_key() == b.canonical_key();
  }
};

/// A CNF problem: conjunction of clauses over variables 1..n.
/// No clauses at all is the constant true; a clause with no literals makes
/// the whole problem the constant false.
struct Cnf {
  int n = 0;
  std::vector<Clause> clauses;

  Cnf() = default;
  Cnf(int vars, std::vector<Clause> cs) : n(vars), clauses(std::move(cs)) {}

  std::size_t num_clauses() const { return clauses.size(); }
  bool clause_free() const { return clauses.empty(); }
  bool has_empty_clause() const {
    return std::any_of(clauses.begin(), clauses.end(),
                       [](const Clause& c) { return c.empty(); });
  }
  bool mentions(int var) const {
    return std::any_of(clauses.begin(), clauses.end(),
                       [var](const Clause& c) { return c.mentions(var); });
  }

  void validate() const {
    for (const Clause& c : clauses)
      for (Literal l : c.lits)
        if (l.var < 1 || l.var > n)
          throw std::out_of_range("literal variable " + std::to_string(l.var) +
                                  " outside 1.." + std::to_string(n));
  }
};

/// Total assignment of variables 1..n; bit i-1 set means x_i is true.
struct Assignment {
  int n = 0;
  std::uint64_t bits = 0;

  Assignment() = default;
  Assignment(int vars, std::uint64_t b) : n(vars), bits(b) {
    if (vars < 0 || vars > 63)
      throw std::domain_error("assignment width must be 0..63");
  }

  bool value(int var) const {
    if (var < 1 || var > n) throw std::out_of_range("assignment variable");
    return (bits >> (var - 1)) & 1u;
  }
  Assignment with(int var, bool v) const {
    Assignment a = *this;
    const std::uint64_t m = std::uint64_t{1} << (var - 1);
    a.bits = v ? (a.bits | m) : (a.bits & ~m);
    return a;
  }
  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.n == b.n && a.bits == b.bits;
  }
};

inline bool eval(const Clause& c, const Assignment& a) {
  for (Literal l : c.lits)
    if (a.value(l.var) == l.positive) return true;
  return false;
}

/// True iff every clause holds under a.
inline bool eval(const Cnf& f, const Assignment& a) {
  if (a.n != f.n) throw std::invalid_argument("assignment width mismatch");
  for (const Clause& c : f.clauses)
    if (!eval(c, a)) return false;
  return true;
}

/// Removes duplicate literals, tautological clauses and duplicate clauses.
/// The result is logically equivalent to the input and keeps first-seen
/// clause order.
inline Cnf normalize(const Cnf& f) {
  Cnf out;
  out.n = f.n;
  std::vector<std::vector<int>> seen;
  for (const Clause& c : f.clauses) {
    Clause d = c;
    d.dedup_literals();
    if (d.tautological()) continue;
    std::vector<int> key = d.canonical_key();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    out.clauses.push_back(std::move(d));
  }
  return out;
}

/// Cofactor of f under x_v = value. Satisfied clauses are dropped, the
/// falsified literal is stripped from the rest. Variable indices are kept
/// as they are; v simply no longer occurs. A clause holding both polarities
/// of v is satisfied either way and is dropped.
inline Cnf restrict(const Cnf& f, int v, bool value) {
  if (v < 1 || v > f.n) throw std::out_of_range("restrict: variable index");
  Cnf out;
  out.n = f.n;
  const Literal satisfied{v, value};
  for (const Clause& c : f.clauses) {
    if (c.contains(satisfied)) continue;
    Clause d;
    d.lits.reserve(c.lits.size());
    for (Literal l : c.lits)
      if (l.var != v) d.lits.push_back(l);
    out.clauses.push_back(std::move(d));
  }
  return out;
}

struct ClauseSplit {
  Cnf s0;   // clauses mentioning neither polarity of v
  Cnf s1p;  // clauses that contained +v, with it removed
  Cnf s2p;  // clauses that contained -v, with it removed
};

/// Splits f by variable v so that the cofactors factor through the parts:
///   restrict(f,v,false) == s0 AND s1p     (as evaluation functions)
///   restrict(f,v,true)  == s0 AND s2p
/// Clauses holding both polarities of v are dropped (satisfied either way).
inline ClauseSplit clause_split(const Cnf& f, int v) {
  if (v < 1 || v > f.n) throw std::out_of_range("clause_split: variable index");
  ClauseSplit out;
  out.s0.n = out.s1p.n = out.s2p.n = f.n;
  for (const Clause& c : f.clauses) {
    const bool has_pos = c.contains(Literal::pos(v));
    const bool has_neg = c.contains(Literal::neg(v));
    if (has_pos && has_neg) continue;
    if (!has_pos && !has_neg) {
      out.s0.clauses.push_back(c);
      continue;
    }
    Clause d;
    d.lits.reserve(c.lits.size() - 1);
    for (Literal l : c.lits)
      if (l.var != v) d.lits.push_back(l);
    (has_pos ? out.s1p : out.s2p).clauses.push_back(std::move(d));
  }
  return out;
}

/// Conjunction; both inputs must share the same n.
inline Cnf conjoin(const Cnf& a, const Cnf& b) {
  if (a.n != b.n) throw std::invalid_argument("conjoin: width mismatch");
  Cnf out = a;
  out.clauses.insert(out.clauses.end(), b.clauses.begin(), b.clauses.end());
  return out;
}

/// Order-insensitive structural equality (clause multisets).
inline bool equal_mod_order(const Cnf& a, const Cnf& b) {
  if (a.n != b.n || a.clauses.size() != b.clauses.size()) return false;
  std::vector<std::vector<int>> ka, kb;
  ka.reserve(a.clauses.size());
  kb.reserve(b.clauses.size());
  for (const Clause& c : a.clauses) ka.push_back(c.canonical_key());
  for (const Clause& c : b.clauses) kb.push_back(c.canonical_key());
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

namespace detail {
// Portable bounded sampling: rejection on the raw 64-bit stream, so results
// do not depend on the standard library's distribution internals.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}
}  // namespace detail

/// Seeded random k-SAT: m clauses, each over k distinct variables with
/// independent uniform polarities. Duplicate clauses are allowed.
inline Cnf random_ksat(int n, int m, int k, std::uint64_t seed) {
  if (k < 1 || k > n) throw std::invalid_argument("random_ksat: need 1 <= k <= n");
  if (m < 0) throw std::invalid_argument("random_ksat: negative m");
  std::mt19937_64 rng(seed);
  Cnf f;
  f.n = n;
  f.clauses.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    Clause c;
    while (c.lits.size() < static_cast<std::size_t>(k)) {
      const int var = static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(n))) + 1;
      if (c.mentions(var)) continue;
      c.lits.emplace_back(var, (rng() & 1u) != 0);
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

// ---------------------------------------------------------------------------
// DIMACS CNF text format
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

namespace detail {

struct DimacsScanner {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_line() {
    while (!eof() && peek() != '\n') advance();
  }
  // Skips whitespace (CRLF included) and comment lines. Returns false at EOF
  // or at a '%' end marker.
  bool skip_to_token() {
    while (!eof()) {
      const char ch = peek();
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        advance();
      } else if (ch == 'c') {
        skip_line();
      } else if (ch == '%') {
        return false;
      } else {
        return true;
      }
    }
    return false;
  }
  // Whitespace only; used inside the header where "cnf" must not be taken
  // for a comment.
  bool skip_ws() {
    while (!eof()) {
      const char ch = peek();
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n')
        advance();
      else
        return true;
    }
    return false;
  }
};

}  // namespace detail

/// Parses DIMACS CNF text. Literals inside a clause are deduplicated. A
/// clause count differing from the header is a warning (appended to
/// `warnings` when given), not an error.
inline Cnf parse_dimacs(std::string_view text,
                        std::vector<std::string>* warnings = nullptr) {
  detail::DimacsScanner sc{text};
  bool header_seen = false;
  long declared_vars = 0, declared_clauses = 0;

  auto read_int = [&](long& out) {
    const int tline = sc.line, tcol = sc.col;
    bool negative = false;
    if (!sc.eof() && (sc.peek() == '-' || sc.peek() == '+')) {
      negative = sc.peek() == '-';
      sc.advance();
    }
    if (sc.eof() || sc.peek() < '0' || sc.peek() > '9')
      throw ParseError("expected integer", tline, tcol);
    long magnitude = 0;
    while (!sc.eof() && sc.peek() >= '0' && sc.peek() <= '9') {
      magnitude = magnitude * 10 + (sc.peek() - '0');
      if (magnitude > (1L << 40)) throw ParseError("integer out of range", tline, tcol);
      sc.advance();
    }
    if (!sc.eof()) {
      const char ch = sc.peek();
      if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n')
        throw ParseError("non-integer token", tline, tcol);
    }
    if (negative && magnitude == 0)
      throw ParseError("variable index 0", tline, tcol);
    out = negative ? -magnitude : magnitude;
    return std::pair<int, int>{tline, tcol};
  };

  auto expect_word = [&](std::string_view word) {
    const int tline = sc.line, tcol = sc.col;
    for (char expected : word) {
      if (sc.eof() || sc.peek() != expected)
        throw ParseError("malformed header", tline, tcol);
      sc.advance();
    }
  };

  Cnf f;
  Clause current;
  bool in_clause = false;
  int clause_line = 1, clause_col = 1;

  while (sc.skip_to_token()) {
    if (sc.peek() == 'p') {
      if (header_seen) throw ParseError("duplicate header", sc.line, sc.col);
      expect_word("p");
      if (!sc.skip_ws()) throw ParseError("malformed header", sc.line, sc.col);
      expect_word("cnf");
      if (!sc.skip_ws()) throw ParseError("malformed header", sc.line, sc.col);
      read_int(declared_vars);
      if (!sc.skip_ws()) throw ParseError("malformed header", sc.line, sc.col);
      read_int(declared_clauses);
      if (declared_vars < 0 || declared_clauses < 0 || declared_vars > 1000000000)
        throw ParseError("malformed header", sc.line, sc.col);
      header_seen = true;
      f.n = static_cast<int>(declared_vars);
      continue;
    }
    long value = 0;
    const auto [tline, tcol] = read_int(value);
    if (!header_seen) throw ParseError("clause data before header", tline, tcol);
    if (value == 0) {
      current.dedup_literals();
      f.clauses.push_back(std::move(current));
      current = Clause{};
      in_clause = false;
      continue;
    }
    const long var = value < 0 ? -value : value;
    if (var > declared_vars)
      throw ParseError("variable index " + std::to_string(var) + " exceeds declared " +
                           std::to_string(declared_vars),
                       tline, tcol);
    if (!in_clause) {
      in_clause = true;
      clause_line = tline;
      clause_col = tcol;
    }
    current.lits.push_back(Literal::from_int(static_cast<int>(value)));
  }
  if (in_clause) throw ParseError("unterminated clause", clause_line, clause_col);
  if (!header_seen) throw ParseError("missing header", sc.line, sc.col);
  if (warnings != nullptr &&
      static_cast<long>(f.clauses.size()) != declared_clauses) {
    warnings->push_back("header declares " + std::to_string(declared_clauses) +
                        " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

/// Serializes f in DIMACS CNF form, LF line endings.
inline std::string write_dimacs(const Cnf& f) {
  std::string out = "p cnf " + std::to_string(f.n) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const Clause& c : f.clauses) {
    for (Literal l : c.lits) {
      out += std::to_string(l.to_int());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

}  // namespace clifsat
