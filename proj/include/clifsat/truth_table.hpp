#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clifsat/cnf.hpp"
#include "clifsat/limits.hpp"

// Dense realization of the commutative algebra spanned by the one-hot
// indicator of each assignment. A Boolean function lives in the 0/1 subset
// (TruthTable); general elements carry signed integer coefficients
// (IntTable). Index convention: assignment index a has bit i-1 equal to x_i,
// so variable 1 is the least significant bit.

namespace clifsat {

namespace detail {

inline constexpr std::uint64_t kVarMaskPos[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

inline std::uint64_t flip_word(std::uint64_t w, int k) {
  const int s = 1 << k;
  const std::uint64_t pos = kVarMaskPos[k];
  return ((w & pos) >> s) | ((w & ~pos) << s);
}

}  // namespace detail

/// 2^n-bit vector over assignments; bit a set means the function is true at
/// assignment a. This is exactly the 0/1-coefficient subset of the algebra.
class TruthTable {
 public:
  explicit TruthTable(int n) : n_(n) {
    require_within_limit(n, kMaxVarsTruthTable, "TruthTable");
    w_.assign(num_blocks(n), 0);
  }

  static TruthTable zeros(int n) { return TruthTable(n); }
  static TruthTable ones(int n) {
    TruthTable t(n);
    for (auto& w : t.w_) w = ~std::uint64_t{0};
    t.mask_tail();
    return t;
  }

  /// Table of a single literal: the assignments where it holds. Exactly half
  /// the bits are set.
  static TruthTable literal(int n, Literal lit) {
    if (lit.var < 1 || lit.var > n)
      throw std::out_of_range("literal variable outside 1..n");
    TruthTable t(n);
    const int k = lit.var - 1;
    if (k < 6) {
      const std::uint64_t pattern =
          lit.positive ? detail::kVarMaskPos[k] : ~detail::kVarMaskPos[k];
      for (auto& w : t.w_) w = pattern;
    } else {
      const std::uint64_t stride = std::uint64_t{1} << (k - 6);
      for (std::uint64_t b = 0; b < t.w_.size(); ++b)
        if (((b & stride) != 0) == lit.positive) t.w_[b] = ~std::uint64_t{0};
    }
    t.mask_tail();
    return t;
  }

  int num_vars() const { return n_; }
  std::uint64_t num_bits() const { return std::uint64_t{1} << n_; }

  bool bit(std::uint64_t a) const {
    return (w_[a >> 6] >> (a & 63)) & 1u;
  }
  void set_bit(std::uint64_t a, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (a & 63);
    if (v)
      w_[a >> 6] |= m;
    else
      w_[a >> 6] &= ~m;
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (std::uint64_t w : w_)
      if (w != 0) return false;
    return true;
  }
  bool all() const { return *this == ones(n_); }

  TruthTable& operator&=(const TruthTable& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  TruthTable& operator|=(const TruthTable& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  TruthTable& operator^=(const TruthTable& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
  friend TruthTable operator|(TruthTable a, const TruthTable& b) { return a |= b; }
  friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
  friend TruthTable operator~(TruthTable a) {
    for (auto& w : a.w_) w = ~w;
    a.mask_tail();
    return a;
  }
  friend bool operator==(const TruthTable& a, const TruthTable& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  /// Swaps the two half-spaces of variable `var`: bit a moves to a with bit
  /// var-1 flipped. Involution, and multiplicative over &.
  TruthTable flipped(int var) const {
    check_var(var);
    TruthTable out(n_);
    const int k = var - 1;
    if (k < 6) {
      for (std::size_t i = 0; i < w_.size(); ++i)
        out.w_[i] = detail::flip_word(w_[i], k);
    } else {
      const std::uint64_t stride = std::uint64_t{1} << (k - 6);
      for (std::uint64_t b = 0; b < w_.size(); ++b)
        out.w_[b] = w_[b ^ stride];
    }
    return out;
  }

  /// Equivalent to flipped(var) == *this, without the copy.
  bool symmetric_in(int var) const {
    check_var(var);
    const int k = var - 1;
    if (k < 6) {
      for (std::uint64_t w : w_)
        if (w != detail::flip_word(w, k)) return false;
      return true;
    }
    const std::uint64_t stride = std::uint64_t{1} << (k - 6);
    for (std::uint64_t b = 0; b < w_.size(); ++b)
      if ((b & stride) == 0 && w_[b] != w_[b | stride]) return false;
    return true;
  }

  /// Big-endian hex dump: most significant nibble of the 2^n-bit vector
  /// first, ceil(2^n / 4) digits.
  std::string to_hex() const {
    const std::uint64_t nibbles = (num_bits() + 3) / 4;
    std::string out(nibbles, '0');
    for (std::uint64_t i = 0; i < nibbles; ++i) {
      const std::uint64_t low_bit = 4 * (nibbles - 1 - i);
      unsigned v = 0;
      for (unsigned j = 0; j < 4; ++j) {
        const std::uint64_t a = low_bit + j;
        if (a < num_bits() && bit(a)) v |= 1u << j;
      }
      out[i] = "0123456789abcdef"[v];
    }
    return out;
  }

  static TruthTable from_hex(int n, std::string_view hex) {
    TruthTable t(n);
    const std::uint64_t nibbles = (t.num_bits() + 3) / 4;
    if (hex.size() != nibbles)
      throw std::invalid_argument("hex length mismatch for n");
    for (std::uint64_t i = 0; i < nibbles; ++i) {
      const char ch = hex[i];
      unsigned v;
      if (ch >= '0' && ch <= '9')
        v = static_cast<unsigned>(ch - '0');
      else if (ch >= 'a' && ch <= 'f')
        v = static_cast<unsigned>(ch - 'a') + 10;
      else if (ch >= 'A' && ch <= 'F')
        v = static_cast<unsigned>(ch - 'A') + 10;
      else
        throw std::invalid_argument("bad hex digit");
      const std::uint64_t low_bit = 4 * (nibbles - 1 - i);
      for (unsigned j = 0; j < 4; ++j) {
        const std::uint64_t a = low_bit + j;
        if ((v >> j) & 1u) {
          if (a >= t.num_bits()) throw std::invalid_argument("hex sets bit beyond 2^n");
          t.set_bit(a);
        }
      }
    }
    return t;
  }

 private:
  static std::size_t num_blocks(int n) {
    return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
  }
  void mask_tail() {
    if (n_ < 6) w_[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
  }
  void check_same(const TruthTable& o) const {
    if (n_ != o.n_) throw std::invalid_argument("truth table width mismatch");
  }
  void check_var(int var) const {
    if (var < 1 || var > n_) throw std::out_of_range("variable index");
  }

  int n_;
  std::vector<std::uint64_t> w_;
};

namespace detail {

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("table coefficient overflow (add)");
  return r;
}
inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("table coefficient overflow (sub)");
  return r;
}
inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("table coefficient overflow (mul)");
  return r;
}

}  // namespace detail

/// 2^n signed integer coefficients over the assignment basis. The basis
/// product is pointwise, so all arithmetic here is componentwise; overflow
/// throws instead of wrapping.
class IntTable {
 public:
  explicit IntTable(int n) : n_(n) {
    require_within_limit(n, kMaxVarsCoeffTable, "IntTable");
    c_.assign(std::size_t{1} << n, 0);
  }
  /// Embedding of the 0/1 subset.
  explicit IntTable(const TruthTable& t) : IntTable(t.num_vars()) {
    for (std::uint64_t a = 0; a < t.num_bits(); ++a)
      if (t.bit(a)) c_[a] = 1;
  }

  int num_vars() const { return n_; }
  std::uint64_t size() const { return c_.size(); }
  long long operator[](std::uint64_t a) const { return c_[a]; }
  long long& operator[](std::uint64_t a) { return c_[a]; }

  friend IntTable operator+(const IntTable& a, const IntTable& b) {
    a.check_same(b);
    IntTable out(a.n_);
    for (std::uint64_t i = 0; i < a.size(); ++i)
      out.c_[i] = detail::checked_add(a.c_[i], b.c_[i]);
    return out;
  }
  friend IntTable operator-(const IntTable& a, const IntTable& b) {
    a.check_same(b);
    IntTable out(a.n_);
    for (std::uint64_t i = 0; i < a.size(); ++i)
      out.c_[i] = detail::checked_sub(a.c_[i], b.c_[i]);
    return out;
  }
  friend IntTable operator*(const IntTable& a, const IntTable& b) {
    a.check_same(b);
    IntTable out(a.n_);
    for (std::uint64_t i = 0; i < a.size(); ++i)
      out.c_[i] = detail::checked_mul(a.c_[i], b.c_[i]);
    return out;
  }
  friend bool operator==(const IntTable& a, const IntTable& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  IntTable flipped(int var) const {
    if (var < 1 || var > n_) throw std::out_of_range("variable index");
    IntTable out(n_);
    const std::uint64_t m = std::uint64_t{1} << (var - 1);
    for (std::uint64_t a = 0; a < size(); ++a) out.c_[a] = c_[a ^ m];
    return out;
  }

  bool is_idempotent() const {
    for (long long v : c_)
      if (v != 0 && v != 1) return false;
    return true;
  }

  /// Back to the 0/1 subset; throws when a coefficient is outside {0,1}.
  TruthTable as_truth_table() const {
    if (!is_idempotent())
      throw std::domain_error("coefficients outside {0,1}");
    TruthTable t(n_);
    for (std::uint64_t a = 0; a < size(); ++a)
      if (c_[a] == 1) t.set_bit(a);
    return t;
  }

 private:
  void check_same(const IntTable& o) const {
    if (n_ != o.n_) throw std::invalid_argument("table width mismatch");
  }

  int n_;
  std::vector<long long> c_;
};

// -- named operations ------------------------------------------------------

inline TruthTable literal_elem(int n, Literal lit) {
  return TruthTable::literal(n, lit);
}

inline TruthTable complement(const TruthTable& s) { return ~s; }

/// The gap to the constant-true function: delta = ones - s. All-ones here
/// certifies unsatisfiability of whatever s compiles.
inline TruthTable delta_of(const TruthTable& s) { return ~s; }

/// Compiles a CNF to its table as a product of clause factors, each clause
/// entering as (ones - z) where z is the conjunction of the complemented
/// literals. Bit a ends up set exactly when assignment a satisfies f.
inline TruthTable compile_cnf(const Cnf& f) {
  require_within_limit(f.n, kMaxVarsTruthTable, "compile_cnf");
  TruthTable acc = TruthTable::ones(f.n);
  for (const Clause& c : f.clauses) {
    TruthTable z = TruthTable::ones(f.n);
    for (Literal l : c.lits) z &= TruthTable::literal(f.n, l.negated());
    acc &= ~z;
  }
  return acc;
}

inline TruthTable reflect(const TruthTable& t, int var) { return t.flipped(var); }
inline IntTable reflect(const IntTable& t, int var) { return t.flipped(var); }

/// Invariance under every variable flip. For a nonempty normalized problem
/// this holds exactly when the problem is unsatisfiable.
inline bool is_symmetric_all(const TruthTable& s) {
  for (int v = 1; v <= s.num_vars(); ++v)
    if (!s.symmetric_in(v)) return false;
  return true;
}

inline bool is_idempotent(const IntTable& x) { return x.is_idempotent(); }

inline TruthTable project(const TruthTable& x, Literal lit) {
  return x & TruthTable::literal(x.num_vars(), lit);
}
inline IntTable project(const IntTable& x, Literal lit) {
  return IntTable(TruthTable::literal(x.num_vars(), lit)) * x;
}

/// Satisfying assignments, in index order.
inline std::vector<Assignment> dnf_terms(const TruthTable& s) {
  std::vector<Assignment> out;
  for (std::uint64_t a = 0; a < s.num_bits(); ++a)
    if (s.bit(a)) out.emplace_back(s.num_vars(), a);
  return out;
}

inline std::uint64_t count_models(const TruthTable& s) { return s.count(); }

/// Satisfiability read off the complement: the product of all coefficients
/// of delta = ones - s vanishes exactly when s has a set bit. Realized as a
/// determinant of the diagonal matrix delta would embed to.
inline bool satisfiable_via_det(const TruthTable& s) {
  const TruthTable delta = delta_of(s);
  return !delta.all();  // some diagonal entry of delta is 0
}

}  // namespace clifsat
