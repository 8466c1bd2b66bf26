#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clifsat/limits.hpp"
#include "clifsat/truth_table.hpp"

// Small-n dense matrix model of the real Clifford algebra with neutral
// signature, built from a tensor ladder of 2x2 blocks. Used to certify that
// the truth-table shortcuts (variable flip, pointwise product) match genuine
// matrix conjugation and the generator relations. All arithmetic is exact:
// scalars are integers times a power of two.

namespace clifsat {

/// Exact dyadic rational num * 2^exp, kept with num odd (or zero).
struct Dyadic {
  long long num = 0;
  int exp = 0;

  Dyadic() = default;
  Dyadic(long long i) : num(i) { normalize(); }  // NOLINT: implicit by design
  Dyadic(long long n, int e) : num(n), exp(e) { normalize(); }

  static Dyadic half() { return Dyadic(1, -1); }

  bool is_zero() const { return num == 0; }

  void normalize() {
    if (num == 0) {
      exp = 0;
      return;
    }
    while ((num & 1) == 0) {
      num >>= 1;
      ++exp;
    }
  }

  friend Dyadic operator+(Dyadic a, Dyadic b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int e = a.exp < b.exp ? a.exp : b.exp;
    return Dyadic(detail::checked_add(shifted(a.num, a.exp - e),
                                      shifted(b.num, b.exp - e)),
                  e);
  }
  friend Dyadic operator-(Dyadic a) { return Dyadic(-a.num, a.exp); }
  friend Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }
  friend Dyadic operator*(Dyadic a, Dyadic b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(detail::checked_mul(a.num, b.num), a.exp + b.exp);
  }
  friend bool operator==(Dyadic a, Dyadic b) {
    return a.num == b.num && a.exp == b.exp;
  }

  /// True when the value is an integer (exp >= 0 after normalization).
  bool is_integer() const { return num == 0 || exp >= 0; }

  std::string str() const {
    if (exp >= 0) return std::to_string(shifted(num, exp));
    return std::to_string(num) + "/" + std::to_string(shifted(1, -exp));
  }

 private:
  static long long shifted(long long v, int k) {
    for (int i = 0; i < k; ++i) v = detail::checked_mul(v, 2);
    return v;
  }
};

/// Dense square matrix of dyadic rationals.
class DyadicMatrix {
 public:
  explicit DyadicMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

  static DyadicMatrix identity(int dim) {
    DyadicMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Dyadic(1);
    return m;
  }

  int dim() const { return dim_; }
  Dyadic& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Dyadic& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }

  friend DyadicMatrix operator+(const DyadicMatrix& x, const DyadicMatrix& y) {
    x.check_same(y);
    DyadicMatrix out(x.dim_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] + y.a_[i];
    return out;
  }
  friend DyadicMatrix operator-(const DyadicMatrix& x, const DyadicMatrix& y) {
    x.check_same(y);
    DyadicMatrix out(x.dim_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
    return out;
  }
  friend DyadicMatrix operator-(const DyadicMatrix& x) {
    DyadicMatrix out(x.dim_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = -x.a_[i];
    return out;
  }
  friend DyadicMatrix operator*(Dyadic s, const DyadicMatrix& x) {
    DyadicMatrix out(x.dim_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = s * x.a_[i];
    return out;
  }
  friend DyadicMatrix operator*(const DyadicMatrix& x, const DyadicMatrix& y) {
    x.check_same(y);
    DyadicMatrix out(x.dim_);
    for (int r = 0; r < x.dim_; ++r)
      for (int k = 0; k < x.dim_; ++k) {
        const Dyadic v = x.at(r, k);
        if (v.is_zero()) continue;
        for (int c = 0; c < x.dim_; ++c) {
          const Dyadic w = y.at(k, c);
          if (!w.is_zero()) out.at(r, c) = out.at(r, c) + v * w;
        }
      }
    return out;
  }
  friend bool operator==(const DyadicMatrix& x, const DyadicMatrix& y) {
    return x.dim_ == y.dim_ && x.a_ == y.a_;
  }

  static DyadicMatrix kron(const DyadicMatrix& x, const DyadicMatrix& y) {
    DyadicMatrix out(x.dim_ * y.dim_);
    for (int rx = 0; rx < x.dim_; ++rx)
      for (int cx = 0; cx < x.dim_; ++cx) {
        const Dyadic v = x.at(rx, cx);
        if (v.is_zero()) continue;
        for (int ry = 0; ry < y.dim_; ++ry)
          for (int cy = 0; cy < y.dim_; ++cy)
            out.at(rx * y.dim_ + ry, cx * y.dim_ + cy) = v * y.at(ry, cy);
      }
    return out;
  }

  bool is_diagonal() const {
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        if (r != c && !at(r, c).is_zero()) return false;
    return true;
  }
  bool is_zero() const {
    for (const Dyadic& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  void check_same(const DyadicMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  }

  int dim_;
  std::vector<Dyadic> a_;
};

namespace detail {

// 2x2 building blocks: sigma^2 = I, eps^2 = -I, tau = sigma * eps.
inline DyadicMatrix block_sigma() {
  DyadicMatrix m(2);
  m.at(0, 1) = Dyadic(1);
  m.at(1, 0) = Dyadic(1);
  return m;
}
inline DyadicMatrix block_eps() {
  DyadicMatrix m(2);
  m.at(0, 1) = Dyadic(-1);
  m.at(1, 0) = Dyadic(1);
  return m;
}
inline DyadicMatrix block_tau() {
  DyadicMatrix m(2);
  m.at(0, 0) = Dyadic(1);
  m.at(1, 1) = Dyadic(-1);
  return m;
}

}  // namespace detail

/// Matrix model for n variables: 2n generators, the null (Witt) vectors
/// built from generator pairs, and the embedding of coefficient tables as
/// diagonal matrices. Everything is derived from the generator matrices, so
/// the identities checked downstream are genuine matrix identities.
class CliffordModel {
 public:
  static CliffordModel make(int n) {
    require_within_limit(n, kMaxVarsClifford, "CliffordModel");
    CliffordModel m;
    m.n_ = n;
    m.dim_ = 1 << n;
    m.gamma_.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      m.gamma_.push_back(ladder(n, i, detail::block_sigma()));
      m.gamma_.push_back(ladder(n, i, detail::block_eps()));
    }
    for (int i = 1; i <= n; ++i) {
      // p = (g_{2i-1} + g_{2i})/2, q = (g_{2i-1} - g_{2i})/2
      m.p_.push_back(Dyadic::half() * (m.gamma(2 * i - 1) + m.gamma(2 * i)));
      m.q_.push_back(Dyadic::half() * (m.gamma(2 * i - 1) - m.gamma(2 * i)));
    }
    for (int i = 1; i <= n; ++i) {
      m.rho_.push_back(m.q(i) * m.p(i));
      m.rho_bar_.push_back(m.p(i) * m.q(i));
    }
    return m;
  }

  int num_vars() const { return n_; }
  int dim() const { return dim_; }

  /// Generator, 1-based index in 1..2n.
  const DyadicMatrix& gamma(int i) const { return gamma_.at(check_gen(i) - 1); }
  const DyadicMatrix& p(int i) const { return p_.at(check_var(i) - 1); }
  const DyadicMatrix& q(int i) const { return q_.at(check_var(i) - 1); }
  /// Matrices of the positive / negative literal of variable i.
  const DyadicMatrix& rho(int i) const { return rho_.at(check_var(i) - 1); }
  const DyadicMatrix& rho_bar(int i) const { return rho_bar_.at(check_var(i) - 1); }

  std::vector<DyadicMatrix> generators() const { return gamma_; }

  /// Product of the anticommutators {q_i, p_i}; equals the identity matrix.
  DyadicMatrix identity_product() const {
    DyadicMatrix acc = DyadicMatrix::identity(dim_);
    for (int i = 1; i <= n_; ++i) acc = acc * (q(i) * p(i) + p(i) * q(i));
    return acc;
  }
  /// Product of the commutators [q_i, p_i]; equals gamma_1 ... gamma_{2n}.
  DyadicMatrix volume_product() const {
    DyadicMatrix acc = DyadicMatrix::identity(dim_);
    for (int i = 1; i <= n_; ++i) acc = acc * (q(i) * p(i) - p(i) * q(i));
    return acc;
  }
  DyadicMatrix gamma_product() const {
    DyadicMatrix acc = DyadicMatrix::identity(dim_);
    for (const DyadicMatrix& g : gamma_) acc = acc * g;
    return acc;
  }

  /// Indicator matrix of assignment a: the product over variables of the
  /// literal matrix matching a's value. One-hot diagonal in this model.
  DyadicMatrix assignment_idempotent(std::uint64_t a) const {
    DyadicMatrix acc = DyadicMatrix::identity(dim_);
    for (int i = 1; i <= n_; ++i)
      acc = acc * (((a >> (i - 1)) & 1u) ? rho(i) : rho_bar(i));
    return acc;
  }

  /// Linear extension of a -> assignment_idempotent(a). Multiplicative:
  /// embed(x*y) == embed(x) * embed(y).
  DyadicMatrix embed(const IntTable& x) const {
    if (x.num_vars() != n_) throw std::invalid_argument("embed: width mismatch");
    ensure_diag_cache();
    DyadicMatrix out(dim_);
    for (std::uint64_t a = 0; a < x.size(); ++a) {
      const long long coeff = x[a];
      if (coeff == 0) continue;
      std::vector<Dyadic> diag(static_cast<std::size_t>(dim_), Dyadic(1));
      for (int i = 1; i <= n_; ++i) {
        const std::vector<Dyadic>& factor =
            ((a >> (i - 1)) & 1u) ? rho_diag_[i - 1] : rho_bar_diag_[i - 1];
        for (int d = 0; d < dim_; ++d) diag[d] = diag[d] * factor[d];
      }
      for (int d = 0; d < dim_; ++d)
        out.at(d, d) = out.at(d, d) + Dyadic(coeff) * diag[d];
    }
    return out;
  }
  DyadicMatrix embed(const TruthTable& t) const { return embed(IntTable(t)); }

  /// Conjugation by generator i: gamma_i * x * gamma_i^{-1}. The inverse is
  /// +/- gamma_i since gamma_i^2 = +/- identity.
  DyadicMatrix conjugate(const DyadicMatrix& x, int i) const {
    const DyadicMatrix& g = gamma(i);
    const DyadicMatrix ginv = (i % 2 == 1) ? g : -g;
    return g * (x * ginv);
  }

 private:
  static DyadicMatrix ladder(int n, int slot, const DyadicMatrix& head) {
    // identity factors before `slot`, `head` at slot, tau factors after
    DyadicMatrix acc = DyadicMatrix::identity(1);
    for (int j = 1; j <= n; ++j) {
      const DyadicMatrix factor = (j < slot)   ? DyadicMatrix::identity(2)
                                  : (j == slot) ? head
                                                : detail::block_tau();
      acc = DyadicMatrix::kron(acc, factor);
    }
    return acc;
  }

  void ensure_diag_cache() const {
    if (!rho_diag_.empty()) return;
    for (int i = 1; i <= n_; ++i) {
      if (!rho(i).is_diagonal() || !rho_bar(i).is_diagonal())
        throw std::logic_error("literal matrices expected diagonal in this model");
      std::vector<Dyadic> dpos(static_cast<std::size_t>(dim_));
      std::vector<Dyadic> dneg(static_cast<std::size_t>(dim_));
      for (int d = 0; d < dim_; ++d) {
        dpos[d] = rho(i).at(d, d);
        dneg[d] = rho_bar(i).at(d, d);
      }
      rho_diag_.push_back(std::move(dpos));
      rho_bar_diag_.push_back(std::move(dneg));
    }
  }

  int check_gen(int i) const {
    if (i < 1 || i > 2 * n_) throw std::out_of_range("generator index");
    return i;
  }
  int check_var(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("variable index");
    return i;
  }

  int n_ = 0;
  int dim_ = 1;
  std::vector<DyadicMatrix> gamma_, p_, q_, rho_, rho_bar_;
  mutable std::vector<std::vector<Dyadic>> rho_diag_, rho_bar_diag_;
};

inline std::vector<DyadicMatrix> build_generators(int n) {
  return CliffordModel::make(n).generators();
}

struct WittBasis {
  std::vector<DyadicMatrix> p, q;
};

/// Null vectors from an even-sized generator list: p_i and q_i are the
/// half-sum and half-difference of the i-th generator pair.
inline WittBasis witt_basis(const std::vector<DyadicMatrix>& gens) {
  if (gens.size() % 2 != 0)
    throw std::invalid_argument("witt_basis: need an even number of generators");
  WittBasis out;
  for (std::size_t i = 0; i + 1 < gens.size(); i += 2) {
    out.p.push_back(Dyadic::half() * (gens[i] + gens[i + 1]));
    out.q.push_back(Dyadic::half() * (gens[i] - gens[i + 1]));
  }
  return out;
}

/// The two canonical products over the null-vector pairs: the anticommutator
/// product (equal to the identity matrix) and the commutator product (equal
/// to the ordered product of all generators).
inline std::pair<DyadicMatrix, DyadicMatrix> identity_and_omega(int n) {
  const CliffordModel m = CliffordModel::make(n);
  return {m.identity_product(), m.volume_product()};
}

// -- relation report ---------------------------------------------------------

struct RelationCheck {
  std::string identity;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct RelationReport {
  int n = 0;
  std::vector<RelationCheck> checks;

  bool all_passed() const {
    for (const RelationCheck& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Machine-checks the generator relations, the null-vector relations, the
/// identity/volume factorizations, the reflection action on literals, and —
/// on sample tables — that invariance under conjugation by every generator
/// singles out the two constant tables.
inline RelationReport verify_relations(int n, std::uint64_t sample_seed = 0x5eed) {
  const CliffordModel m = CliffordModel::make(n);
  RelationReport report;
  report.n = n;

  auto record = [&report](std::string name, bool ok, std::string witness = "") {
    report.checks.push_back({std::move(name), ok, ok ? "" : std::move(witness)});
  };

  const DyadicMatrix I = DyadicMatrix::identity(m.dim());

  {
    bool ok = true;
    std::string witness;
    for (int i = 1; i <= 2 * n && ok; ++i)
      for (int j = 1; j <= 2 * n && ok; ++j) {
        const DyadicMatrix anti = m.gamma(i) * m.gamma(j) + m.gamma(j) * m.gamma(i);
        const DyadicMatrix expect =
            (i == j) ? Dyadic((i % 2 == 1) ? 2 : -2) * I : DyadicMatrix(m.dim());
        if (!(anti == expect)) {
          ok = false;
          witness = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    record("generator anticommutation", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j) {
        const DyadicMatrix pp = m.p(i) * m.p(j) + m.p(j) * m.p(i);
        const DyadicMatrix qq = m.q(i) * m.q(j) + m.q(j) * m.q(i);
        const DyadicMatrix pq = m.p(i) * m.q(j) + m.q(j) * m.p(i);
        const DyadicMatrix zero(m.dim());
        if (!(pp == zero) || !(qq == zero) || !(pq == ((i == j) ? I : zero))) {
          ok = false;
          witness = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    record("null vector relations", ok, witness);
  }
  {
    record("identity factorization", m.identity_product() == I);
    record("volume factorization", m.volume_product() == m.gamma_product());
  }
  {
    // 2^n assignment idempotents: idempotent, mutually orthogonal, summing
    // to the identity.
    bool ok = true;
    std::string witness;
    DyadicMatrix sum(m.dim());
    std::vector<DyadicMatrix> idem;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n) && ok; ++a) {
      idem.push_back(m.assignment_idempotent(a));
      const DyadicMatrix& f = idem.back();
      if (!(f * f == f)) {
        ok = false;
        witness = "a=" + std::to_string(a) + " not idempotent";
      }
      sum = sum + f;
    }
    for (std::size_t a = 0; a < idem.size() && ok; ++a)
      for (std::size_t b = a + 1; b < idem.size() && ok; ++b)
        if (!(idem[a] * idem[b]).is_zero()) {
          ok = false;
          witness = "pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
    if (ok && !(sum == I)) {
      ok = false;
      witness = "sum != identity";
    }
    record("idempotent resolution of identity", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= 2 * n && ok; ++j) {
        const DyadicMatrix conj = m.conjugate(m.rho(i), j);
        const bool own = (j == 2 * i - 1) || (j == 2 * i);
        if (!(conj == (own ? m.rho_bar(i) : m.rho(i)))) {
          ok = false;
          witness = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    record("reflection action on literals", ok, witness);
  }
  {
    // centrality: full conjugation invariance only for the constants
    bool ok = true;
    std::string witness;
    std::mt19937_64 rng(sample_seed);
    std::vector<TruthTable> samples;
    samples.push_back(TruthTable::zeros(n));
    samples.push_back(TruthTable::ones(n));
    if (n >= 1) samples.push_back(TruthTable::literal(n, Literal::pos(1)));
    for (int s = 0; s < 8; ++s) {
      TruthTable t(n);
      for (std::uint64_t a = 0; a < t.num_bits(); ++a)
        if (rng() & 1u) t.set_bit(a);
      samples.push_back(std::move(t));
    }
    for (std::size_t s = 0; s < samples.size() && ok; ++s) {
      const TruthTable& t = samples[s];
      const DyadicMatrix e = m.embed(t);
      bool invariant = true;
      for (int j = 1; j <= 2 * n && invariant; ++j)
        if (!(m.conjugate(e, j) == e)) invariant = false;
      const bool constant = t.none() || t.all();
      if (invariant != constant) {
        ok = false;
        witness = "sample " + std::to_string(s);
      }
    }
    record("conjugation invariance picks out constants", ok, witness);
  }
  return report;
}

}  // namespace clifsat
