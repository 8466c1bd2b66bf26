#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace clifsat {

// Default guard limits for the exact dense structures. They exist so a typo
// in n fails loudly instead of allocating gigabytes.
inline constexpr int kMaxVarsTruthTable = 26;  // 2^26-bit vector, 8 MiB
inline constexpr int kMaxVarsCoeffTable = 20;  // 2^20 signed 64-bit slots
inline constexpr int kMaxVarsClifford = 7;     // dense 2^n x 2^n matrices
inline constexpr int kMaxVarsOracle = 24;      // exhaustive enumeration

// Process-wide override, settable from the CLI (--max-n) and from the
// CLIFSAT_MAX_N environment variable. When set it replaces every default.
inline std::optional<int>& max_n_override() {
  static std::optional<int> value;
  return value;
}

inline int effective_max_n(int default_limit) {
  if (max_n_override()) return *max_n_override();
  static const std::optional<int> env = []() -> std::optional<int> {
    const char* s = std::getenv("CLIFSAT_MAX_N");
    if (s == nullptr || *s == '\0') return std::nullopt;
    return std::atoi(s);
  }();
  if (env) return *env;
  return default_limit;
}

inline void require_within_limit(int n, int default_limit, const char* what) {
  const int limit = effective_max_n(default_limit);
  if (n < 0 || n > limit) {
    throw std::domain_error(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds guard limit " + std::to_string(limit));
  }
}

}  // namespace clifsat
