#pragma once

#include <cstdlib>
#include <string>

#include "error.hpp"

namespace cliffym {

// Upper bound on n = p + q. CLIFFORD_YM_NMAX overrides the default of 10.
inline int max_dimension() {
  if (const char* env = std::getenv("CLIFFORD_YM_NMAX")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 16) return static_cast<int>(v);
  }
  return 10;
}

// Metric diag(+1 x p, -1 x q). Generators are numbered 1..n in the API and
// occupy bits 0..n-1 of a blade mask.
class Signature {
 public:
  Signature() = default;
  Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw DomainError("signature counts must be nonnegative");
    if (n() < 1 || n() > max_dimension())
      throw DomainError("dimension n = " + std::to_string(n()) + " outside [1, " +
                        std::to_string(max_dimension()) + "]");
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  std::size_t blade_count() const { return std::size_t{1} << n(); }

  // eta^{aa} for 1-based generator index a.
  int metric(int a) const { return a <= p_ ? 1 : -1; }

  // Bits of generators that square to -e.
  unsigned negative_mask() const { return ((1u << n()) - 1u) & ~((1u << p_) - 1u); }

  std::string to_string() const { return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_ = 1;
  int q_ = 0;
};

}  // namespace cliffym
