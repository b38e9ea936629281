#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace cliffym {

// SplitMix64. Used instead of <random> distributions so that every seeded
// choice is bit-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  // Independent stream derived from this seed and a tag.
  static Rng stream(std::uint64_t seed, std::uint64_t tag) {
    Rng r(seed ^ (0xD1B54A32D192ED03ull * (tag + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

inline double radical_inverse(std::uint64_t index, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

struct SampleBox {
  double lo = -1.0;
  double hi = 1.0;
};

// The box center (the origin for the default box) followed by `count` Halton points (one prime base per
// coordinate) with a seeded Cranley-Patterson shift, mapped into the box.
inline std::vector<std::vector<double>> sample_points(int n, int count, std::uint64_t seed, SampleBox box = {}) {
  static constexpr unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (n < 1 || n > 16) throw DomainError("sample dimension out of range");
  if (count < 0) throw DomainError("sample count must be nonnegative");
  if (!(box.hi > box.lo)) throw DomainError("sample box must have hi > lo");
  Rng rng = Rng::stream(seed, 0x5A);
  std::vector<double> shift(n);
  for (auto& s : shift) s = rng.uniform();

  std::vector<std::vector<double>> pts;
  pts.emplace_back(n, 0.5 * (box.lo + box.hi));
  for (int i = 1; i <= count; ++i) {
    std::vector<double> p(n);
    for (int d = 0; d < n; ++d) {
      double u = radical_inverse(static_cast<std::uint64_t>(i), primes[d]) + shift[d];
      if (u >= 1.0) u -= 1.0;
      p[d] = box.lo + (box.hi - box.lo) * u;
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace cliffym
