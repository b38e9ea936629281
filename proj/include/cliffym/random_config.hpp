#pragma once

#include <cstdint>
#include <vector>

#include "frame.hpp"
#include "polynomial.hpp"
#include "sampling.hpp"

namespace cliffym {

// Stream tags so that frame, gauge and gauge-check draws stay independent.
enum class RandomStream : std::uint64_t { frame = 1, gauge = 2, gauge_check = 3, property = 4 };

inline Rng random_stream(std::uint64_t seed, RandomStream s) { return Rng::stream(seed, static_cast<std::uint64_t>(s)); }

// Constant + all linear terms + one quadratic term, coefficients in [-scale, scale].
inline Polynomial random_quadratic(int n, Rng& rng, double scale) {
  Polynomial p;
  p.monomials.push_back({std::vector<int>(n, 0), rng.uniform(-scale, scale)});
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    p.monomials.push_back({e, rng.uniform(-scale, scale)});
  }
  std::vector<int> e(n, 0);
  e[rng.integer(0, n - 1)] += 1;
  e[rng.integer(0, n - 1)] += 1;
  p.monomials.push_back({e, rng.uniform(-scale, scale)});
  return p;
}

// A(x) = sum over all bivector blades of a random quadratic times the blade.
inline PolynomialMultivector random_bivector_generator(Signature sig, Rng& rng, double scale = 0.3) {
  PolynomialMultivector pm;
  const int n = sig.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pm.terms.push_back({(1u << a) | (1u << b), random_quadratic(n, rng, scale)});
  return pm;
}

// Pointwise pseudo-rotation with a random quadratic angle in every plane.
inline FrameSpec random_frame_spec(Signature sig, Rng& rng, double scale = 0.4) {
  FrameSpec spec;
  spec.kind = FrameSpec::Kind::rotation;
  const int n = sig.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) spec.planes.push_back({a, b, random_quadratic(n, rng, scale)});
  return spec;
}

// Random dense multivector with real and imaginary parts uniform in [-1, 1].
inline Multivector random_multivector(Signature sig, Rng& rng, bool real = false) {
  Multivector m(sig);
  for (unsigned i = 0; i < m.size(); ++i) m[i] = {rng.uniform(-1.0, 1.0), real ? 0.0 : rng.uniform(-1.0, 1.0)};
  return m;
}

}  // namespace cliffym
