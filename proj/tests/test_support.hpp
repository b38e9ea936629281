#pragma once

#include <utility>
#include <vector>

#include <cliffym/cliffym.hpp>

namespace cliffym::testing {

// Blade product by explicit generator strings: concatenate the index lists,
// bubble-sort them counting swaps, then cancel equal neighbours via e_a e_a = eta_aa.
inline std::pair<int, unsigned> brute_blade_product(unsigned a, unsigned b, Signature sig) {
  std::vector<int> word;
  for (int i = 0; i < sig.n(); ++i)
    if (a >> i & 1u) word.push_back(i);
  for (int i = 0; i < sig.n(); ++i)
    if (b >> i & 1u) word.push_back(i);
  int sign = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass)
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
      }
  unsigned mask = 0;
  for (std::size_t k = 0; k < word.size();) {
    if (k + 1 < word.size() && word[k] == word[k + 1]) {
      sign *= sig.metric(word[k] + 1);
      k += 2;
    } else {
      mask |= 1u << word[k];
      ++k;
    }
  }
  return {sign, mask};
}

inline Multivector brute_product(const Multivector& u, const Multivector& v) {
  Multivector out(u.sig());
  for (unsigned i = 0; i < u.size(); ++i)
    for (unsigned j = 0; j < v.size(); ++j) {
      const auto [s, m] = brute_blade_product(i, j, u.sig());
      out[m] += static_cast<double>(s) * u[i] * v[j];
    }
  return out;
}

inline const std::vector<Signature>& acceptance_signatures() {
  static const std::vector<Signature> s{{2, 0}, {1, 1}, {3, 0}, {2, 1}, {1, 3}, {4, 0}, {2, 2}, {3, 2}};
  return s;
}

// Seeded random frame + bivector gauge configuration.
inline RunConfig random_config(Signature sig, std::uint64_t seed, Complex sigma = 1.0) {
  RunConfig c;
  c.sig = sig;
  c.seed = seed;
  c.sigma = sigma;
  c.frame.random = true;
  c.gauge.random = true;
  return c;
}

}  // namespace cliffym::testing
