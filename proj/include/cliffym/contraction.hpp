#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "multivector.hpp"
#include "rational.hpp"

namespace cliffym {

// Eigenvalue of the generator contraction on grade k.
inline long long contraction_eigenvalue(int n, int k) { return (k % 2 == 0 ? 1 : -1) * static_cast<long long>(n - 2 * k); }

using EigenvalueRule = std::function<long long(int n, int k)>;

// Exact data for expressing grade projections through contractions.
//
// Indices are 0-based: vandermonde[k][l] = lambda_l^k, so entry (k, l) here is
// entry (k+1, l+1) of the usual 1-based a_{kl} = lambda_{l-1}^{k-1}. For even n
// the matrix is A ((n+1) x (n+1)) with inverse B; for odd n it is D over the
// distinct values lambda_0..lambda_{(n-1)/2} with inverse G, and row k of G
// yields the paired projection onto grades k and n-k.
struct ContractionTable {
  int n = 0;
  std::vector<long long> lambdas;
  IntegerMatrix vandermonde;
  RationalMatrix inverse;
  // mus[k] = 1/(n - lambda_k); empty where n - lambda_k = 0 (k = 0, and k = n for odd n).
  std::vector<std::optional<Rational>> mus;
  // r_l (even n) or s_l (odd n): the solution formula as a combination of F^l.
  std::vector<Rational> coefficients;

  bool even() const { return n % 2 == 0; }
  int projection_count() const { return even() ? n + 1 : (n + 1) / 2; }
  int max_projection_index() const { return projection_count() - 1; }

  const IntegerMatrix& A() const { return require(true), vandermonde; }
  const RationalMatrix& B() const { return require(true), inverse; }
  const IntegerMatrix& D() const { return require(false), vandermonde; }
  const RationalMatrix& G() const { return require(false), inverse; }
  const std::vector<Rational>& r() const { return require(true), coefficients; }
  const std::vector<Rational>& s() const { return require(false), coefficients; }

 private:
  void require(bool want_even) const {
    if (even() != want_even) throw DomainError(std::string("table member only defined for ") + (want_even ? "even" : "odd") + " n");
  }
};

inline IntegerMatrix vandermonde_matrix(const std::vector<long long>& nodes) {
  const std::size_t m = nodes.size();
  IntegerMatrix v(m, std::vector<BigInt>(m));
  for (std::size_t l = 0; l < m; ++l) {
    BigInt p = 1;
    for (std::size_t k = 0; k < m; ++k) {
      v[k][l] = p;
      p *= nodes[l];
    }
  }
  return v;
}

inline ContractionTable build_table(int n, const EigenvalueRule& lambda = contraction_eigenvalue) {
  if (n < 1 || n > max_dimension()) throw DomainError("table dimension out of range");
  ContractionTable t;
  t.n = n;
  for (int k = 0; k <= n; ++k) t.lambdas.push_back(lambda(n, k));
  const int m = t.projection_count();
  std::vector<long long> nodes(t.lambdas.begin(), t.lambdas.begin() + m);
  t.vandermonde = vandermonde_matrix(nodes);
  t.inverse = invert_exact(t.vandermonde);

  t.mus.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    const long long d = n - t.lambdas[k];
    if (d != 0) t.mus[k] = make_rational(1, d);
  }
  // Even n: r_l = sum_{k=1..n} mu_k b_{kl}. Odd n: s_l = sum_{k=1..(n-1)/2} mu_k g_{kl}.
  t.coefficients.assign(m, Rational(0));
  const int kmax = t.even() ? n : (n - 1) / 2;
  for (int k = 1; k <= kmax; ++k) {
    if (!t.mus[k]) throw SingularError("mu_k undefined inside the solution range");
    for (int l = 0; l < m; ++l) t.coefficients[l] += *t.mus[k] * t.inverse[k][l];
  }
  return t;
}

// Sum over the frame of up[a] * U * down[a]. With up = e^a, down = e_a this is
// the generator contraction; with a Clifford field vector it is the h-contraction.
template <class V>
V contract_with(const V& u, std::span<const V> up, std::span<const V> down) {
  V acc = up[0] * u * down[0];
  for (std::size_t a = 1; a < up.size(); ++a) acc += up[a] * u * down[a];
  return acc;
}

// F^0(U), ..., F^{count-1}(U).
template <class V, class Contract>
std::vector<V> contraction_powers(const V& u, int count, Contract&& contract) {
  std::vector<V> powers;
  powers.reserve(count);
  powers.push_back(u);
  for (int l = 1; l < count; ++l) powers.push_back(contract(powers.back()));
  return powers;
}

template <class V>
V combine(const std::vector<V>& powers, const std::vector<Rational>& coeffs) {
  V acc = powers[0] * to_double(coeffs[0]);
  for (std::size_t l = 1; l < coeffs.size(); ++l)
    if (coeffs[l] != 0) acc += powers[l] * to_double(coeffs[l]);
  return acc;
}

inline void check_projection_index(int k, const ContractionTable& t) {
  if (k < 0 || k > t.max_projection_index())
    throw DomainError("projection index " + std::to_string(k) + " outside [0, " + std::to_string(t.max_projection_index()) + "]");
}

// pi_k (even n) or pi_k + pi_{n-k} (odd n) from precomputed contraction powers.
template <class V>
V project_from_powers(const std::vector<V>& powers, int k, const ContractionTable& t) {
  check_projection_index(k, t);
  return combine(powers, t.inverse[k]);
}

inline std::vector<Multivector> generators(Signature sig) {
  std::vector<Multivector> g;
  for (int a = 1; a <= sig.n(); ++a) g.push_back(Multivector::generator(sig, a));
  return g;
}

inline std::vector<Multivector> lower_generators(Signature sig) {
  std::vector<Multivector> g;
  for (int a = 1; a <= sig.n(); ++a) g.push_back(Multivector::lower_generator(sig, a));
  return g;
}

// F(U) = e^a U e_a.
inline Multivector contract(const Multivector& u) {
  const auto up = generators(u.sig());
  const auto down = lower_generators(u.sig());
  return contract_with<Multivector>(u, up, down);
}

inline Multivector contract_power(const Multivector& u, int l) {
  if (l < 0) throw DomainError("contraction order must be nonnegative");
  Multivector out = u;
  for (int i = 0; i < l; ++i) out = contract(out);
  return out;
}

inline Multivector project_via_contractions(const Multivector& u, int k, const ContractionTable& t) {
  if (t.n != u.sig().n()) throw DomainError("table dimension does not match signature");
  check_projection_index(k, t);
  const auto powers = contraction_powers(u, t.projection_count(), [](const Multivector& x) { return contract(x); });
  return project_from_powers(powers, k, t);
}

}  // namespace cliffym
