#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "error.hpp"

namespace cliffym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntegerMatrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline Rational make_rational(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "num/den" or a bare integer.
inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  const BigInt den(s.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator: " + s);
  return Rational(BigInt(s.substr(0, slash)), den);
}

inline RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  RationalMatrix out(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw DomainError("matrix shapes do not conform");
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  }
  return out;
}

inline RationalMatrix to_rational(const IntegerMatrix& a) {
  RationalMatrix out;
  for (const auto& row : a) {
    std::vector<Rational> r;
    for (const auto& v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

// Exact inverse of a square integer matrix. Bareiss fraction-free elimination
// on [A | I] keeps every intermediate an integer (each division is exact);
// the final triangular solve is carried out in rationals.
inline RationalMatrix invert_exact(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("matrix must be square");
  const std::size_t w = 2 * n;
  IntegerMatrix m(n, std::vector<BigInt>(w, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) throw SingularError("matrix is singular");
    if (piv != k) std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  RationalMatrix x(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t c = 0; c < n; ++c) {
      Rational acc(m[ii][n + c]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j][c];
      x[ii][c] = acc / Rational(m[ii][ii]);
    }
  }
  return x;
}

}  // namespace cliffym
