#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "signature.hpp"

namespace cliffym {

using Complex = std::complex<double>;

inline int grade(unsigned mask) { return std::popcount(mask); }

// Sign of e^A e^B = sign * e^{A xor B} for canonical blades A, B.
// Counts the transpositions needed to merge the two increasing index lists,
// then applies eta^{aa} = -1 for every annihilated negative generator.
inline int blade_sign(unsigned a, unsigned b, unsigned negative_mask) {
  int swaps = 0;
  for (unsigned x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  swaps += std::popcount(a & b & negative_mask);
  return (swaps & 1) ? -1 : 1;
}

// Parses "e" (identity), "e12" (digits are generator indices, n <= 9) or
// "e1_10" (underscore separated). Indices must be strictly increasing.
inline unsigned parse_blade(const std::string& name, int n) {
  if (name.empty() || name[0] != 'e') throw DomainError("blade name must start with 'e': " + name);
  std::vector<int> idx;
  std::string rest = name.substr(1);
  if (rest.find('_') != std::string::npos) {
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, '_')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
        throw DomainError("bad blade name: " + name);
      idx.push_back(std::stoi(tok));
    }
  } else {
    for (char c : rest) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad blade name: " + name);
      idx.push_back(c - '0');
    }
  }
  unsigned mask = 0;
  int prev = 0;
  for (int a : idx) {
    if (a <= prev || a > n) throw DomainError("blade indices must increase within 1.." + std::to_string(n) + ": " + name);
    mask |= 1u << (a - 1);
    prev = a;
  }
  return mask;
}

inline std::string blade_name(unsigned mask, int n) {
  std::string s = "e";
  bool sep = n > 9;
  bool first = true;
  for (int a = 1; a <= n; ++a) {
    if (!(mask & (1u << (a - 1)))) continue;
    if (sep && !first) s += '_';
    s += std::to_string(a);
    first = false;
  }
  return s;
}

// Dense element of Cl(p,q): coefficient of blade `mask` is stored at index `mask`.
class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(Signature sig) : sig_(sig), c_(sig.blade_count()) {}
  Multivector(Signature sig, std::vector<Complex> coeffs) : sig_(sig), c_(std::move(coeffs)) {
    if (c_.size() != sig_.blade_count()) throw DomainError("coefficient count must be 2^n");
  }

  static Multivector scalar(Signature sig, Complex v) {
    Multivector m(sig);
    m.c_[0] = v;
    return m;
  }
  static Multivector blade(Signature sig, unsigned mask, Complex v = 1.0) {
    if (mask >= sig.blade_count()) throw DomainError("blade mask out of range");
    Multivector m(sig);
    m.c_[mask] = v;
    return m;
  }
  // e^a, 1-based.
  static Multivector generator(Signature sig, int a) {
    if (a < 1 || a > sig.n()) throw DomainError("generator index out of range");
    return blade(sig, 1u << (a - 1));
  }
  // e_a = eta_{ab} e^b.
  static Multivector lower_generator(Signature sig, int a) {
    return blade(sig, 1u << (a - 1), static_cast<double>(sig.metric(a)));
  }

  const Signature& sig() const { return sig_; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex operator[](unsigned mask) const { return c_[mask]; }
  Complex& operator[](unsigned mask) { return c_[mask]; }

  double max_norm() const {
    double m = 0.0;
    for (const auto& z : c_) m = std::max(m, std::abs(z));
    return m;
  }

  // Largest |Im| over all coefficients; zero for elements of the real algebra.
  double max_imag() const {
    double m = 0.0;
    for (const auto& z : c_) m = std::max(m, std::abs(z.imag()));
    return m;
  }

  Multivector& operator+=(const Multivector& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Multivector& operator*=(Complex s) {
    for (auto& z : c_) z *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, Complex s) { return a *= s; }
  friend Multivector operator*(Complex s, Multivector a) { return a *= s; }
  friend Multivector operator*(Multivector a, double s) { return a *= Complex(s); }
  friend Multivector operator*(double s, Multivector a) { return a *= Complex(s); }

  friend bool operator==(const Multivector&, const Multivector&) = default;

  std::string to_string() const {
    std::ostringstream os;
    bool any = false;
    for (unsigned m = 0; m < c_.size(); ++m) {
      if (c_[m] == Complex{}) continue;
      if (any) os << " + ";
      os << "(" << c_[m].real();
      if (c_[m].imag() != 0.0) os << (c_[m].imag() < 0 ? "-" : "+") << std::abs(c_[m].imag()) << "i";
      os << ")" << blade_name(m, sig_.n());
      any = true;
    }
    return any ? os.str() : "0";
  }

 private:
  void check(const Multivector& o) const {
    if (!(sig_ == o.sig_)) throw SignatureMismatch();
  }

  Signature sig_;
  std::vector<Complex> c_;
};

inline Multivector geometric_product(const Multivector& u, const Multivector& v) {
  if (!(u.sig() == v.sig())) throw SignatureMismatch();
  const unsigned neg = u.sig().negative_mask();
  const std::size_t size = u.size();
  std::vector<double> re(size, 0.0), im(size, 0.0);
  const auto& a = u.coeffs();
  const auto& b = v.coeffs();
  for (unsigned i = 0; i < size; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    if (ar == 0.0 && ai == 0.0) continue;
    for (unsigned j = 0; j < size; ++j) {
      const double br = b[j].real(), bi = b[j].imag();
      if (br == 0.0 && bi == 0.0) continue;
      const double s = blade_sign(i, j, neg);
      re[i ^ j] += s * (ar * br - ai * bi);
      im[i ^ j] += s * (ar * bi + ai * br);
    }
  }
  std::vector<Complex> out(size);
  for (std::size_t k = 0; k < size; ++k) out[k] = {re[k], im[k]};
  return Multivector(u.sig(), std::move(out));
}

inline Multivector operator*(const Multivector& u, const Multivector& v) { return geometric_product(u, v); }

inline Multivector grade_project(const Multivector& u, int k) {
  if (k < 0 || k > u.sig().n()) throw DomainError("grade " + std::to_string(k) + " out of range");
  Multivector out(u.sig());
  for (unsigned m = 0; m < u.size(); ++m)
    if (grade(m) == k) out[m] = u[m];
  return out;
}

inline Complex trace(const Multivector& u) { return u[0]; }

inline Multivector reversion(const Multivector& u) {
  Multivector out = u;
  for (unsigned m = 0; m < u.size(); ++m) {
    const int k = grade(m);
    if ((k * (k - 1) / 2) & 1) out[m] = -out[m];
  }
  return out;
}

inline Multivector commutator(const Multivector& u, const Multivector& v) { return u * v - v * u; }

// Component in the center: grade 0 for even n, grades 0 and n for odd n.
inline Multivector center_project(const Multivector& u) {
  Multivector out(u.sig());
  out[0] = u[0];
  if (u.sig().n() % 2 == 1) {
    const unsigned top = static_cast<unsigned>(u.size() - 1);
    out[top] = u[top];
  }
  return out;
}

// Projection onto the complement of the center (zero center component).
inline Multivector circ_project(const Multivector& u) { return u - center_project(u); }

// Throws if any coefficient has |Im| above tol; used to enforce the real algebra.
inline void require_real(const Multivector& u, double tol = 1e-12) {
  if (u.max_imag() > tol) throw DomainError("element is not in the real algebra");
}

}  // namespace cliffym
