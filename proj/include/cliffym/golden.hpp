#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "contraction.hpp"
#include "rational.hpp"

namespace cliffym {

// Reference tables written out by hand, as printed in the literature for the
// small cases. Entries are "num/den" or integers.
namespace golden {

using Rows = std::vector<std::vector<std::string>>;

inline const Rows& a2() {
  static const Rows m{{"1", "1", "1"}, {"2", "0", "-2"}, {"4", "0", "4"}};
  return m;
}
inline const Rows& b2() {
  static const Rows m{{"0", "1/4", "1/8"}, {"1", "0", "-1/4"}, {"0", "-1/4", "1/8"}};
  return m;
}
inline const Rows& b4() {
  static const Rows m{{"0", "-1/24", "-1/96", "1/96", "1/384"},
                      {"0", "-1/3", "1/6", "1/48", "-1/96"},
                      {"1", "0", "-5/16", "0", "1/64"},
                      {"0", "1/3", "1/6", "-1/48", "-1/96"},
                      {"0", "1/24", "-1/96", "-1/96", "1/384"}};
  return m;
}
inline const Rows& d3() {
  static const Rows m{{"1", "1"}, {"3", "-1"}};
  return m;
}
inline const Rows& g3() {
  static const Rows m{{"1/4", "1/4"}, {"3/4", "-1/4"}};
  return m;
}
inline const std::vector<std::string>& r2() {
  static const std::vector<std::string> v{"1/2", "-1/16", "-3/32"};
  return v;
}
inline const std::vector<std::string>& s3() {
  static const std::vector<std::string> v{"3/16", "-1/16"};
  return v;
}
inline const std::vector<std::string>& r4() {
  static const std::vector<std::string> v{"1/4", "67/576", "73/2304", "-19/2304", "-25/9216"};
  return v;
}

}  // namespace golden

struct GoldenMismatch {
  std::string table;
  std::size_t row = 0, col = 0;
  std::string expected, actual;
};

namespace detail {

inline void compare_rows(const std::string& name, const golden::Rows& expected, const RationalMatrix& actual,
                         std::vector<GoldenMismatch>& out) {
  if (actual.size() != expected.size()) {
    out.push_back({name + " (shape)", 0, 0, std::to_string(expected.size()) + " rows", std::to_string(actual.size()) + " rows"});
    return;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (actual[i].size() != expected[i].size()) {
      out.push_back({name + " (shape)", i, 0, std::to_string(expected[i].size()) + " cols", std::to_string(actual[i].size()) + " cols"});
      continue;
    }
    for (std::size_t j = 0; j < expected[i].size(); ++j)
      if (actual[i][j] != rational_from_string(expected[i][j])) out.push_back({name, i, j, expected[i][j], to_string(actual[i][j])});
  }
}

inline void compare_vector(const std::string& name, const std::vector<std::string>& expected, const std::vector<Rational>& actual,
                           std::vector<GoldenMismatch>& out) {
  golden::Rows e{expected};
  compare_rows(name, e, RationalMatrix{actual}, out);
}

}  // namespace detail

// Rebuilds the n = 2, 3, 4 tables with the given eigenvalue rule and compares
// them against the reference values with exact rational equality.
inline std::vector<GoldenMismatch> golden_check(const EigenvalueRule& lambda = contraction_eigenvalue) {
  std::vector<GoldenMismatch> out;
  auto attempt = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out.push_back({name, 0, 0, "table", std::string("error: ") + e.what()});
    }
  };
  attempt("n=2", [&] {
    const auto t = build_table(2, lambda);
    detail::compare_rows("A(n=2)", golden::a2(), to_rational(t.A()), out);
    detail::compare_rows("B(n=2)", golden::b2(), t.B(), out);
    detail::compare_vector("r(n=2)", golden::r2(), t.r(), out);
  });
  attempt("n=3", [&] {
    const auto t = build_table(3, lambda);
    detail::compare_rows("D(n=3)", golden::d3(), to_rational(t.D()), out);
    detail::compare_rows("G(n=3)", golden::g3(), t.G(), out);
    detail::compare_vector("s(n=3)", golden::s3(), t.s(), out);
  });
  attempt("n=4", [&] {
    const auto t = build_table(4, lambda);
    detail::compare_rows("B(n=4)", golden::b4(), t.B(), out);
    detail::compare_vector("r(n=4)", golden::r4(), t.r(), out);
  });
  return out;
}

inline void print_mismatches(std::ostream& os, const std::vector<GoldenMismatch>& m) {
  for (const auto& x : m)
    os << x.table << "[" << x.row << "][" << x.col << "]: expected " << x.expected << ", got " << x.actual << "\n";
}

}  // namespace cliffym
