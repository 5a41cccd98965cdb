#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "svdt/common.hpp"

namespace svdt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exponent vector, one entry per variable.
using Expo = std::vector<int>;

inline int expo_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded order, and within a degree the lexicographically larger exponent
// first, so x1^2 precedes x1 x2 precedes x2^2.
struct GradedLexLess {
  bool operator()(const Expo& a, const Expo& b) const {
    const int da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

// Sparse polynomial in n variables over exact integers, truncated at total
// degree D: terms beyond the bound are dropped on entry.  No zero
// coefficients are stored.
class TruncPoly {
 public:
  TruncPoly(int n, int max_degree);

  int vars() const { return n_; }
  int max_degree() const { return max_degree_; }
  const std::map<Expo, Int, GradedLexLess>& terms() const { return terms_; }

  void add_term(const Expo& e, Int c);
  Int coeff(const Expo& e) const;
  bool is_zero() const { return terms_.empty(); }
  // Smallest total degree with a term; -1 for the zero polynomial.
  int min_degree() const;
  TruncPoly homogeneous_part(int d) const;

  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator-=(const TruncPoly& o);
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  TruncPoly operator*(const TruncPoly& o) const;
  TruncPoly scaled(const Int& c) const;

  // Invariance under every adjacent variable transposition.
  bool is_symmetric() const;

  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

  // "+ 2 x1^1 x2^1 - 1 x3^2" with terms in graded-lex order; "0" when zero.
  std::string text() const;
  std::string to_json_string() const;
  static TruncPoly from_json_string(const std::string& s);

 private:
  int n_;
  int max_degree_;
  std::map<Expo, Int, GradedLexLess> terms_;
};

}  // namespace svdt
