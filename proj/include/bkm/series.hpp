#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "bkm/rational.hpp"

namespace bkm {

struct HeightMismatch : std::runtime_error {
  HeightMismatch() : std::runtime_error("operands disagree on rank or truncation height") {}
};

struct ConstantTermError : std::runtime_error {
  ConstantTermError() : std::runtime_error("series must have constant term 1") {}
};

struct HeightExceeded : std::runtime_error {
  HeightExceeded() : std::runtime_error("exponent height exceeds truncation height") {}
};

inline int total_degree(const std::vector<int>& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

// Graded lexicographic: lower total degree first, then lex on exponents.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Formal power series in X_0..X_{n-1} truncated at total exponent degree H,
// with exact rational coefficients. Zero coefficients are never stored.
class TruncatedSeries {
 public:
  using TermMap = std::map<std::vector<int>, Rational, GradedLexLess>;

  TruncatedSeries(int n, int H) : n_(n), H_(H) {}

  static TruncatedSeries constant(int n, int H, const Rational& c);
  static TruncatedSeries monomial(int n, int H, std::vector<int> m, const Rational& c);

  int rank() const { return n_; }
  int height() const { return H_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;

  // Adds c * X^m, silently dropping over-height monomials.
  void add_term(const std::vector<int>& m, const Rational& c);

  // Throws HeightExceeded when sum(m) > H.
  Rational coefficient(const std::vector<int>& m) const;

  TruncatedSeries operator+(const TruncatedSeries& g) const;
  TruncatedSeries operator-(const TruncatedSeries& g) const;
  TruncatedSeries operator*(const TruncatedSeries& g) const;
  TruncatedSeries scale(const Rational& c) const;

  // -log f for f with constant term 1: sum_{k<=H} (1-f)^k / k.
  TruncatedSeries neg_log() const;

  // Multiplicative inverse at height H (Neumann series); constant term must be 1.
  TruncatedSeries inverse() const;

  // Keeps exactly the monomials whose support equals C.
  TruncatedSeries project(const std::vector<int>& C) const;

  bool operator==(const TruncatedSeries& g) const {
    return n_ == g.n_ && H_ == g.H_ && terms_ == g.terms_;
  }

 private:
  void check_compatible(const TruncatedSeries& g) const {
    if (n_ != g.n_ || H_ != g.H_) throw HeightMismatch();
  }

  int n_;
  int H_;
  TermMap terms_;
};

}  // namespace bkm
