#include "bkm/series.hpp"

#include <algorithm>

namespace bkm {

TruncatedSeries TruncatedSeries::constant(int n, int H, const Rational& c) {
  TruncatedSeries f(n, H);
  f.add_term(std::vector<int>(n, 0), c);
  return f;
}

TruncatedSeries TruncatedSeries::monomial(int n, int H, std::vector<int> m,
                                          const Rational& c) {
  TruncatedSeries f(n, H);
  f.add_term(m, c);
  return f;
}

Rational TruncatedSeries::constant_term() const {
  std::vector<int> zero(n_, 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const std::vector<int>& m, const Rational& c) {
  if (static_cast<int>(m.size()) != n_)
    throw std::invalid_argument("exponent vector has wrong rank");
  for (int v : m)
    if (v < 0) throw std::invalid_argument("negative exponent");
  if (c == 0 || total_degree(m) > H_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TruncatedSeries::coefficient(const std::vector<int>& m) const {
  if (static_cast<int>(m.size()) != n_)
    throw std::invalid_argument("exponent vector has wrong rank");
  if (total_degree(m) > H_) throw HeightExceeded();
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& g) const {
  check_compatible(g);
  TruncatedSeries out = *this;
  for (const auto& [m, c] : g.terms_) out.add_term(m, c);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& g) const {
  check_compatible(g);
  TruncatedSeries out = *this;
  for (const auto& [m, c] : g.terms_) out.add_term(m, -c);
  return out;
}

TruncatedSeries TruncatedSeries::scale(const Rational& c) const {
  TruncatedSeries out(n_, H_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& g) const {
  check_compatible(g);
  TruncatedSeries out(n_, H_);
  std::vector<int> m(n_);
  for (const auto& [mf, cf] : terms_) {
    int df = total_degree(mf);
    for (const auto& [mg, cg] : g.terms_) {
      if (df + total_degree(mg) > H_) break;  // g.terms_ is graded
      for (int i = 0; i < n_; ++i) m[i] = mf[i] + mg[i];
      out.add_term(m, cf * cg);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::neg_log() const {
  if (constant_term() != 1) throw ConstantTermError();
  TruncatedSeries zeta = TruncatedSeries::constant(n_, H_, 1) - *this;
  TruncatedSeries acc(n_, H_);
  TruncatedSeries power = zeta;
  for (int k = 1; k <= H_ && !power.is_zero(); ++k) {
    acc = acc + power.scale(Rational(1, k));
    power = power * zeta;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (constant_term() != 1) throw ConstantTermError();
  TruncatedSeries zeta = TruncatedSeries::constant(n_, H_, 1) - *this;
  TruncatedSeries acc = TruncatedSeries::constant(n_, H_, 1);
  TruncatedSeries power = zeta;
  for (int k = 1; k <= H_ && !power.is_zero(); ++k) {
    acc = acc + power;
    power = power * zeta;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::project(const std::vector<int>& C) const {
  std::vector<bool> in(n_, false);
  for (int i : C) {
    if (i < 0 || i >= n_) throw std::out_of_range("projection index out of range");
    in[i] = true;
  }
  TruncatedSeries out(n_, H_);
  for (const auto& [m, c] : terms_) {
    bool match = true;
    for (int i = 0; i < n_ && match; ++i) match = (m[i] != 0) == in[i];
    if (match) out.terms_.emplace(m, c);
  }
  return out;
}

}  // namespace bkm
