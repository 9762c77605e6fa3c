#include "bkm/rational.hpp"

namespace bkm {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

long long to_integer(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("expected integer, got " + format_rational(q));
  return static_cast<long long>(numerator(q));
}

}  // namespace bkm
