#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bkm {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q" (q > 0 after normalization).
Rational parse_rational(const std::string& s);

// "p" when integral, "p/q" otherwise.
std::string format_rational(const Rational& q);

bool is_integer(const Rational& q);

// Throws std::domain_error if q is not integral.
long long to_integer(const Rational& q);

}  // namespace bkm
