#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dedekind {

using Int = std::int64_t;

// Expression templates are disabled so that `auto` always yields a value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Fraction = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Builds num/den in lowest terms with a positive denominator.
Fraction make_fraction(const BigInt& num, const BigInt& den);

inline BigInt numerator(const Fraction& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Fraction& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Fraction& q) { return denominator(q) == 1; }

/// "p/q", or "p" when the value is an integer.
std::string to_string(const Fraction& q);
std::string to_string(const BigInt& n);

/// Parses "p/q" or "p" (decimal only).
Fraction parse_fraction(const std::string& text);

}  // namespace dedekind
