#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string_view>

namespace yaglom {

using BigInt = boost::multiprecision::cpp_int;

/// Natural logarithm of a positive big integer, accurate to double precision
/// for any magnitude (no overflow through conversion to double).
double log_big(const BigInt& value);

/// log2 of a positive big integer.
double log2_big(const BigInt& value);

/// Parses a decimal literal, ignoring embedded whitespace and backslashes
/// (line-wrapped transcriptions).
BigInt parse_decimal(std::string_view digits);

}  // namespace yaglom
