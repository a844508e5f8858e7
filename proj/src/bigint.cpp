#include "yaglom/bigint.hpp"

#include "yaglom/errors.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace yaglom {

double log_big(const BigInt& value) {
  if (value <= 0) throw DomainError("log of a nonpositive integer");
  const unsigned bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  // keep 64 leading bits; the dropped tail changes the log by < 2^-63
  const unsigned shift = bits - 64;
  const BigInt head = value >> shift;
  return std::log(head.convert_to<double>()) + shift * std::numbers::ln2;
}

double log2_big(const BigInt& value) { return log_big(value) / std::numbers::ln2; }

BigInt parse_decimal(std::string_view digits) {
  BigInt out = 0;
  bool any = false;
  for (char ch : digits) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '\\') continue;
    if (ch < '0' || ch > '9') throw DomainError(std::string("not a decimal digit: ") + ch);
    out = out * 10 + (ch - '0');
    any = true;
  }
  if (!any) throw DomainError("empty decimal literal");
  return out;
}

}  // namespace yaglom
