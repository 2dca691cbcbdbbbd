#include "bec/quantity.hpp"

#include <fmt/format.h>

#include <cctype>
#include <limits>

#include "bec/error.hpp"

namespace bec {
namespace {

constexpr int kMaxDigits = 18;

std::int64_t pow10(int n) {
  std::int64_t p = 1;
  while (n-- > 0) p *= 10;
  return p;
}

[[noreturn]] void overflow() {
  throw Error(ErrorCode::kArithmeticError, "Mtce value exceeds the representable range");
}

// Divides with rounding half away from zero.
__int128 div_round(__int128 num, __int128 den) {
  __int128 q = num / den;
  __int128 r = num % den;
  if (r < 0) r = -r;
  if (2 * r >= den) q += (num < 0) ? -1 : 1;
  return q;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    overflow();
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Decimal Decimal::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::kParseError, fmt::format("malformed number '{}'", text));
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::int64_t mantissa = 0;
  int scale = 0;
  int digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_point) throw fail();
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
    any_digit = true;
    if (mantissa == 0 && c == '0' && !seen_point) continue;
    if (++digits > kMaxDigits) throw fail();
    mantissa = mantissa * 10 + (c - '0');
    if (seen_point) ++scale;
  }
  if (!any_digit) throw fail();
  return Decimal{negative ? -mantissa : mantissa, scale};
}

std::string Decimal::to_string() const {
  std::string digits = std::to_string(mantissa < 0 ? -mantissa : mantissa);
  if (scale > 0) {
    if (static_cast<int>(digits.size()) <= scale) digits.insert(0, scale - digits.size() + 1, '0');
    digits.insert(digits.size() - scale, ".");
  }
  return (mantissa < 0 ? "-" : "") + digits;
}

Mtce Mtce::from_decimal(const Decimal& d) {
  if (d.scale <= 2) return Mtce(narrow(static_cast<__int128>(d.mantissa) * pow10(2 - d.scale)));
  return Mtce(narrow(div_round(d.mantissa, pow10(d.scale - 2))));
}

std::string Mtce::to_string() const {
  const bool negative = cents_ < 0;
  const auto magnitude = negative ? -static_cast<__int128>(cents_) : static_cast<__int128>(cents_);
  const auto whole = static_cast<unsigned long long>(magnitude / 100);
  const auto frac = static_cast<unsigned>(magnitude % 100);
  return fmt::format("{}{}.{:02}", negative ? "-" : "", whole, frac);
}

Mtce operator+(Mtce a, Mtce b) {
  std::int64_t out;
  if (__builtin_add_overflow(a.cents_, b.cents_, &out)) overflow();
  return Mtce(out);
}

Mtce operator-(Mtce a, Mtce b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a.cents_, b.cents_, &out)) overflow();
  return Mtce(out);
}

EnergyQuantity::EnergyQuantity(Mtce value) : value_(value) {
  if (value.cents() < 0) {
    throw Error(ErrorCode::kNegativeQuantity,
                fmt::format("consumption quantity {} is negative", value.to_string()));
  }
}

EnergyQuantity EnergyQuantity::sub_checked(EnergyQuantity b) const {
  if (b.value_ > value_) {
    throw Error(ErrorCode::kDeductionExceedsTotal,
                fmt::format("deduction {} exceeds total {}", b.to_string(), to_string()));
  }
  return EnergyQuantity(value_ - b.value_);
}

Fraction Fraction::from_millionths(std::int64_t millionths) {
  if (millionths < 0 || millionths > kDenominator) {
    throw Error(ErrorCode::kInvalidPolicy,
                fmt::format("fraction {}e-6 is outside [0, 1]", millionths));
  }
  return Fraction(millionths);
}

Fraction Fraction::parse(std::string_view text) {
  Decimal d;
  try {
    d = Decimal::parse(text);
  } catch (const Error&) {
    throw Error(ErrorCode::kInvalidPolicy, fmt::format("'{}' is not a fraction", text));
  }
  if (d.scale > 6) {
    throw Error(ErrorCode::kInvalidPolicy,
                fmt::format("fraction '{}' has more than six decimals", text));
  }
  return from_millionths(d.mantissa * pow10(6 - d.scale));
}

std::string Fraction::to_string() const {
  std::string text = Decimal{millionths_, 6}.to_string();
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  return text;
}

Tolerance Tolerance::parse(std::string_view text) {
  const Decimal d = Decimal::parse(text);
  if (d.is_negative()) {
    throw Error(ErrorCode::kParseError, fmt::format("tolerance '{}' is negative", text));
  }
  if (d.scale > 8) {
    throw Error(ErrorCode::kParseError, fmt::format("tolerance '{}' has more than 8 decimals", text));
  }
  return Tolerance(narrow(static_cast<__int128>(d.mantissa) * pow10(8 - d.scale)));
}

bool Tolerance::admits(Mtce difference) const {
  return static_cast<__int128>(difference.abs().cents()) * 1'000'000 <= scaled_;
}

std::string Tolerance::to_string() const {
  std::string text = Decimal{scaled_, 8}.to_string();
  while (text.size() > 4 && text.back() == '0') text.pop_back();
  return text;
}

std::int64_t scaled_product(Fraction f, Mtce q) {
  return narrow(static_cast<__int128>(f.millionths()) * q.cents());
}

Mtce round_scaled(std::int64_t scaled) {
  return Mtce::from_cents(narrow(div_round(scaled, Fraction::kDenominator)));
}

}  // namespace bec
