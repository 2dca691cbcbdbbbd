#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bec {

/// Exact decimal literal as read from input text: mantissa * 10^-scale.
struct Decimal {
  std::int64_t mantissa = 0;
  int scale = 0;

  /// Accepts [+-]digits[.digits]; at most 18 significant digits.
  static Decimal parse(std::string_view text);

  bool is_negative() const { return mantissa < 0; }
  bool is_zero() const { return mantissa == 0; }
  std::string to_string() const;
};

/// Signed fixed-point quantity in Mtce with two fractional digits.
///
/// All ledger arithmetic happens here. Addition and subtraction are exact;
/// overflow of the 64-bit cent count raises ArithmeticError.
class Mtce {
 public:
  constexpr Mtce() = default;

  static constexpr Mtce from_cents(std::int64_t cents) { return Mtce(cents); }
  /// Rounds to cents half away from zero.
  static Mtce from_decimal(const Decimal& d);
  static Mtce parse(std::string_view text) { return from_decimal(Decimal::parse(text)); }

  constexpr std::int64_t cents() const { return cents_; }
  double to_double() const { return static_cast<double>(cents_) / 100.0; }
  /// Always two decimals: "12.30", "-16.54", "0.00".
  std::string to_string() const;

  friend Mtce operator+(Mtce a, Mtce b);
  friend Mtce operator-(Mtce a, Mtce b);
  Mtce& operator+=(Mtce other) { return *this = *this + other; }
  Mtce& operator-=(Mtce other) { return *this = *this - other; }
  Mtce operator-() const { return Mtce(0) - *this; }
  Mtce abs() const { return cents_ < 0 ? -*this : *this; }

  friend constexpr auto operator<=>(Mtce, Mtce) = default;

 private:
  constexpr explicit Mtce(std::int64_t cents) : cents_(cents) {}
  std::int64_t cents_ = 0;
};

/// Non-negative consumption quantity in Mtce.
class EnergyQuantity {
 public:
  constexpr EnergyQuantity() = default;
  /// Throws NegativeQuantity for values below zero.
  explicit EnergyQuantity(Mtce value);

  static EnergyQuantity parse(std::string_view text) { return EnergyQuantity(Mtce::parse(text)); }
  static EnergyQuantity from_cents(std::int64_t cents) {
    return EnergyQuantity(Mtce::from_cents(cents));
  }

  Mtce value() const { return value_; }
  std::int64_t cents() const { return value_.cents(); }
  double to_double() const { return value_.to_double(); }
  std::string to_string() const { return value_.to_string(); }

  friend EnergyQuantity operator+(EnergyQuantity a, EnergyQuantity b) {
    return EnergyQuantity(a.value_ + b.value_);
  }
  EnergyQuantity& operator+=(EnergyQuantity other) { return *this = *this + other; }

  /// a - b; throws DeductionExceedsTotal when b > a.
  EnergyQuantity sub_checked(EnergyQuantity b) const;

  friend constexpr auto operator<=>(EnergyQuantity, EnergyQuantity) = default;

 private:
  Mtce value_;
};

/// A fraction in [0, 1] held exactly in millionths.
class Fraction {
 public:
  static constexpr std::int64_t kDenominator = 1'000'000;

  constexpr Fraction() = default;
  /// Throws InvalidPolicy outside [0, 1].
  static Fraction from_millionths(std::int64_t millionths);
  static Fraction parse(std::string_view text);
  static constexpr Fraction one() { return Fraction(kDenominator); }
  static constexpr Fraction zero() { return Fraction(0); }

  constexpr std::int64_t millionths() const { return millionths_; }
  double to_double() const { return static_cast<double>(millionths_) / kDenominator; }
  std::string to_string() const;

  friend constexpr auto operator<=>(Fraction, Fraction) = default;

 private:
  constexpr explicit Fraction(std::int64_t m) : millionths_(m) {}
  std::int64_t millionths_ = 0;
};

/// Non-negative comparison tolerance in Mtce, finer than a cent (0.005 is
/// representable). Held in 1e-8 Mtce.
class Tolerance {
 public:
  constexpr Tolerance() = default;
  static Tolerance parse(std::string_view text);
  static constexpr Tolerance from_cents(std::int64_t cents) { return Tolerance(cents * 1'000'000); }

  /// |difference| <= tolerance.
  bool admits(Mtce difference) const;
  /// Shortest decimal form: "0.005", "0.01".
  std::string to_string() const;

  friend constexpr auto operator<=>(Tolerance, Tolerance) = default;

 private:
  constexpr explicit Tolerance(std::int64_t scaled) : scaled_(scaled) {}
  std::int64_t scaled_ = 0;
};

/// Exact product fraction * quantity in units of 1e-8 Mtce (cents x millionths).
std::int64_t scaled_product(Fraction f, Mtce q);

/// Rounds a value in 1e-8 Mtce units to cents, half away from zero.
Mtce round_scaled(std::int64_t scaled);

}  // namespace bec
