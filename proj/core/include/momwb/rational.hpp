#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace momwb {

__extension__ typedef __int128 Int128;

[[nodiscard]] std::string to_string(Int128 value);
[[nodiscard]] Int128 gcd(Int128 a, Int128 b) noexcept;

/// Multiplication and addition that throw std::overflow_error instead of
/// wrapping.
[[nodiscard]] Int128 checked_mul(Int128 a, Int128 b);
[[nodiscard]] Int128 checked_add(Int128 a, Int128 b);

/// Exact rational number over 128-bit integers, always kept in lowest terms
/// with a positive denominator. Arithmetic throws std::overflow_error rather
/// than losing precision.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int128 numerator, Int128 denominator = 1);  // NOLINT(google-explicit-constructor)

    [[nodiscard]] Int128 numerator() const noexcept { return num_; }
    [[nodiscard]] Int128 denominator() const noexcept { return den_; }

    [[nodiscard]] double to_double() const noexcept;
    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

private:
    Int128 num_ = 0;
    Int128 den_ = 1;
};

}  // namespace momwb
