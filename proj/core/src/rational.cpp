#include "momwb/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace momwb {

std::string to_string(Int128 value)
{
    if (value == 0) {
        return "0";
    }
    bool const negative = value < 0;
    // Work with negative values so the minimum Int128 is representable.
    std::string digits;
    Int128 v = negative ? value : -value;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) {
        digits.push_back('-');
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int128 gcd(Int128 a, Int128 b) noexcept
{
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int128 checked_mul(Int128 a, Int128 b)
{
    Int128 out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("128-bit multiplication overflow");
    }
    return out;
}

Int128 checked_add(Int128 a, Int128 b)
{
    Int128 out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("128-bit addition overflow");
    }
    return out;
}

Rational::Rational(Int128 numerator, Int128 denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    auto const g = gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

double Rational::to_double() const noexcept
{
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::to_string() const
{
    if (den_ == 1) {
        return momwb::to_string(num_);
    }
    return momwb::to_string(num_) + "/" + momwb::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (a.den_ == b.den_) {
        return a.num_ <=> b.num_;
    }
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.den_ == b.den_) {
        return {checked_add(a.num_, b.num_), a.den_};
    }
    auto const g = gcd(a.den_, b.den_);
    auto const lhs = checked_mul(a.num_, b.den_ / g);
    auto const rhs = checked_mul(b.num_, a.den_ / g);
    return {checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g)};
}

Rational operator-(const Rational& a, const Rational& b)
{
    return a + Rational(-b.num_, b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    auto const g1 = gcd(a.num_, b.den_);
    auto const g2 = gcd(b.num_, a.den_);
    return {checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1)};
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0) {
        throw std::domain_error("division by zero rational");
    }
    return a * Rational(b.den_, b.num_);
}

}  // namespace momwb
