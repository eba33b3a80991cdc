#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace convexdiff {

using Integer = mpz_class;

// The platform's long long has no gmpxx constructor; long is as wide here.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }

// Exact rational scalar. Values are always kept in reduced canonical form
// (denominator > 0, gcd(|numerator|, denominator) = 1), so equality is
// structural and Rational works directly as an ordered map key. There is no
// tolerance parameter anywhere: every comparison is exact.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(static_cast<long>(n)) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long long num, long long den);

    // Parses "p" or "p/q" with an optional sign on p. Anything not in
    // canonical form ("2/4", "3/0", "1/-2") is rejected.
    static Rational parse(const std::string& text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    Integer floor() const;
    Rational abs() const;

    // Canonical text form: "p" when the value is integral, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws ValidationError on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Exact three-way comparison: -1, 0, +1.
    static int compare(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_; // canonical at all times
};

// Smallest positive integer L such that L*v is an integer for every v.
// Throws ValidationError on an empty list.
Integer lcm_of_denominators(const std::vector<Rational>& values);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace convexdiff
