#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace xsb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Shorthand for the rational num/den.
Rational q(std::int64_t num, std::int64_t den = 1);

/// Parses `p` or `p/q` with optional leading sign.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: `p` or `p/q`.
std::string to_string(const Rational& r);

/// A Sobolev or modulation index of the form base + slack*e, where e is a
/// single positive infinitesimal.
///
/// Exponents are ordered lexicographically on (base, slack), which agrees
/// with the real order for every sufficiently small e > 0. All arithmetic is
/// exact.
class Exponent {
public:
    Exponent() = default;
    Exponent(Rational base, Rational slack = 0)
        : base_(std::move(base)), slack_(std::move(slack)) {}
    Exponent(int base) : base_(base) {}

    /// k*e
    static Exponent eps(Rational k = 1) { return {Rational(0), std::move(k)}; }

    const Rational& base() const { return base_; }
    const Rational& slack() const { return slack_; }
    bool is_rational() const { return slack_ == 0; }

    Exponent operator-() const { return {-base_, -slack_}; }
    Exponent& operator+=(const Exponent& o);
    Exponent& operator-=(const Exponent& o);
    Exponent& operator*=(const Rational& k);

    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
    friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
    friend Exponent operator*(Exponent a, const Rational& k) { return a *= k; }
    friend Exponent operator*(const Rational& k, Exponent a) { return a *= k; }

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

    /// Canonical literal, e.g. `7/16-1/4*e`. Parses back to the same value.
    std::string str() const;

    /// Parses the literal grammar `p/q`, `p/q+k*e`, `p/q-k*e`, `-k*e`, `3e`,
    /// `e/4`, ... Terms may repeat and are summed.
    static Exponent parse(std::string_view text);

private:
    Rational base_{0};
    Rational slack_{0};
};

/// Product of two exponents. Throws DomainError when both carry slack, since
/// the result would need an e^2 term.
Exponent multiply(const Exponent& a, const Exponent& b);

std::strong_ordering exp_cmp(const Exponent& a, const Exponent& b);

inline const Exponent& min(const Exponent& a, const Exponent& b) { return b < a ? b : a; }
inline const Exponent& max(const Exponent& a, const Exponent& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Exponent& e);

} // namespace xsb
