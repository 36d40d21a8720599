#pragma once

// Exact rational numbers and elements of real quadratic fields Q(sqrt d).
// No floating point is used anywhere in this header or its implementation.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace polyarea {

using BigInt = boost::multiprecision::cpp_int;

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct RadicandMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when a value expected to be rational still carries a sqrt(d) part.
/// Reaching this means an algebra bug upstream, not bad user input.
struct IrrationalResidue : std::logic_error {
    using std::logic_error::logic_error;
};

/// Fraction of arbitrary-precision integers, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(BigInt numerator);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator) : Rational(BigInt(numerator)) {}  // NOLINT
    Rational(int numerator) : Rational(BigInt(numerator)) {}           // NOLINT
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& text);

private:
    void normalize();

    BigInt num_{0};
    BigInt den_{1};
};

Rational abs(const Rational& x);
Rational pow(const Rational& base, std::int64_t exponent);
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// (-1)^n
inline int alternating_sign(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

/// p + q*sqrt(d) with rational p, q and a positive squarefree radicand d.
///
/// Elements only combine with elements of the same radicand; mixing fields
/// throws RadicandMismatch. A purely rational value can be created in any
/// field with QuadElem(value, 0, d).
class QuadElem {
public:
    QuadElem(Rational p, Rational q, std::int64_t d);

    static QuadElem one(std::int64_t d) { return {1, 0, d}; }
    static QuadElem zero(std::int64_t d) { return {0, 0, d}; }
    static QuadElem sqrt(std::int64_t d) { return {0, 1, d}; }

    const Rational& p() const noexcept { return p_; }
    const Rational& q() const noexcept { return q_; }
    std::int64_t d() const noexcept { return d_; }

    bool is_zero() const noexcept { return p_.is_zero() && q_.is_zero(); }
    bool is_rational() const noexcept { return q_.is_zero(); }

    QuadElem conjugate() const { return {p_, -q_, d_}; }
    /// Field norm p^2 - d*q^2.
    Rational norm() const;

    QuadElem operator-() const { return {-p_, -q_, d_}; }
    QuadElem& operator+=(const QuadElem& rhs);
    QuadElem& operator-=(const QuadElem& rhs);
    QuadElem& operator*=(const QuadElem& rhs);
    QuadElem& operator/=(const QuadElem& rhs);
    QuadElem& operator*=(const Rational& scalar);

    friend QuadElem operator+(QuadElem lhs, const QuadElem& rhs) { return lhs += rhs; }
    friend QuadElem operator-(QuadElem lhs, const QuadElem& rhs) { return lhs -= rhs; }
    friend QuadElem operator*(QuadElem lhs, const QuadElem& rhs) { return lhs *= rhs; }
    friend QuadElem operator/(QuadElem lhs, const QuadElem& rhs) { return lhs /= rhs; }
    friend QuadElem operator*(QuadElem lhs, const Rational& rhs) { return lhs *= rhs; }
    friend QuadElem operator*(const Rational& lhs, QuadElem rhs) { return rhs *= lhs; }

    friend bool operator==(const QuadElem&, const QuadElem&) = default;

    std::string str() const;

private:
    Rational p_;
    Rational q_;
    std::int64_t d_;
};

/// Multiplicative inverse via conjugate over norm.
QuadElem inverse(const QuadElem& x);

/// x^e by repeated squaring; negative exponents go through inverse().
QuadElem pow(const QuadElem& x, std::int64_t e);

/// Returns the rational value of x. Throws IrrationalResidue if q != 0.
Rational to_rational(const QuadElem& x);

/// Absolute value of a purely rational element; throws IrrationalResidue otherwise.
Rational abs_rational(const QuadElem& x);

bool is_squarefree(std::int64_t d);

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

}  // namespace polyarea
