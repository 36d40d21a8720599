#include "polyarea/numerics.hpp"

#include <ostream>
#include <sstream>

namespace polyarea {

Rational::Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw DivisionByZero("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g < 0) g = -g;
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ -= rhs.num_;
    } else {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const BigInt left = lhs.num_ * rhs.den_;
    const BigInt right = rhs.num_ * lhs.den_;
    if (left < right) return std::strong_ordering::less;
    if (left > right) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("malformed rational: '" + text + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("malformed rational: '" + text + "'");
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument("malformed rational: '" + text + "'");
            }
        }
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw DivisionByZero("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    const auto e = static_cast<unsigned>(exponent);
    return Rational(boost::multiprecision::pow(base.numerator(), e),
                    boost::multiprecision::pow(base.denominator(), e));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

bool is_squarefree(std::int64_t d) {
    if (d <= 0) return false;
    for (std::int64_t f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0) return false;
    }
    return true;
}

QuadElem::QuadElem(Rational p, Rational q, std::int64_t d)
    : p_(std::move(p)), q_(std::move(q)), d_(d) {
    // d = 1 is squarefree but degenerate (sqrt(1) is rational); reject it.
    if (d_ < 2 || !is_squarefree(d_)) {
        throw std::domain_error("radicand must be a squarefree integer >= 2, got " +
                                std::to_string(d_));
    }
}

namespace {

void require_same_field(const QuadElem& x, const QuadElem& y) {
    if (x.d() != y.d()) {
        throw RadicandMismatch("cannot combine Q(sqrt " + std::to_string(x.d()) +
                               ") with Q(sqrt " + std::to_string(y.d()) + ")");
    }
}

}  // namespace

Rational QuadElem::norm() const { return p_ * p_ - Rational(d_) * q_ * q_; }

QuadElem& QuadElem::operator+=(const QuadElem& rhs) {
    require_same_field(*this, rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs) {
    require_same_field(*this, rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs) {
    require_same_field(*this, rhs);
    Rational p = p_ * rhs.p_ + Rational(d_) * q_ * rhs.q_;
    Rational q = p_ * rhs.q_ + q_ * rhs.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& rhs) {
    require_same_field(*this, rhs);
    return *this *= inverse(rhs);
}

QuadElem& QuadElem::operator*=(const Rational& scalar) {
    p_ *= scalar;
    q_ *= scalar;
    return *this;
}

std::string QuadElem::str() const {
    std::ostringstream os;
    os << p_.str() << (q_.sign() < 0 ? " - " : " + ") << abs(q_).str() << "*sqrt(" << d_ << ")";
    return os.str();
}

QuadElem inverse(const QuadElem& x) {
    if (x.is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt " + std::to_string(x.d()) + ")");
    // norm != 0 for nonzero x because d is squarefree and not 1.
    const Rational n = x.norm();
    return {x.p() / n, -x.q() / n, x.d()};
}

QuadElem pow(const QuadElem& x, std::int64_t e) {
    if (e < 0) return pow(inverse(x), -e);
    QuadElem result = QuadElem::one(x.d());
    QuadElem base = x;
    auto bits = static_cast<std::uint64_t>(e);
    while (bits != 0) {
        if (bits & 1U) result *= base;
        bits >>= 1U;
        if (bits != 0) base *= base;
    }
    return result;
}

Rational to_rational(const QuadElem& x) {
    if (!x.is_rational()) {
        throw IrrationalResidue("expected a rational value, got " + x.str());
    }
    return x.p();
}

Rational abs_rational(const QuadElem& x) { return abs(to_rational(x)); }

std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.str(); }

}  // namespace polyarea
