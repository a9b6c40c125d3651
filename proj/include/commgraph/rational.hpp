#pragma once

// Exact rational scalar on top of an arbitrary-precision integer.
// Always kept in canonical form: gcd(|num|, den) == 1, den >= 1, zero is 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "commgraph/errors.hpp"

namespace commgraph {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}            // NOLINT: implicit by design
    Rational(long long v) : num_(v), den_(1) {}      // NOLINT
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}

    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw input_error("Rational: zero denominator");
        canonicalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return Rational(raw_tag{}, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw input_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational inverse() const {
        if (is_zero()) throw input_error("Rational: inverse of zero");
        return Rational(raw_tag{}, num_ < 0 ? -den_ : den_, boost::multiprecision::abs(num_));
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    static Rational parse(std::string_view text);

    double to_double() const {
        return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
    }

private:
    struct raw_tag {};
    Rational(raw_tag, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void canonicalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational rational_reduce(BigInt numerator, BigInt denominator) {
    return Rational(std::move(numerator), std::move(denominator));
}

inline Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) throw input_error("Rational: empty integer in '" + std::string(s) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw input_error("Rational: sign without digits");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw input_error("Rational: invalid digit in '" + std::string(s) + "'");
        BigInt v(std::string(s.substr(i)));
        return s[0] == '-' ? BigInt(-v) : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt n = parse_int(text.substr(0, slash));
    std::string_view den_part = text.substr(slash + 1);
    if (!den_part.empty() && (den_part[0] == '-' || den_part[0] == '+'))
        throw input_error("Rational: signed denominator in '" + std::string(text) + "'");
    BigInt d = parse_int(den_part);
    if (d == 0) throw input_error("Rational: zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(n), std::move(d));
}

} // namespace commgraph
