#pragma once

// Gaussian rationals: a + bi with exact rational components. The exact
// substitute for C used by the spectrum and Jordan machinery.

#include <string>
#include <string_view>

#include "commgraph/rational.hpp"

namespace commgraph {

class Gaussian {
public:
    Gaussian() = default;
    Gaussian(int v) : re_(v) {}                       // NOLINT: implicit by design
    Gaussian(Rational re) : re_(std::move(re)) {}     // NOLINT
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }  // |z|^2, exact

    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        return a * b.inverse();
    }

    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    Gaussian inverse() const {
        if (is_zero()) throw input_error("Gaussian: inverse of zero");
        Rational n = norm();
        return Gaussian(re_ / n, -im_ / n);
    }

    // Canonical "re+imi" / "re-imi" form, no spaces, e.g. "1/2-1/2i".
    std::string to_string() const {
        std::string s = re_.to_string();
        s += (im_.sign() < 0) ? '-' : '+';
        s += im_.abs().to_string();
        s += 'i';
        return s;
    }

    static Gaussian parse(std::string_view text);

private:
    Rational re_;
    Rational im_;
};

inline Gaussian gaussian_inverse(const Gaussian& z) { return z.inverse(); }

inline Gaussian Gaussian::parse(std::string_view text) {
    if (text.empty()) throw input_error("Gaussian: empty string");
    // Separator is the first top-level '+'/'-' after position 0. Components are
    // plain rationals, so a sign can only open the string or open the im part.
    std::size_t sep = std::string_view::npos;
    for (std::size_t j = 1; j < text.size(); ++j) {
        if (text[j] == '+' || text[j] == '-') {
            sep = j;
            break;
        }
    }
    if (text.back() != 'i') {
        if (sep != std::string_view::npos)
            throw input_error("Gaussian: missing trailing 'i' in '" + std::string(text) + "'");
        return Gaussian(Rational::parse(text));  // bare rational accepted as re+0i
    }
    if (sep == std::string_view::npos)
        throw input_error("Gaussian: malformed '" + std::string(text) + "'");
    Rational re = Rational::parse(text.substr(0, sep));
    std::string_view im_part = text.substr(sep, text.size() - sep - 1);  // keeps sign, drops 'i'
    if (im_part.size() <= 1) throw input_error("Gaussian: empty imaginary part");
    Rational im = Rational::parse(im_part);
    return Gaussian(std::move(re), std::move(im));
}

} // namespace commgraph
