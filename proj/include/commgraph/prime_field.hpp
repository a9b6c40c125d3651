#pragma once

// Prime field F_p elements. Each element carries its modulus; mixing moduli is
// an input error. p is capped below 2^16 so products accumulate in 64 bits.

#include <cstdint>
#include <string>

#include "commgraph/errors.hpp"

namespace commgraph {

constexpr std::uint32_t kMaxPrimeModulus = 1u << 16;

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline void check_prime_modulus(std::uint32_t p) {
    if (p >= kMaxPrimeModulus)
        throw input_error("prime field: modulus " + std::to_string(p) + " exceeds 2^16 cap");
    if (!is_prime_u32(p))
        throw input_error("prime field: modulus " + std::to_string(p) + " is not prime");
}

class Fp {
public:
    Fp() : v_(0), p_(2) {}
    Fp(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % p_; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.require_same(b);
        return Fp(static_cast<std::uint64_t>(a.v_) + b.v_, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.require_same(b);
        return Fp(static_cast<std::uint64_t>(a.v_) + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.require_same(b);
        return Fp(static_cast<std::uint64_t>(a.v_) * b.v_, a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        a.require_same(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (v_ == 0) throw input_error("Fp: inverse of zero");
        // extended Euclid
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += p_;
        return Fp(static_cast<std::uint64_t>(t), p_);
    }

    std::string to_string() const { return std::to_string(v_); }

private:
    void require_same(const Fp& o) const {
        if (p_ != o.p_) throw input_error("Fp: mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline Fp prime_inverse(const Fp& a) { return a.inverse(); }

} // namespace commgraph
