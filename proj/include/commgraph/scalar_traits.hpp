#pragma once

// Uniform access to the scalar domains. Matrices are never empty, so an
// exemplar entry supplies domain context (the modulus of F_p in particular).

#include <string>

#include "commgraph/gaussian.hpp"
#include "commgraph/prime_field.hpp"
#include "commgraph/rational.hpp"

namespace commgraph {

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr const char* domain_name = "Q";
    static constexpr bool exact = true;
    static Rational zero(const Rational&) { return Rational(); }
    static Rational one(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static std::string to_string(const Rational& x) { return x.to_string(); }
    static Rational parse(const std::string& s, const Rational&) { return Rational::parse(s); }
};

template <>
struct scalar_traits<Gaussian> {
    static constexpr const char* domain_name = "Qi";
    static constexpr bool exact = true;
    static Gaussian zero(const Gaussian&) { return Gaussian(); }
    static Gaussian one(const Gaussian&) { return Gaussian(1); }
    static bool is_zero(const Gaussian& x) { return x.is_zero(); }
    static std::string to_string(const Gaussian& x) { return x.to_string(); }
    static Gaussian parse(const std::string& s, const Gaussian&) { return Gaussian::parse(s); }
};

template <>
struct scalar_traits<Fp> {
    static constexpr const char* domain_name = "Fp";
    static constexpr bool exact = true;
    static Fp zero(const Fp& like) { return Fp(0, like.modulus()); }
    static Fp one(const Fp& like) { return Fp(1, like.modulus()); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static std::string to_string(const Fp& x) { return x.to_string(); }
    static Fp parse(const std::string& s, const Fp& like) {
        for (char c : s)
            if (c < '0' || c > '9') throw input_error("Fp: invalid entry '" + s + "'");
        unsigned long long v = std::stoull(s);
        if (v >= like.modulus())
            throw input_error("Fp: entry " + s + " out of range for modulus " + std::to_string(like.modulus()));
        return Fp(v, like.modulus());
    }
};

template <>
struct scalar_traits<double> {
    static constexpr const char* domain_name = "R";
    static constexpr bool exact = false;
    static double zero(double) { return 0.0; }
    static double one(double) { return 1.0; }
    static bool is_zero(double x) { return x == 0.0; }
    static std::string to_string(double x) { return std::to_string(x); }
};

template <class K>
concept ExactScalar = scalar_traits<K>::exact;

} // namespace commgraph
