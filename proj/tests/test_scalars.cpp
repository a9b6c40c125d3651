#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "commgraph/approx.hpp"
#include "commgraph/gaussian.hpp"
#include "commgraph/prime_field.hpp"
#include "commgraph/rational.hpp"

using namespace commgraph;

namespace {

std::mt19937_64 rng(20240911);

Rational random_rational() {
    long long n = static_cast<long long>(rng() % 41) - 20;
    long long d = 1 + static_cast<long long>(rng() % 9);
    return Rational(BigInt(n), BigInt(d));
}

Gaussian random_gaussian() { return Gaussian(random_rational(), random_rational()); }

} // namespace

TEST_CASE("rational_reduce canonical form") {
    CHECK(rational_reduce(2, 4) == Rational(BigInt(1), BigInt(2)));
    CHECK(rational_reduce(-3, -6) == Rational(BigInt(1), BigInt(2)));
    CHECK(rational_reduce(0, 7) == Rational(0));
    CHECK(rational_reduce(0, 7).den() == 1);
    CHECK(rational_reduce(4, -6).num() == -2);
    CHECK(rational_reduce(4, -6).den() == 3);
    CHECK_THROWS_AS(rational_reduce(1, 0), input_error);
}

TEST_CASE("rational text round trip") {
    CHECK(Rational::parse("5").to_string() == "5");
    CHECK(Rational::parse("-3/7").to_string() == "-3/7");
    CHECK(Rational::parse("6/4").to_string() == "3/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), input_error);
    CHECK_THROWS_AS(Rational::parse("a/2"), input_error);
    CHECK_THROWS_AS(Rational::parse(""), input_error);
    for (int t = 0; t < 50; ++t) {
        Rational r = random_rational();
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("rational field axioms on random triples") {
    for (int t = 0; t < 200; ++t) {
        Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("gaussian_inverse") {
    const Gaussian i = Gaussian::i();
    CHECK(gaussian_inverse(i) == -i);
    Gaussian z(Rational(1), Rational(1));
    Gaussian inv = gaussian_inverse(z);
    CHECK(inv == Gaussian(Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(2))));
    CHECK(z * inv == Gaussian(1));
    CHECK_THROWS_AS(gaussian_inverse(Gaussian()), input_error);
}

TEST_CASE("gaussian field axioms and conjugation involution") {
    for (int t = 0; t < 200; ++t) {
        Gaussian a = random_gaussian(), b = random_gaussian(), c = random_gaussian();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Gaussian(1));
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("gaussian text round trip") {
    Gaussian z(Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(2)));
    CHECK(z.to_string() == "1/2-1/2i");
    CHECK(Gaussian::parse("1/2-1/2i") == z);
    CHECK(Gaussian::parse("0+1i") == Gaussian::i());
    CHECK(Gaussian::parse("-3").is_real());
    CHECK_THROWS_AS(Gaussian::parse("1+2"), input_error);
    for (int t = 0; t < 50; ++t) {
        Gaussian g = random_gaussian();
        CHECK(Gaussian::parse(g.to_string()) == g);
    }
}

TEST_CASE("prime_inverse") {
    CHECK(prime_inverse(Fp(3, 7)) == Fp(5, 7));
    CHECK(prime_inverse(Fp(1, 13)) == Fp(1, 13));
    CHECK_THROWS_AS(prime_inverse(Fp(0, 7)), input_error);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u}) {
        for (std::uint32_t a = 1; a < std::min(p, 40u); ++a) {
            CHECK(Fp(a, p) * prime_inverse(Fp(a, p)) == Fp(1, p));
        }
    }
}

TEST_CASE("prime field axioms") {
    const std::uint32_t p = 11;
    for (int t = 0; t < 200; ++t) {
        Fp a(rng() % p, p), b(rng() % p, p), c(rng() % p, p);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Fp(0, p));
    }
    CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 11), input_error);
}

TEST_CASE("prime modulus validation") {
    CHECK_NOTHROW(check_prime_modulus(2));
    CHECK_NOTHROW(check_prime_modulus(65521));
    CHECK_THROWS_AS(check_prime_modulus(1), input_error);
    CHECK_THROWS_AS(check_prime_modulus(9), input_error);
    CHECK_THROWS_AS(check_prime_modulus(1u << 16), input_error);
}

TEST_CASE("approx equality is reflexive and symmetric under the policy") {
    Tolerance tol;
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    for (int t = 0; t < 200; ++t) {
        double x = dist(rng), y = x * (1.0 + 1e-12);
        CHECK(approx_equal(x, x, tol));
        CHECK(approx_equal(x, y, tol) == approx_equal(y, x, tol));
    }
    CHECK_FALSE(approx_equal(1.0, 1.001, tol));
    CHECK_THROWS_AS(ApproxReal(std::numeric_limits<double>::infinity()), input_error);
    CHECK_THROWS_AS(ApproxReal(std::nan("")), input_error);
}
