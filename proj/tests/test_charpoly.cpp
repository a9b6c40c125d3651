#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "commgraph/charpoly.hpp"
#include "commgraph/linalg.hpp"
#include "test_helpers.hpp"

using namespace commgraph;
using namespace cgtest;

namespace {
std::mt19937_64 rng(55102);

// Independent oracle: Faddeev-LeVerrier recurrence. Valid over Q (divides by
// the step index), deliberately a different algorithm from the library path.
Poly<Rational> faddeev_leverrier(const Matrix<Rational>& A) {
    const std::size_t n = A.order();
    Poly<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    Matrix<Rational> M = Matrix<Rational>::zero(n, n, Rational(0));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        M = A * M;
        Rational t = M.trace();
        c[n - k] = -(t / Rational(static_cast<long long>(k)));
    }
    return c;
}
} // namespace

TEST_CASE("characteristic polynomial pinned examples") {
    // C(0,1) -> x^2 + 1
    auto C01 = qmat({{0, 1}, {-1, 0}});
    CHECK(characteristic_polynomial(C01) == Poly<Rational>{Rational(1), Rational(0), Rational(1)});

    // I3 -> (x-1)^3 = x^3 - 3x^2 + 3x - 1
    auto I3 = Matrix<Rational>::identity(3, Rational(0));
    CHECK(characteristic_polynomial(I3) ==
          Poly<Rational>{Rational(-1), Rational(3), Rational(-3), Rational(1)});

    // J2(5) -> (x-5)^2 = x^2 - 10x + 25
    auto J = qmat({{5, 1}, {0, 5}});
    CHECK(characteristic_polynomial(J) == Poly<Rational>{Rational(25), Rational(-10), Rational(1)});
}

TEST_CASE("berkowitz agrees with the Faddeev-LeVerrier oracle") {
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + (rng() % 5);
        auto A = random_qmat(rng, n);
        CHECK(characteristic_polynomial(A) == faddeev_leverrier(A));
    }
}

TEST_CASE("characteristic polynomial over small prime fields") {
    // Over F_2 a division-based recurrence would fail; Berkowitz must not.
    auto A = fpmat(2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    auto p = characteristic_polynomial(A);
    REQUIRE(p.size() == 4);
    CHECK(p[3] == Fp(1, 2));
    // det(xI - A) at x = 0 is det(-A) = -det(A); verify via rank over F_2.
    CHECK((p[0] == Fp(0, 2)) == (rank(A) < 3));
}

TEST_CASE("Cayley-Hamilton: A satisfies its own characteristic polynomial") {
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + (rng() % 4);
        auto A = random_qmat(rng, n);
        auto p = characteristic_polynomial(A);
        CHECK(poly_eval_matrix(p, A).is_zero());
    }
    for (int t = 0; t < 10; ++t) {
        auto G = random_gmat(rng, 3);
        CHECK(poly_eval_matrix(characteristic_polynomial(G), G).is_zero());
    }
}

TEST_CASE("poly_divmod_monic") {
    // (x^2+1) = (x - i)(x + i) over Q(i)
    Poly<Gaussian> p{Gaussian(1), Gaussian(0), Gaussian(1)};
    auto q = poly_deflate_root(p, Gaussian::i());
    CHECK(q == Poly<Gaussian>{Gaussian::i(), Gaussian(1)});

    Poly<Rational> num{Rational(2), Rational(3), Rational(1)};  // (x+1)(x+2)
    auto [quot, rem] = poly_divmod_monic(num, Poly<Rational>{Rational(1), Rational(1)});
    CHECK(quot == Poly<Rational>{Rational(2), Rational(1)});
    CHECK(rem == Poly<Rational>{Rational(0)});
}
