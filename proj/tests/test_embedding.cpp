#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "commgraph/embedding.hpp"
#include "commgraph/linalg.hpp"
#include "test_helpers.hpp"

using namespace commgraph;
using namespace cgtest;

namespace {
std::mt19937_64 rng(31337);
}

TEST_CASE("embedding of the imaginary unit matches the defining 2x2 block") {
    Matrix<Gaussian> E(1, 1, Gaussian::i());
    CHECK(complex_embed(E) == qmat({{0, 1}, {-1, 0}}));
}

TEST_CASE("embedding of identity and projections") {
    for (std::size_t k : {1u, 2u, 3u}) {
        auto I = Matrix<Gaussian>::identity(k, Gaussian(0));
        CHECK(complex_embed(I) == Matrix<Rational>::identity(2 * k, Rational(0)));
    }
    // phi(e1 e1^T) for k = 2 is diag(1,1,0,0)
    auto P = gmat({{Gaussian(1), Gaussian(0)}, {Gaussian(0), Gaussian(0)}});
    CHECK(complex_embed(P) == qmat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
}

TEST_CASE("embedding is a ring homomorphism") {
    for (int t = 0; t < 60; ++t) {
        std::size_t k = 2 + (t % 2);
        auto E = random_gmat(rng, k);
        auto F = random_gmat(rng, k);
        CHECK(complex_embed(E + F) == complex_embed(E) + complex_embed(F));
        CHECK(complex_embed(E * F) == complex_embed(E) * complex_embed(F));
    }
}

TEST_CASE("realification doubles rank") {
    for (int t = 0; t < 60; ++t) {
        std::size_t k = 1 + (t % 3);
        auto R = random_gmat(rng, k);
        CHECK(rank(complex_embed(R)) == 2 * rank(R));
    }
    // rank-one complex outer products in particular
    for (int t = 0; t < 20; ++t) {
        Vector<Gaussian> x, y;
        for (int i = 0; i < 3; ++i) {
            x.push_back(Gaussian(Rational((int)(rng() % 5) - 2), Rational((int)(rng() % 5) - 2)));
            y.push_back(Gaussian(Rational((int)(rng() % 5) - 2), Rational((int)(rng() % 5) - 2)));
        }
        auto R = Matrix<Gaussian>::outer(x, y);
        CHECK(rank(complex_embed(R)) == 2 * rank(R));
    }
}

TEST_CASE("preimage inverts the embedding and rejects off-image input") {
    for (int t = 0; t < 30; ++t) {
        auto E = random_gmat(rng, 2);
        CHECK(complex_preimage(complex_embed(E)) == E);
    }
    auto bad = qmat({{1, 2}, {3, 4}});
    CHECK_THROWS_AS(complex_preimage(bad), input_error);
    CHECK_THROWS_AS(complex_preimage(qmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), input_error);
}
