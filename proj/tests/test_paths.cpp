#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "commgraph/generate.hpp"
#include "commgraph/paths.hpp"
#include "test_helpers.hpp"

using namespace commgraph;
using namespace cgtest;

namespace {
std::mt19937_64 rng(421700);

Matrix<Rational> companion_of_456() {
    // companion matrix of (x-4)(x-5)(x-6) = x^3 - 15x^2 + 74x - 120
    return qmat({{0, 0, 120}, {1, 0, -74}, {0, 1, 15}});
}

void check_certificate(const PathCertificate<Rational>& cert, const Matrix<Rational>& A,
                       const Matrix<Rational>& B, std::size_t max_len) {
    CHECK(verify(cert).ok);
    CHECK(cert.vertices.front() == A);
    CHECK(cert.vertices.back() == B);
    CHECK(cert.length() <= max_len);
}
} // namespace

TEST_CASE("rank_one_neighbor on diagonal matrices picks the lex-smallest eigenvalue") {
    auto D = qmat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    auto X = rank_one_neighbor(D);
    CHECK(X == unit_q(3, 1, 1));  // eigenvalue 1, x = y = e1
    CHECK(rank(X) == 1);
    CHECK(commutes(D, X));
}

TEST_CASE("rank_one_neighbor on a jordan block uses left and right eigenvectors") {
    // J2(0) ⊕ (1): right eigenvector e1, left eigenvector e2 for λ = 0.
    auto A = qmat({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
    auto X = rank_one_neighbor(A);
    CHECK(rank(X) == 1);
    CHECK(commutes(A, X));
    CHECK((A * X).is_zero());
    CHECK((X * A).is_zero());
}

TEST_CASE("rank_one_neighbor preconditions") {
    auto R = qmat({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    CHECK_THROWS_AS(rank_one_neighbor(R), input_error);
    CHECK_THROWS_AS(rank_one_neighbor(Matrix<Rational>::scalar(3, Rational(2))), input_error);
}

TEST_CASE("rank_two_neighbor on block rotations") {
    auto A = qmat({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    auto X = rank_two_neighbor(A);
    CHECK(X == qmat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    CHECK(rank(X) == 2);
    CHECK(commutes(A, X));

    auto B = qmat({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -2, 0}});
    auto Y = rank_two_neighbor(B);
    CHECK(rank(Y) == 2);
    CHECK(commutes(B, Y));
    CHECK_FALSE(is_central(Y));

    CHECK_THROWS_AS(rank_two_neighbor(qmat({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 4}})),
                    input_error);
}

TEST_CASE("rank witnesses under conjugation keep exact ranks") {
    SeededRng gen(9);
    for (int t = 0; t < 20; ++t) {
        auto S = random_unimodular(gen, 4, 12);
        auto A = conjugate(S, build_jordan_matrix({JordanBlock::complex_block(Rational(1), Rational(2), 1),
                                                   JordanBlock::complex_block(Rational(3), Rational(1), 1)}));
        auto X = rank_two_neighbor(A);
        CHECK(rank(X) == 2);
        CHECK(commutes(A, X));
        CHECK_FALSE(is_central(X));
    }
}

TEST_CASE("annihilator_witness") {
    // (E11, E12): e3 lies in both kernels and both left kernels; Z = E33 works.
    auto E11 = unit_q(3, 1, 1), E12 = unit_q(3, 1, 2);
    auto Z = annihilator_witness(E11, E12);
    CHECK_FALSE(is_central(Z));
    CHECK(commutes(Z, E11));
    CHECK(commutes(Z, E12));
    CHECK((Z * E11).is_zero());
    CHECK((E11 * Z).is_zero());

    // same-input case
    auto Z2 = annihilator_witness(E12, E12);
    CHECK_FALSE(is_central(Z2));
    CHECK(commutes(Z2, E12));

    auto inv = qmat({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
    CHECK_THROWS_AS(annihilator_witness(inv, E11), input_error);
}

TEST_CASE("midpoint_square_zero") {
    auto E12 = unit_q(3, 1, 2), E13 = unit_q(3, 1, 3), E21 = unit_q(3, 2, 1);
    auto W = midpoint_square_zero(E12, E13);
    CHECK_FALSE(is_central(W));
    CHECK(commutes(W, E12));
    CHECK(commutes(W, E13));

    auto W2 = midpoint_square_zero(E12, E21);
    CHECK_FALSE(is_central(W2));
    CHECK(commutes(W2, E12));
    CHECK(commutes(W2, E21));

    CHECK_THROWS_AS(midpoint_square_zero(unit_q(3, 1, 1), E12), input_error);
    CHECK_THROWS_AS(midpoint_square_zero(Matrix<Rational>::zero(3, 3, Rational(0)), E12), input_error);
    CHECK_THROWS_AS(midpoint_square_zero(unit_q(2, 1, 2), unit_q(2, 2, 1)), input_error);
}

TEST_CASE("midpoint_idempotents") {
    auto E11 = unit_q(3, 1, 1), E22 = unit_q(3, 2, 2);
    auto W = midpoint_idempotents(E11, E22);
    CHECK_FALSE(is_central(W));
    CHECK(commutes(W, E11));
    CHECK(commutes(W, E22));

    auto Wp = midpoint_idempotents(E11, E11);
    CHECK_FALSE(is_central(Wp));
    CHECK(commutes(Wp, E11));

    CHECK_THROWS_AS(midpoint_idempotents(qmat({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), E11), input_error);
    CHECK_THROWS_AS(midpoint_idempotents(Matrix<Rational>::identity(3, Rational(0)), E11), input_error);
}

TEST_CASE("connect: adjacent pair gives a single edge") {
    auto A = qmat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    auto B = qmat({{4, 0, 0}, {0, 5, 0}, {0, 0, 6}});
    auto cert = connect(A, B);
    CHECK(cert.route == "adjacent");
    check_certificate(cert, A, B, 1);
}

TEST_CASE("connect: rank-one route at order 3") {
    SeededRng gen(4);
    auto S = random_unimodular(gen, 3, 9);
    auto A = qmat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    auto B = conjugate(S, companion_of_456());
    auto cert = connect(A, B);
    CHECK(cert.route == "rank1-rank1");
    check_certificate(cert, A, B, 4);
}

TEST_CASE("connect: rank-two route at order 6") {
    std::vector<JordanBlock> sa{JordanBlock::complex_block(Rational(0), Rational(1), 1),
                                JordanBlock::complex_block(Rational(0), Rational(2), 1),
                                JordanBlock::complex_block(Rational(1), Rational(1), 1)};
    std::vector<JordanBlock> sb{JordanBlock::complex_block(Rational(2), Rational(3), 1),
                                JordanBlock::complex_block(Rational(1), Rational(4), 2)};
    auto A = generate_with_spectrum(sa, 11);
    auto B = generate_with_spectrum(sb, 12);
    auto cert = connect(A, B);
    CHECK(cert.route == "rank2-rank2");
    check_certificate(cert, A, B, 4);
}

TEST_CASE("connect: mixed route at order 4") {
    auto A = generate_with_spectrum({JordanBlock::real_block(Rational(1), 2),
                                     JordanBlock::real_block(Rational(5), 2)},
                                    21);
    auto B = generate_with_spectrum({JordanBlock::complex_block(Rational(0), Rational(1), 2)}, 22);
    auto cert = connect(A, B);
    CHECK(cert.route == "mixed");
    check_certificate(cert, A, B, 4);

    auto cert_rev = connect(B, A);
    CHECK(cert_rev.route == "mixed");
    check_certificate(cert_rev, B, A, 4);
}

TEST_CASE("connect: all six order-4 complex shape cases") {
    auto rep = [](int s) {
        return generate_with_spectrum({JordanBlock::complex_block(Rational(1), Rational(1), 1),
                                       JordanBlock::complex_block(Rational(1), Rational(1), 1)},
                                      s);
    };
    auto dist = [](int s) {
        return generate_with_spectrum({JordanBlock::complex_block(Rational(0), Rational(1), 1),
                                       JordanBlock::complex_block(Rational(0), Rational(2), 1)},
                                      s);
    };
    auto nd = [](int s) {
        return generate_with_spectrum({JordanBlock::complex_block(Rational(0), Rational(3), 2)}, s);
    };

    struct CasePair {
        Matrix<Rational> A, B;
        std::string route;
        std::size_t max_len;
    };
    std::vector<CasePair> cases{
        {rep(1), rep(2), "case1", 4},   {rep(3), dist(4), "case2", 4}, {rep(5), nd(6), "case3", 4},
        {dist(7), dist(8), "case4", 4}, {dist(9), nd(10), "case5", 5}, {nd(11), nd(12), "case6", 4},
    };
    for (const auto& c : cases) {
        auto cert = connect(c.A, c.B);
        CHECK(cert.route == c.route);
        check_certificate(cert, c.A, c.B, c.max_len);
        // swapped order must land in the same case with the same bound
        auto swapped = connect(c.B, c.A);
        CHECK(swapped.route == c.route);
        check_certificate(swapped, c.B, c.A, c.max_len);
    }
}

TEST_CASE("connect: case 5 emits the length-5 idempotent route") {
    auto A = generate_with_spectrum({JordanBlock::complex_block(Rational(0), Rational(1), 1),
                                     JordanBlock::complex_block(Rational(0), Rational(2), 1)},
                                    31);
    auto B = generate_with_spectrum({JordanBlock::complex_block(Rational(0), Rational(3), 2)}, 32);
    auto cert = connect(A, B);
    CHECK(cert.route == "case5");
    check_certificate(cert, A, B, 5);
    CHECK(cert.length() == 5);  // generic inputs: nothing collapses
}

TEST_CASE("connect input validation") {
    auto A = qmat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    CHECK_THROWS_AS(connect(A, A), input_error);
    CHECK_THROWS_AS(connect(A, Matrix<Rational>::scalar(3, Rational(7))), input_error);
    CHECK_THROWS_AS(connect(qmat({{1, 0}, {0, 2}}), qmat({{0, 1}, {1, 0}})), input_error);

    // unsupported spectrum on an eigenvalue-free side
    auto quartic = qmat({{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    auto C = generate_with_spectrum({JordanBlock::complex_block(Rational(0), Rational(1), 2)}, 5);
    CHECK_THROWS_AS(connect(quartic, C), unsupported_spectrum_error);
}

TEST_CASE("verify rejects tampered certificates with a named diagnostic") {
    auto A = qmat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    auto B = qmat({{4, 0, 0}, {0, 5, 0}, {0, 0, 6}});
    auto cert = connect(A, B);

    PathCertificate<Rational> scalar_vertex = cert;
    scalar_vertex.vertices.insert(scalar_vertex.vertices.begin() + 1,
                                  Matrix<Rational>::scalar(3, Rational(2)));
    auto r1 = verify(scalar_vertex);
    CHECK_FALSE(r1.ok);
    CHECK(r1.diagnostic.find("central") != std::string::npos);

    PathCertificate<Rational> bad_edge = cert;
    bad_edge.vertices.insert(bad_edge.vertices.begin() + 1, unit_q(3, 1, 2));
    auto r2 = verify(bad_edge);
    CHECK_FALSE(r2.ok);
    CHECK(r2.diagnostic.find("edge") != std::string::npos);

    PathCertificate<Rational> dup = cert;
    dup.vertices.push_back(cert.vertices[0]);
    auto r3 = verify(dup);
    CHECK_FALSE(r3.ok);
}

TEST_CASE("collapse_duplicate_vertices splices loops") {
    auto A = unit_q(3, 1, 1), B = unit_q(3, 2, 2), C = unit_q(3, 3, 3);
    std::vector<Matrix<Rational>> vs{A, B, A, C};
    collapse_duplicate_vertices(vs);
    REQUIRE(vs.size() == 2);
    CHECK(vs[0] == A);
    CHECK(vs[1] == C);

    std::vector<Matrix<Rational>> consec{A, B, B, C};
    collapse_duplicate_vertices(consec);
    CHECK(consec.size() == 3);
}

TEST_CASE("certify_lower_bound") {
    auto E11 = unit_q(3, 1, 1), E22 = unit_q(3, 2, 2);
    CHECK(certify_lower_bound(E11, E22).bound == 1);

    auto E12 = unit_q(3, 1, 2), E21 = unit_q(3, 2, 1);
    auto b2 = certify_lower_bound(E12, E21);
    CHECK(b2.bound == 2);
    CHECK(b2.evidence == "non-commuting");

    auto D = qmat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    auto P = qmat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    auto b3 = certify_lower_bound(D, P);
    CHECK(b3.bound == 3);
    CHECK(b3.evidence == "joint-centralizer-scalar-only");
}

TEST_CASE("distance bracketing for the diagonal / cyclic permutation pair") {
    auto D = qmat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    auto P = qmat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(certify_lower_bound(D, P).bound == 3);
    auto cert = connect(D, P);
    check_certificate(cert, D, P, 4);
    CHECK(cert.length() == 4);
}

TEST_CASE("connect over a prime field via the rank-one route") {
    auto A = fpmat(5, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    auto B = fpmat(5, {{0, 1, 0}, {0, 0, 0}, {0, 0, 2}});
    auto cert = connect(A, B);
    CHECK(verify(cert).ok);
    CHECK(cert.length() <= 4);
    CHECK(cert.vertices.front() == A);
    CHECK(cert.vertices.back() == B);
}

TEST_CASE("determinism: same inputs and seeds give identical certificates") {
    auto A = generate_with_spectrum({JordanBlock::real_block(Rational(2), 2),
                                     JordanBlock::real_block(Rational(-1), 1)},
                                    77);
    auto A2 = generate_with_spectrum({JordanBlock::real_block(Rational(2), 2),
                                      JordanBlock::real_block(Rational(-1), 1)},
                                     77);
    CHECK(A == A2);
    auto B = generate_with_spectrum({JordanBlock::real_block(Rational(0), 3)}, 78);
    auto c1 = connect(A, B);
    auto c2 = connect(A, B);
    CHECK(c1.vertices == c2.vertices);
    CHECK(c1.route == c2.route);
}
