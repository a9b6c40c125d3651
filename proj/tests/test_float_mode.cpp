#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "commgraph/float_mode.hpp"
#include "test_helpers.hpp"

using namespace commgraph;

namespace {
std::mt19937_64 rng(880011);

double unit_draw() { return 2.0 * (static_cast<double>(rng()) / 18446744073709551616.0) - 1.0; }

Matrix<double> random_real(std::size_t n) {
    Matrix<double> m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = unit_draw();
    return m;
}

// rotation-block matrix with no real eigenvalues
Matrix<double> rotationish(std::size_t pairs, double base) {
    Matrix<double> m(2 * pairs, 2 * pairs, 0.0);
    for (std::size_t t = 0; t < pairs; ++t) {
        const double a = 0.3 * static_cast<double>(t + 1), b = base * static_cast<double>(t + 1);
        m(2 * t, 2 * t) = a;
        m(2 * t, 2 * t + 1) = b;
        m(2 * t + 1, 2 * t) = -b;
        m(2 * t + 1, 2 * t + 1) = a;
    }
    return m;
}
} // namespace

TEST_CASE("float connect on random well-conditioned pairs") {
    Tolerance tol;
    int done = 0;
    while (done < 30) {
        auto A = random_real(4);
        auto B = random_real(4);
        PathCertificate<double> cert;
        try {
            cert = connect(A, B, tol);
        } catch (const input_error&) {
            continue;  // ill-conditioned draw
        }
        auto rep = verify(cert, tol);
        REQUIRE(rep.ok);
        for (double r : rep.edge_residuals) CHECK(r <= 1e-9);
        CHECK(cert.length() <= 5);
        ++done;
    }
}

TEST_CASE("float connect routes") {
    Tolerance tol;
    // both sides with real eigenvalues: diagonal-ish
    auto D1 = Matrix<double>::diagonal({1.0, 2.0, 3.0, 4.0});
    auto R1 = random_real(4);
    auto A = D1 + 0.01 * R1;  // perturbed distinct real spectrum (generically)
    auto B2 = rotationish(2, 1.0);
    auto cert_mixed = connect(A, B2, tol);
    CHECK((cert_mixed.route == "mixed" || cert_mixed.route == "adjacent"));
    CHECK(verify(cert_mixed, tol).ok);

    // both complex at order 4: projector route
    auto C1 = rotationish(2, 1.0);
    auto C2per = rotationish(2, 0.7);
    // conjugate one side so the pair does not commute
    Matrix<double> T(4, 4, 0.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) T(i, j) = (i == j ? 1.0 : 0.0) + 0.1 * unit_draw();
    Eigen::MatrixXd Te(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) Te(i, j) = T(i, j);
    Eigen::MatrixXd C2e(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) C2e(i, j) = C2per(i, j);
    Eigen::MatrixXd conj = Te * C2e * Te.inverse();
    Matrix<double> C2(4, 4, 0.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) C2(i, j) = conj(i, j);
    auto cert4 = connect(C1, C2, tol);
    CHECK(cert4.route == "case4");
    auto rep = verify(cert4, tol);
    REQUIRE(rep.ok);
    for (double r : rep.edge_residuals) CHECK(r <= 1e-9);

    // both complex at order 6: rank-two route
    auto S1 = rotationish(3, 1.0);
    Matrix<double> S2(6, 6, 0.0);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) S2(i, j) = (i + 2) * ((i + j) % 3 == 0 ? 0.2 : -0.1);
    // build a second no-real-eigenvalue matrix by similarity of rotations
    auto base = rotationish(3, 0.6);
    Eigen::MatrixXd Q(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) Q(i, j) = (i == j ? 1.0 : 0.0) + 0.05 * unit_draw();
    Eigen::MatrixXd be(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) be(i, j) = base(i, j);
    Eigen::MatrixXd bc = Q * be * Q.inverse();
    Matrix<double> B6(6, 6, 0.0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) B6(i, j) = bc(i, j);
    auto cert6 = connect(S1, B6, tol);
    CHECK(cert6.route == "rank2-rank2");
    CHECK(verify(cert6, tol).ok);
}

TEST_CASE("float verify rejects tampering") {
    Tolerance tol;
    auto A = Matrix<double>::diagonal({1.0, 2.0, 3.0});
    auto B = Matrix<double>::diagonal({4.0, 5.0, 6.0});
    auto cert = connect(A, B, tol);
    REQUIRE(verify(cert, tol).ok);

    auto tampered = cert;
    tampered.vertices[0](0, 1) += 1e-3;
    auto rep = verify(tampered, tol);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.diagnostic.empty());

    auto with_scalar = cert;
    with_scalar.vertices.push_back(Matrix<double>::scalar(3, 2.0));
    CHECK_FALSE(verify(with_scalar, tol).ok);
}

TEST_CASE("float connect input validation") {
    Tolerance tol;
    auto A = Matrix<double>::diagonal({1.0, 2.0, 3.0});
    CHECK_THROWS_AS(connect(A, A, tol), input_error);
    CHECK_THROWS_AS(connect(A, Matrix<double>::scalar(3, 5.0), tol), input_error);
}
