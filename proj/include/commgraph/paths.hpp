#pragma once

// The constructive core: commuting rank-one / rank-two neighbors, annihilator
// and midpoint witnesses, and the dispatch that produces verified paths of
// length <= 4 (order != 4) or <= 5 (order 4) between any two non-scalar
// matrices with supported spectra.
//
// Midpoints are found by solving the joint commutation system exactly; the
// explicit v w^T construction is used when both the right and left kernel
// intersections are nontrivial, which yields a rank-one witness.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/centralizer.hpp"
#include "commgraph/certificate.hpp"
#include "commgraph/jordan.hpp"
#include "commgraph/spectrum.hpp"

namespace commgraph {

// Tie-break order for eigenvalue choices: (numerator, denominator)
// lexicographic. Deterministic, no mathematical content.
inline bool numden_lex_less(const Rational& x, const Rational& y) {
    if (x.num() != y.num()) return x.num() < y.num();
    return x.den() < y.den();
}

namespace detail_paths {

template <ExactScalar K>
Matrix<K> rank_one_from_eigenvalue(const Matrix<K>& A, const K& lambda) {
    const std::size_t n = A.order();
    Matrix<K> M = A;
    for (std::size_t i = 0; i < n; ++i) M(i, i) -= lambda;
    SubspaceBasis<K> right = kernel_basis(M);
    SubspaceBasis<K> left = kernel_basis(M.transpose());
    if (right.trivial() || left.trivial())
        throw input_error("rank_one_neighbor: not an eigenvalue of the matrix");
    Matrix<K> X = Matrix<K>::outer(right.vectors.front(), left.vectors.front());
    if (!commutes(A, X)) throw internal_error("rank_one_neighbor: witness does not commute");
    return X;
}

} // namespace detail_paths

// Rank-one commuting neighbor from an eigenvalue in the base field:
// X = x y^T with x, y eigenvectors of A and A^T for the same eigenvalue.
inline Matrix<Rational> rank_one_neighbor(const Matrix<Rational>& A) {
    if (is_central(A)) throw input_error("rank_one_neighbor: scalar input");
    auto evs = rational_eigenvalues(A);
    if (evs.empty()) throw input_error("rank_one_neighbor: no rational eigenvalue");
    Rational lambda = evs.front().first;
    for (const auto& [v, m] : evs)
        if (numden_lex_less(v, lambda)) lambda = v;
    return detail_paths::rank_one_from_eigenvalue(A, lambda);
}

// Eigenvalues of a matrix over F_p by direct scan; p is small by the domain cap.
inline std::vector<Fp> field_eigenvalues(const Matrix<Fp>& A) {
    const std::uint32_t p = A.exemplar().modulus();
    const std::size_t n = A.order();
    std::vector<Fp> out;
    for (std::uint32_t v = 0; v < p; ++v) {
        Matrix<Fp> M = A;
        for (std::size_t i = 0; i < n; ++i) M(i, i) -= Fp(v, p);
        if (rank(M) < n) out.push_back(Fp(v, p));
    }
    return out;
}

inline Matrix<Fp> rank_one_neighbor(const Matrix<Fp>& A) {
    if (is_central(A)) throw input_error("rank_one_neighbor: scalar input");
    auto evs = field_eigenvalues(A);
    if (evs.empty()) throw input_error("rank_one_neighbor: no eigenvalue in the base field");
    return detail_paths::rank_one_from_eigenvalue(A, evs.front());
}

// Rank-two commuting neighbor for a matrix without real eigenvalues:
// realification of a rank-one complex witness through the Jordan transform.
inline Matrix<Rational> rank_two_neighbor(const Matrix<Rational>& A) {
    if (is_central(A)) throw input_error("rank_two_neighbor: scalar input");
    if (!rational_eigenvalues(A).empty())
        throw input_error("rank_two_neighbor: matrix has a real eigenvalue");
    RealJordanForm f = real_jordan_form(A);  // propagates unsupported_spectrum_error
    const Matrix<Rational> J = f.jordan_matrix();
    const Matrix<Gaussian> E = complex_preimage(J);

    Gaussian lambda(f.blocks.front().a, f.blocks.front().b);
    for (const auto& blk : f.blocks) {
        Gaussian v(blk.a, blk.b);
        if (gaussian_lex_less(v, lambda)) lambda = v;
    }
    const std::size_t k = E.order();
    Matrix<Gaussian> M = E;
    for (std::size_t i = 0; i < k; ++i) M(i, i) -= lambda;
    SubspaceBasis<Gaussian> right = kernel_basis(M);
    SubspaceBasis<Gaussian> left = kernel_basis(M.transpose());
    if (right.trivial() || left.trivial())
        throw internal_error("rank_two_neighbor: block eigenvalue lost");
    Matrix<Gaussian> R = Matrix<Gaussian>::outer(right.vectors.front(), left.vectors.front());
    if (is_central(complex_embed(R))) R = Gaussian::i() * R;  // only reachable at order 2
    Matrix<Rational> X = conjugate(f.transform, complex_embed(R));
    if (!commutes(A, X)) throw internal_error("rank_two_neighbor: witness does not commute");
    if (rank(X) != 2) throw internal_error("rank_two_neighbor: witness rank is not 2");
    if (is_central(X)) throw internal_error("rank_two_neighbor: central witness");
    return X;
}

// Non-central Z commuting with both X and Y, given ker X ∩ ker Y != 0.
// With a two-sided kernel overlap this is the rank-one v w^T annihilator;
// otherwise the joint commutation system supplies a witness.
template <ExactScalar K>
Matrix<K> annihilator_witness(const Matrix<K>& X, const Matrix<K>& Y) {
    detail::require_compatible_pair(X, Y);
    SubspaceBasis<K> right = subspace_intersection(kernel_basis(X), kernel_basis(Y));
    if (right.trivial()) throw input_error("annihilator_witness: kernels intersect trivially");
    SubspaceBasis<K> left = subspace_intersection(kernel_basis(X.transpose()), kernel_basis(Y.transpose()));
    if (!left.trivial()) {
        Matrix<K> Z = Matrix<K>::outer(right.vectors.front(), left.vectors.front());
        if (is_central(Z)) throw internal_error("annihilator_witness: rank-one witness is central");
        return Z;
    }
    auto W = joint_centralizer_noncentral(X, Y);
    if (!W)
        throw internal_error(
            "annihilator_witness: joint centralizer is scalars-only despite kernel overlap");
    return *W;
}

// Lemma guarantee: two nonzero square-zero matrices have a common non-scalar
// commuting neighbor (order >= 3).
template <ExactScalar K>
Matrix<K> midpoint_square_zero(const Matrix<K>& M, const Matrix<K>& N) {
    detail::require_compatible_pair(M, N);
    const std::size_t n = M.order();
    if (n < 3) throw input_error("midpoint_square_zero: order must be >= 3");
    if (M.is_zero() || N.is_zero()) throw input_error("midpoint_square_zero: zero input");
    if (!(M * M).is_zero() || !(N * N).is_zero())
        throw input_error("midpoint_square_zero: inputs must square to zero");
    auto W = joint_centralizer_noncentral(M, N);
    if (!W) throw internal_error("midpoint_square_zero: no non-scalar joint witness found");
    return *W;
}

// Lemma guarantee: two non-scalar idempotents have a common non-scalar
// commuting neighbor (order >= 3).
template <ExactScalar K>
Matrix<K> midpoint_idempotents(const Matrix<K>& P, const Matrix<K>& Q) {
    detail::require_compatible_pair(P, Q);
    const std::size_t n = P.order();
    if (n < 3) throw input_error("midpoint_idempotents: order must be >= 3");
    if (!(P * P == P) || !(Q * Q == Q)) throw input_error("midpoint_idempotents: inputs must be idempotent");
    if (is_central(P) || is_central(Q)) throw input_error("midpoint_idempotents: scalar idempotent");
    auto W = joint_centralizer_noncentral(P, Q);
    if (!W) throw internal_error("midpoint_idempotents: no non-scalar joint witness found");
    return *W;
}

namespace detail_paths {

template <ExactScalar K>
PathCertificate<K> finish_certificate(std::vector<Matrix<K>> vertices, std::string route) {
    collapse_duplicate_vertices(vertices);
    PathCertificate<K> cert{std::move(vertices), std::move(route)};
    VerifyReport rep = verify(cert);
    if (!rep.ok) throw internal_error("connect: constructed certificate failed verification: " + rep.diagnostic);
    return cert;
}

template <ExactScalar K>
void require_connect_inputs(const Matrix<K>& A, const Matrix<K>& B) {
    detail::require_compatible_pair(A, B);
    if (A.order() < 3) throw input_error("connect: order must be >= 3");
    if (is_central(A) || is_central(B)) throw input_error("connect: scalar input");
    if (A == B) throw input_error("connect: endpoints must be distinct");
}

// Rank-one route A - X - Z - Y - B; field-generic given eigen-availability.
template <ExactScalar K>
PathCertificate<K> connect_via_rank_one(const Matrix<K>& A, const Matrix<K>& B, std::string route) {
    Matrix<K> X = rank_one_neighbor(A);
    Matrix<K> Y = rank_one_neighbor(B);
    Matrix<K> Z = annihilator_witness(X, Y);
    return finish_certificate<K>({A, X, Z, Y, B}, std::move(route));
}

// Order-4, both without real eigenvalues: the six shape-pair cases.
inline PathCertificate<Rational> connect_4x4_complex(const Matrix<Rational>& A, const Matrix<Rational>& B) {
    const Shape4x4 sa = classify_shape_4x4(A);
    const Shape4x4 sb = classify_shape_4x4(B);
    const int ra = static_cast<int>(sa), rb = static_cast<int>(sb);
    if (ra > rb) {
        PathCertificate<Rational> swapped = connect_4x4_complex(B, A);
        std::vector<Matrix<Rational>> rev(swapped.vertices.rbegin(), swapped.vertices.rend());
        return finish_certificate<Rational>(std::move(rev), swapped.route);
    }

    const RealJordanForm fa = real_jordan_form(A);
    const RealJordanForm fb = real_jordan_form(B);
    const Matrix<Rational>& S = fa.transform;
    const Matrix<Rational>& L = fb.transform;

    const Matrix<Rational> proj_top =
        Matrix<Rational>::diagonal({Rational(1), Rational(1), Rational(0), Rational(0)});
    const Matrix<Rational> proj_bottom =
        Matrix<Rational>::diagonal({Rational(0), Rational(0), Rational(1), Rational(1)});
    Matrix<Rational> corner = Matrix<Rational>::zero(4, 4, Rational(0));
    corner(0, 2) = Rational(1);
    corner(1, 3) = Rational(1);

    const bool a_rep = sa == Shape4x4::PairRepeated;
    const bool a_dist = sa == Shape4x4::PairDistinct;
    const bool b_dist = sb == Shape4x4::PairDistinct;
    const bool b_nd = sb == Shape4x4::Nondiagonalizable;

    std::string route;
    if (a_rep && sb == Shape4x4::PairRepeated) route = "case1";
    else if (a_rep && b_dist) route = "case2";
    else if (a_rep && b_nd) route = "case3";
    else if (a_dist && b_dist) route = "case4";
    else if (a_dist && b_nd) route = "case5";
    else route = "case6";

    if (route == "case3" || route == "case6") {
        Matrix<Rational> N1 = conjugate(S, corner);
        Matrix<Rational> N2 = conjugate(L, corner);
        Matrix<Rational> X = midpoint_square_zero(N1, N2);
        return finish_certificate<Rational>({A, N1, X, N2, B}, route);
    }
    if (route == "case5") {
        Matrix<Rational> I1 = conjugate(S, proj_bottom);
        Matrix<Rational> I2 = conjugate(L, proj_top);
        const JordanBlock& bb = fb.blocks.front();  // single C_2(a,b) block
        Matrix<Rational> B1 = realified_cell(Gaussian(bb.a, bb.b));
        Matrix<Rational> doubled = Matrix<Rational>::zero(4, 4, Rational(0));
        for (std::size_t t = 0; t < 2; ++t)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) doubled(2 * t + i, 2 * t + j) = B1(i, j);
        Matrix<Rational> Bprime = conjugate(L, doubled);
        if (!commutes(Bprime, B)) throw internal_error("connect: case-5 B' does not commute with B");
        Matrix<Rational> X = midpoint_idempotents(I1, I2);
        return finish_certificate<Rational>({A, I1, X, I2, Bprime, B}, route);
    }
    Matrix<Rational> I1 = conjugate(S, proj_top);
    Matrix<Rational> I2 = conjugate(L, proj_top);
    Matrix<Rational> X = midpoint_idempotents(I1, I2);
    return finish_certificate<Rational>({A, I1, X, I2, B}, route);
}

} // namespace detail_paths

// Verified path between two non-scalar rational matrices. Length <= 4 for
// order != 4, <= 5 for order 4 (case 5 only). Exact mode requires a supported
// spectrum on any side that lacks a rational eigenvalue; a rational eigenvalue
// is enough for the rank-one route regardless of the rest of the spectrum.
inline PathCertificate<Rational> connect(const Matrix<Rational>& A, const Matrix<Rational>& B) {
    using namespace detail_paths;
    require_connect_inputs(A, B);
    const std::size_t n = A.order();

    if (commutes(A, B)) return finish_certificate<Rational>({A, B}, "adjacent");

    const bool a_has_eig = !rational_eigenvalues(A).empty();
    const bool b_has_eig = !rational_eigenvalues(B).empty();

    if (a_has_eig && b_has_eig) return connect_via_rank_one(A, B, "rank1-rank1");

    auto require_nonreal_certified = [](const Matrix<Rational>& M) {
        SpectrumResult sr = gaussian_spectrum(M);
        if (!sr.supported) throw unsupported_spectrum_error(sr.residual_factor);
    };

    if (!a_has_eig && !b_has_eig) {
        require_nonreal_certified(A);
        require_nonreal_certified(B);
        if (n == 4) return connect_4x4_complex(A, B);
        Matrix<Rational> X = rank_two_neighbor(A);
        Matrix<Rational> Y = rank_two_neighbor(B);
        Matrix<Rational> Z = annihilator_witness(X, Y);
        return finish_certificate<Rational>({A, X, Z, Y, B}, "rank2-rank2");
    }

    // mixed: rank-one on the eigenvalue side, rank-two on the other
    const Matrix<Rational>& withEig = a_has_eig ? A : B;
    const Matrix<Rational>& without = a_has_eig ? B : A;
    require_nonreal_certified(without);
    if (n < 4) throw internal_error("connect: eigenvalue-free side at odd order");
    Matrix<Rational> X = rank_one_neighbor(withEig);
    Matrix<Rational> Y = rank_two_neighbor(without);
    Matrix<Rational> Z = annihilator_witness(X, Y);
    std::vector<Matrix<Rational>> vs = a_has_eig
        ? std::vector<Matrix<Rational>>{A, X, Z, Y, B}
        : std::vector<Matrix<Rational>>{A, Y, Z, X, B};
    return finish_certificate<Rational>(std::move(vs), "mixed");
}

// Field-generic rank-one route over F_p; both inputs must have an eigenvalue
// in the field (the finite-field lab skips and counts the others).
inline PathCertificate<Fp> connect(const Matrix<Fp>& A, const Matrix<Fp>& B) {
    using namespace detail_paths;
    require_connect_inputs(A, B);
    if (commutes(A, B)) return finish_certificate<Fp>({A, B}, "adjacent");
    return connect_via_rank_one(A, B, "rank1-rank1");
}

// Proven lower bound: 1 if adjacent, 2 if non-commuting, 3 if additionally no
// common non-scalar neighbor exists.
template <ExactScalar K>
DistanceBound certify_lower_bound(const Matrix<K>& A, const Matrix<K>& B) {
    detail::require_compatible_pair(A, B);
    if (is_central(A) || is_central(B)) throw input_error("certify_lower_bound: scalar input");
    if (A == B) throw input_error("certify_lower_bound: endpoints must be distinct");
    if (commutes(A, B)) return {1, "commuting"};
    if (joint_centralizer_noncentral(A, B).has_value()) return {2, "non-commuting"};
    return {3, "joint-centralizer-scalar-only"};
}

} // namespace commgraph
