#pragma once

// Float-mode path construction for matrices outside the exact class. The
// eigensolver is Eigen's dense real solver; every certificate is re-checked
// against the tolerance policy afterwards, and exact mode remains the source
// of truth. Rank decisions are never taken in float arithmetic: all witnesses
// have closed-form kernels (outer products, spectral projectors).

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "commgraph/approx.hpp"
#include "commgraph/certificate.hpp"
#include "commgraph/matrix.hpp"

namespace commgraph {

struct FloatVerifyReport {
    bool ok = false;
    std::string diagnostic;
    std::vector<double> edge_residuals;  // relative Frobenius per edge

    explicit operator bool() const { return ok; }
};

inline bool matrices_approx_equal(const Matrix<double>& a, const Matrix<double>& b, const Tolerance& tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return frobenius_norm(a - b) <= tol.abs_eps + tol.rel_eps * std::max(frobenius_norm(a), frobenius_norm(b));
}

namespace detail_float {

inline Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    return e;
}

inline Matrix<double> from_eigen(const Eigen::MatrixXd& e) {
    Matrix<double> m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()), 0.0);
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
    return m;
}

struct EigenPairs {
    Eigen::VectorXcd values;
    Eigen::MatrixXcd vectors;
};

inline EigenPairs decompose(const Eigen::MatrixXd& A) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success) throw input_error("float eigensolver failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

inline double spectrum_scale(const EigenPairs& e) {
    double s = 1.0;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) s = std::max(s, std::abs(e.values(i)));
    return s;
}

// A witness plus the closed-form descriptions of its kernels: the right
// kernel is the orthogonal complement of `right_span`, likewise on the left.
struct Witness {
    Matrix<double> X;
    std::vector<Eigen::VectorXd> right_span;
    std::vector<Eigen::VectorXd> left_span;
};

constexpr double kRealEigTol = 1e-8;

inline bool has_real_eigenvalue(const EigenPairs& e) {
    const double tol = kRealEigTol * spectrum_scale(e);
    for (Eigen::Index i = 0; i < e.values.size(); ++i)
        if (std::abs(e.values(i).imag()) <= tol) return true;
    return false;
}

inline Eigen::Index closest_eigen_index(const EigenPairs& e, std::complex<double> target) {
    Eigen::Index best = 0;
    double best_d = std::abs(e.values(0) - target);
    for (Eigen::Index i = 1; i < e.values.size(); ++i) {
        const double d = std::abs(e.values(i) - target);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

// x y^T from matching real eigenvalues of A and A^T.
inline Witness rank_one_witness(const Eigen::MatrixXd& A) {
    EigenPairs right = decompose(A);
    EigenPairs left = decompose(A.transpose());
    const double tol = kRealEigTol * spectrum_scale(right);
    Eigen::Index pick = -1;
    for (Eigen::Index i = 0; i < right.values.size(); ++i) {
        if (std::abs(right.values(i).imag()) > tol) continue;
        if (pick < 0 || right.values(i).real() < right.values(pick).real()) pick = i;
    }
    if (pick < 0) throw input_error("float rank-one witness: no real eigenvalue");
    Eigen::VectorXd x = right.vectors.col(pick).real();
    x.normalize();
    const Eigen::Index lpick = closest_eigen_index(left, right.values(pick));
    Eigen::VectorXd y = left.vectors.col(lpick).real();
    y.normalize();
    Witness w;
    w.X = from_eigen(x * y.transpose());
    w.right_span = {y};
    w.left_span = {x};
    return w;
}

// 2 Re(u w^T) from a conjugate eigenvalue pair of A and A^T.
inline Witness rank_two_witness(const Eigen::MatrixXd& A) {
    EigenPairs right = decompose(A);
    EigenPairs left = decompose(A.transpose());
    const double tol = kRealEigTol * spectrum_scale(right);
    Eigen::Index pick = -1;
    for (Eigen::Index i = 0; i < right.values.size(); ++i) {
        if (right.values(i).imag() <= tol) continue;
        if (pick < 0 || right.values(i).real() < right.values(pick).real() ||
            (right.values(i).real() == right.values(pick).real() &&
             right.values(i).imag() < right.values(pick).imag()))
            pick = i;
    }
    if (pick < 0) throw input_error("float rank-two witness: no conjugate eigenvalue pair");
    Eigen::VectorXcd u = right.vectors.col(pick);
    const Eigen::Index lpick = closest_eigen_index(left, right.values(pick));
    Eigen::VectorXcd w = left.vectors.col(lpick);
    Eigen::MatrixXd X = 2.0 * (u * w.transpose()).real();
    const double nrm = X.norm();
    if (nrm < 1e-300) throw input_error("float rank-two witness degenerated");
    X /= nrm;
    Witness out;
    out.X = from_eigen(X);
    out.right_span = {w.real(), w.imag()};
    out.left_span = {u.real(), u.imag()};
    return out;
}

// Unit vector orthogonal to all the given spans (least singular direction).
inline Eigen::VectorXd orthogonal_to(const std::vector<Eigen::VectorXd>& span, Eigen::Index n) {
    Eigen::MatrixXd C(static_cast<Eigen::Index>(span.size()), n);
    for (std::size_t i = 0; i < span.size(); ++i) C.row(static_cast<Eigen::Index>(i)) = span[i].transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeFullV);
    Eigen::VectorXd v = svd.matrixV().col(n - 1);
    v.normalize();
    return v;
}

inline Matrix<double> midpoint_between(const Witness& wx, const Witness& wy, Eigen::Index n) {
    std::vector<Eigen::VectorXd> right = wx.right_span;
    right.insert(right.end(), wy.right_span.begin(), wy.right_span.end());
    std::vector<Eigen::VectorXd> left = wx.left_span;
    left.insert(left.end(), wy.left_span.begin(), wy.left_span.end());
    if (static_cast<Eigen::Index>(right.size()) >= n || static_cast<Eigen::Index>(left.size()) >= n)
        throw input_error("float midpoint: kernel constraints fill the space");
    Eigen::VectorXd v = orthogonal_to(right, n);
    Eigen::VectorXd w = orthogonal_to(left, n);
    return from_eigen(v * w.transpose());
}

// Order-4, both spectra fully complex, two well-separated pairs each:
// spectral-projector idempotents with the (P-Q)^2 midpoint.
inline std::vector<Matrix<double>> projector_route(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                                   const Tolerance& tol) {
    auto projector = [&](const Eigen::MatrixXd& M) {
        EigenPairs e = decompose(M);
        const double rtol = kRealEigTol * spectrum_scale(e);
        // pick the two positive-imag eigenvalues
        std::vector<Eigen::Index> pos;
        for (Eigen::Index i = 0; i < e.values.size(); ++i)
            if (e.values(i).imag() > rtol) pos.push_back(i);
        if (pos.size() != 2)
            throw input_error("float order-4 route: expected two conjugate pairs");
        Eigen::MatrixXd S(4, 4);
        S.col(0) = e.vectors.col(pos[0]).real();
        S.col(1) = e.vectors.col(pos[0]).imag();
        S.col(2) = e.vectors.col(pos[1]).real();
        S.col(3) = e.vectors.col(pos[1]).imag();
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(S);
        Eigen::MatrixXd E = Eigen::MatrixXd::Zero(4, 4);
        E(0, 0) = E(1, 1) = 1.0;
        return Eigen::MatrixXd(S * E * lu.inverse());
    };
    Eigen::MatrixXd I1 = projector(A);
    Eigen::MatrixXd I2 = projector(B);
    Eigen::MatrixXd X = (I1 - I2) * (I1 - I2);
    Matrix<double> Xm = from_eigen(X);
    if (is_central(Xm, tol))
        throw input_error("float order-4 route: degenerate projector midpoint; use exact mode");
    return {from_eigen(I1), Xm, from_eigen(I2)};
}

inline void collapse_duplicates_float(std::vector<Matrix<double>>& vs, const Tolerance& tol) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = vs.size(); j-- > i + 1;)
            if (matrices_approx_equal(vs[i], vs[j], tol)) {
                vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                         vs.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                break;
            }
}

} // namespace detail_float

inline FloatVerifyReport verify(const PathCertificate<double>& cert, const Tolerance& tol = {}) {
    FloatVerifyReport rep;
    const auto& vs = cert.vertices;
    if (vs.size() < 2) {
        rep.diagnostic = "certificate has fewer than two vertices";
        return rep;
    }
    const std::size_t n = vs.front().order();
    for (std::size_t k = 0; k < vs.size(); ++k)
        if (!vs[k].is_square() || vs[k].order() != n) {
            rep.diagnostic = "vertex " + std::to_string(k) + " has mismatched order";
            return rep;
        }
    if (cert.length() > 5) {
        rep.diagnostic = "path length exceeds 5";
        return rep;
    }
    for (std::size_t k = 0; k < vs.size(); ++k)
        if (is_central(vs[k], tol)) {
            rep.diagnostic = "vertex " + std::to_string(k) + " is central within tolerance";
            return rep;
        }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (matrices_approx_equal(vs[i], vs[j], tol)) {
                rep.diagnostic =
                    "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide within tolerance";
                return rep;
            }
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
        const double resid = frobenius_norm(vs[k] * vs[k + 1] - vs[k + 1] * vs[k]);
        const double denom = frobenius_norm(vs[k]) * frobenius_norm(vs[k + 1]);
        rep.edge_residuals.push_back(denom > 0 ? resid / denom : resid);
        if (resid > tol.abs_eps + tol.rel_eps * denom) {
            rep.diagnostic = "edge " + std::to_string(k) + "-" + std::to_string(k + 1) +
                             " residual exceeds tolerance";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

// Float-mode analogue of connect for well-conditioned generic inputs. The
// constructed certificate is verified under the tolerance policy before it is
// returned.
inline PathCertificate<double> connect(const Matrix<double>& A, const Matrix<double>& B,
                                       const Tolerance& tol = {}) {
    using namespace detail_float;
    detail::require_compatible_pair(A, B);
    const std::size_t n = A.order();
    if (n < 3) throw input_error("connect: order must be >= 3");
    if (is_central(A, tol) || is_central(B, tol)) throw input_error("connect: (near-)scalar input");
    if (matrices_approx_equal(A, B, tol)) throw input_error("connect: endpoints coincide");

    std::vector<Matrix<double>> vertices;
    std::string route;
    if (commutes(A, B, tol)) {
        vertices = {A, B};
        route = "adjacent";
    } else {
        const Eigen::MatrixXd Ae = to_eigen(A), Be = to_eigen(B);
        const bool a_real = has_real_eigenvalue(decompose(Ae));
        const bool b_real = has_real_eigenvalue(decompose(Be));
        if (!a_real && !b_real && n == 4) {
            auto mid = projector_route(Ae, Be, tol);
            vertices = {A, mid[0], mid[1], mid[2], B};
            route = "case4";
        } else {
            Witness wx = a_real ? rank_one_witness(Ae) : rank_two_witness(Ae);
            Witness wy = b_real ? rank_one_witness(Be) : rank_two_witness(Be);
            Matrix<double> Z = midpoint_between(wx, wy, static_cast<Eigen::Index>(n));
            vertices = {A, wx.X, Z, wy.X, B};
            if (a_real && b_real) route = "rank1-rank1";
            else if (!a_real && !b_real) route = "rank2-rank2";
            else route = "mixed";
        }
    }
    collapse_duplicates_float(vertices, tol);
    PathCertificate<double> cert{std::move(vertices), std::move(route)};
    FloatVerifyReport rep = verify(cert, tol);
    if (!rep.ok) throw input_error("float connect: certificate failed verification (" + rep.diagnostic +
                                   "); input may be ill-conditioned, use exact mode");
    return cert;
}

} // namespace commgraph
