#pragma once

// Centralizers as kernels of the vectorized commutation operator
// W -> AW - WA. Unknowns are vectorized in row-major order (w[i*n+j] =
// W(i,j)) so that certificates are reproducible byte for byte.

#include <optional>
#include <vector>

#include "commgraph/linalg.hpp"

namespace commgraph {

namespace detail_centralizer {

// Rows of the linear system (AW - WA) = 0 appended to `rows`.
template <class K>
void append_commutation_rows(const Matrix<K>& A, std::vector<Vector<K>>& rows) {
    const std::size_t n = A.order();
    const K zero = A.zero_entry();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector<K> row(n * n, zero);
            for (std::size_t k = 0; k < n; ++k) {
                row[k * n + j] += A(i, k);   // (AW)_{ij} takes W(k, j)
                row[i * n + k] -= A(k, j);   // (WA)_{ij} takes W(i, k)
            }
            rows.push_back(std::move(row));
        }
}

template <class K>
Matrix<K> rows_to_matrix(const std::vector<Vector<K>>& rows, std::size_t width, const K& like) {
    Matrix<K> m(rows.size(), width, scalar_traits<K>::zero(like));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
    return m;
}

template <class K>
Matrix<K> unvectorize(const Vector<K>& w, std::size_t n, const K& like) {
    Matrix<K> W(n, n, scalar_traits<K>::zero(like));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) W(i, j) = w[i * n + j];
    return W;
}

} // namespace detail_centralizer

// Basis of {W : AW = WA}; always spans the identity, dimension >= n.
template <ExactScalar K>
std::vector<Matrix<K>> centralizer_basis(const Matrix<K>& A) {
    const std::size_t n = A.order();
    std::vector<Vector<K>> rows;
    detail_centralizer::append_commutation_rows(A, rows);
    auto sys = detail_centralizer::rows_to_matrix(rows, n * n, A.exemplar());
    SubspaceBasis<K> kern = kernel_basis(sys);
    std::vector<Matrix<K>> out;
    out.reserve(kern.dim());
    for (const auto& w : kern.vectors) out.push_back(detail_centralizer::unvectorize(w, n, A.exemplar()));
    return out;
}

template <ExactScalar K>
std::vector<Matrix<K>> joint_centralizer_basis(const Matrix<K>& A, const Matrix<K>& B) {
    detail::require_compatible_pair(A, B);
    const std::size_t n = A.order();
    std::vector<Vector<K>> rows;
    detail_centralizer::append_commutation_rows(A, rows);
    detail_centralizer::append_commutation_rows(B, rows);
    auto sys = detail_centralizer::rows_to_matrix(rows, n * n, A.exemplar());
    SubspaceBasis<K> kern = kernel_basis(sys);
    std::vector<Matrix<K>> out;
    out.reserve(kern.dim());
    for (const auto& w : kern.vectors) out.push_back(detail_centralizer::unvectorize(w, n, A.exemplar()));
    return out;
}

// First non-scalar element of the joint centralizer in deterministic basis
// order; scalar basis elements are retried against (element + first basis
// vector). Absent exactly when the joint centralizer is the scalar line.
template <ExactScalar K>
std::optional<Matrix<K>> joint_centralizer_noncentral(const Matrix<K>& A, const Matrix<K>& B) {
    std::vector<Matrix<K>> basis = joint_centralizer_basis(A, B);
    if (basis.size() <= 1) return std::nullopt;
    for (const auto& W : basis)
        if (!is_central(W)) return W;
    for (std::size_t i = 1; i < basis.size(); ++i) {
        Matrix<K> W = basis[i] + basis.front();
        if (!is_central(W)) return W;
    }
    throw internal_error("joint_centralizer_noncentral: basis of dimension >= 2 with scalars only");
}

} // namespace commgraph
