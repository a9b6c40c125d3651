#pragma once

// Exact elimination over any exact scalar domain: reduced row echelon form
// with lexicographic pivot choice, kernels, inverses, subspace intersection.
// All rank decisions happen here and only in exact arithmetic; float mode is
// restricted to products, norms and tolerance checks elsewhere.

#include <cstddef>
#include <utility>
#include <vector>

#include "commgraph/matrix.hpp"

namespace commgraph {

template <class K>
struct SubspaceBasis {
    std::size_t ambient = 0;
    std::vector<Vector<K>> vectors;  // exactly linearly independent; may be empty

    std::size_t dim() const { return vectors.size(); }
    bool trivial() const { return vectors.empty(); }
};

template <class K>
struct EchelonForm {
    Matrix<K> reduced;
    std::vector<std::size_t> pivot_cols;  // ascending
    std::size_t rank = 0;
};

// Gauss-Jordan with deterministic pivoting: scan columns left to right, take
// the first row with a nonzero entry. Exact division in the scalar domain.
template <ExactScalar K>
EchelonForm<K> rref(Matrix<K> m) {
    EchelonForm<K> out{Matrix<K>::zero(1, 1, m.exemplar()), {}, 0};
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!scalar_traits<K>::is_zero(m(i, c))) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const K inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) m(r, j) = inv * m(r, j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || scalar_traits<K>::is_zero(m(i, c))) continue;
            const K f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

template <ExactScalar K>
std::size_t rank(const Matrix<K>& m) {
    return rref(m).rank;
}

// Exact basis of the right null space {v : Av = 0}. Basis vectors are ordered
// by ascending free column; each has a unit in its free coordinate.
template <ExactScalar K>
SubspaceBasis<K> kernel_basis(const Matrix<K>& A) {
    const K zero = A.zero_entry();
    const K one = A.one_entry();
    EchelonForm<K> e = rref(A);
    SubspaceBasis<K> basis{A.cols(), {}};
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector<K> v(A.cols(), zero);
        v[f] = one;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

template <ExactScalar K>
bool is_invertible(const Matrix<K>& m) {
    return m.is_square() && rank(m) == m.rows();
}

template <ExactScalar K>
Matrix<K> inverse(const Matrix<K>& A) {
    const std::size_t n = A.order();
    Matrix<K> aug = Matrix<K>::zero(n, 2 * n, A.exemplar());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = A.one_entry();
    }
    EchelonForm<K> e = rref(std::move(aug));
    // Invertible iff every one of the first n columns carries a pivot.
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1)
        throw input_error("inverse: singular matrix");
    Matrix<K> inv = Matrix<K>::zero(n, n, A.exemplar());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// S * A * S^{-1} exactly; S must be invertible.
template <ExactScalar K>
Matrix<K> conjugate(const Matrix<K>& S, const Matrix<K>& A) {
    detail::require_compatible_pair(S, A);
    return S * A * inverse(S);
}

template <class K>
Matrix<K> basis_to_columns(const SubspaceBasis<K>& b, const K& like) {
    Matrix<K> m = Matrix<K>::zero(b.ambient, b.dim(), like);
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t i = 0; i < b.ambient; ++i) m(i, j) = b.vectors[j][i];
    return m;
}

// Basis of U ∩ V. Solve [U | -V] (alpha; beta) = 0; the U*alpha images of a
// kernel basis are independent because U's columns are.
template <ExactScalar K>
SubspaceBasis<K> subspace_intersection(const SubspaceBasis<K>& U, const SubspaceBasis<K>& V) {
    if (U.ambient != V.ambient) throw input_error("subspace_intersection: ambient mismatch");
    SubspaceBasis<K> out{U.ambient, {}};
    if (U.trivial() || V.trivial()) return out;
    const K zero = scalar_traits<K>::zero(U.vectors[0][0]);
    Matrix<K> stacked(U.ambient, U.dim() + V.dim(), zero);
    for (std::size_t j = 0; j < U.dim(); ++j)
        for (std::size_t i = 0; i < U.ambient; ++i) stacked(i, j) = U.vectors[j][i];
    for (std::size_t j = 0; j < V.dim(); ++j)
        for (std::size_t i = 0; i < V.ambient; ++i) stacked(i, U.dim() + j) = -V.vectors[j][i];
    SubspaceBasis<K> ker = kernel_basis(stacked);
    for (const auto& coeffs : ker.vectors) {
        Vector<K> x(U.ambient, zero);
        for (std::size_t j = 0; j < U.dim(); ++j)
            for (std::size_t i = 0; i < U.ambient; ++i) x[i] += U.vectors[j][i] * coeffs[j];
        out.vectors.push_back(std::move(x));
    }
    return out;
}

template <class K>
bool vector_is_zero(const Vector<K>& v) {
    for (const auto& x : v)
        if (!scalar_traits<K>::is_zero(x)) return false;
    return true;
}

} // namespace commgraph
