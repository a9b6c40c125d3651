#pragma once

// Characteristic polynomial det(xI - A) by the Samuelson-Berkowitz
// recurrence: division-free, so it is exact over every scalar domain here,
// including F_p with p <= n where a Faddeev-LeVerrier style recurrence would
// divide by multiples of the characteristic.

#include <vector>

#include "commgraph/matrix.hpp"
#include "commgraph/poly.hpp"

namespace commgraph {

// Monic, ascending coefficients: c[0] + c[1] x + ... + x^n.
template <ExactScalar K>
Poly<K> characteristic_polynomial(const Matrix<K>& A) {
    const std::size_t n = A.order();
    const K zero = A.zero_entry();
    const K one = A.one_entry();

    // V holds the coefficients in descending order, V[0] = leading 1.
    std::vector<K> V{one};
    for (std::size_t r = 1; r <= n; ++r) {
        // Principal (r-1)x(r-1) block M, bordered by row R, column C, corner d.
        std::vector<K> s(r + 1, zero);
        s[0] = one;
        s[1] = -A(r - 1, r - 1);
        if (r >= 2) {
            std::vector<K> w(r - 1, zero);
            for (std::size_t i = 0; i < r - 1; ++i) w[i] = A(i, r - 1);
            for (std::size_t k = 2; k <= r; ++k) {
                K dot = zero;
                for (std::size_t i = 0; i < r - 1; ++i) dot += A(r - 1, i) * w[i];
                s[k] = -dot;
                if (k == r) break;
                std::vector<K> next(r - 1, zero);
                for (std::size_t i = 0; i < r - 1; ++i)
                    for (std::size_t j = 0; j < r - 1; ++j) next[i] += A(i, j) * w[j];
                w = std::move(next);
            }
        }
        // V <- T V with T the (r+1) x r lower-triangular Toeplitz matrix of s.
        std::vector<K> out(r + 1, zero);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < V.size() && j <= i; ++j) out[i] += s[i - j] * V[j];
        V = std::move(out);
    }

    Poly<K> ascending(V.rbegin(), V.rend());
    return ascending;
}

} // namespace commgraph
