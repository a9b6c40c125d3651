#pragma once

// The ring embedding of complex matrices into real matrices of doubled
// order: each entry a+bi becomes the 2x2 block [[a, b], [-b, a]].

#include "commgraph/gaussian.hpp"
#include "commgraph/matrix.hpp"
#include "commgraph/rational.hpp"

namespace commgraph {

template <class R = Rational>
Matrix<R> realified_cell(const Gaussian& z) {
    Matrix<R> m(2, 2, R(0));
    m(0, 0) = z.re();
    m(0, 1) = z.im();
    m(1, 0) = -z.im();
    m(1, 1) = z.re();
    return m;
}

inline Matrix<Rational> complex_embed(const Matrix<Gaussian>& E) {
    const std::size_t k = E.order();
    Matrix<Rational> out = Matrix<Rational>::zero(2 * k, 2 * k, Rational(0));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) {
            const Gaussian& z = E(r, s);
            out(2 * r, 2 * s) = z.re();
            out(2 * r, 2 * s + 1) = z.im();
            out(2 * r + 1, 2 * s) = -z.im();
            out(2 * r + 1, 2 * s + 1) = z.re();
        }
    return out;
}

// Inverse of the embedding on its image; input_error if a 2x2 cell does not
// have the [[a, b], [-b, a]] shape.
inline Matrix<Gaussian> complex_preimage(const Matrix<Rational>& M) {
    const std::size_t n = M.order();
    if (n % 2 != 0) throw input_error("complex_preimage: odd order");
    const std::size_t k = n / 2;
    Matrix<Gaussian> out = Matrix<Gaussian>::zero(k, k, Gaussian(0));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) {
            const Rational& a = M(2 * r, 2 * s);
            const Rational& b = M(2 * r, 2 * s + 1);
            if (M(2 * r + 1, 2 * s) != -b || M(2 * r + 1, 2 * s + 1) != a)
                throw input_error("complex_preimage: matrix is not in the image of the embedding");
            out(r, s) = Gaussian(a, b);
        }
    return out;
}

} // namespace commgraph
