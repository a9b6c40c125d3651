#pragma once

// Small dense polynomial helpers. Coefficients are stored ascending:
// p = c[0] + c[1] x + ... + c[deg] x^deg.

#include <vector>

#include "commgraph/matrix.hpp"

namespace commgraph {

template <class K>
using Poly = std::vector<K>;

template <class K>
void poly_trim(Poly<K>& p) {
    while (p.size() > 1 && scalar_traits<K>::is_zero(p.back())) p.pop_back();
}

template <class K>
std::size_t poly_degree(const Poly<K>& p) {
    std::size_t d = p.size();
    while (d > 1 && scalar_traits<K>::is_zero(p[d - 1])) --d;
    return d - 1;
}

template <class K>
K poly_eval(const Poly<K>& p, const K& x) {
    K acc = scalar_traits<K>::zero(x);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Substitute a square matrix for the indeterminate.
template <class K>
Matrix<K> poly_eval_matrix(const Poly<K>& p, const Matrix<K>& A) {
    const std::size_t n = A.order();
    Matrix<K> acc = Matrix<K>::zero(n, n, A.exemplar());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * A;
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += p[i];
    }
    return acc;
}

// Quotient and remainder on division by a MONIC divisor, exact in any field.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod_monic(Poly<K> num, const Poly<K>& div) {
    const std::size_t dd = poly_degree(div);
    const K zero = scalar_traits<K>::zero(div[0]);
    if (poly_degree(num) < dd) return {Poly<K>{zero}, std::move(num)};
    Poly<K> quot(poly_degree(num) - dd + 1, zero);
    for (std::size_t i = poly_degree(num) + 1; i-- > dd;) {
        K c = num[i];
        if (scalar_traits<K>::is_zero(c)) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num.resize(dd == 0 ? 1 : dd, zero);
    poly_trim(num);
    poly_trim(quot);
    return {std::move(quot), std::move(num)};
}

// Deflate by (x - r); the caller guarantees r is a root.
template <class K>
Poly<K> poly_deflate_root(const Poly<K>& p, const K& r) {
    Poly<K> div{-r, scalar_traits<K>::one(r)};
    auto [q, rem] = poly_divmod_monic(p, div);
    if (!(rem.size() == 1 && scalar_traits<K>::is_zero(rem[0])))
        throw internal_error("poly_deflate_root: not a root");
    return q;
}

template <class K>
std::string poly_to_string(const Poly<K>& p) {
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (scalar_traits<K>::is_zero(p[i]) && !(i == 0 && s.empty())) continue;
        if (!s.empty()) s += " + ";
        s += "(" + scalar_traits<K>::to_string(p[i]) + ")";
        if (i == 1) s += "*x";
        if (i > 1) s += "*x^" + std::to_string(i);
    }
    return s;
}

} // namespace commgraph
