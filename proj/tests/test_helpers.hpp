#pragma once

// Shared builders for the test suites.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "commgraph/gaussian.hpp"
#include "commgraph/matrix.hpp"
#include "commgraph/prime_field.hpp"
#include "commgraph/rational.hpp"

namespace cgtest {

using commgraph::Fp;
using commgraph::Gaussian;
using commgraph::Matrix;
using commgraph::Rational;

inline Matrix<Rational> qmat(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t n_rows = rows.size();
    std::size_t n_cols = rows.begin()->size();
    Matrix<Rational> m(n_rows, n_cols, Rational(0));
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

inline Matrix<Gaussian> gmat(std::initializer_list<std::initializer_list<Gaussian>> rows) {
    std::size_t n_rows = rows.size();
    std::size_t n_cols = rows.begin()->size();
    Matrix<Gaussian> m(n_rows, n_cols, Gaussian(0));
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline Matrix<Fp> fpmat(std::uint32_t p, std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t n_rows = rows.size();
    std::size_t n_cols = rows.begin()->size();
    Matrix<Fp> m(n_rows, n_cols, Fp(0, p));
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m(i, j++) = Fp(static_cast<std::uint64_t>(((v % static_cast<int>(p)) + static_cast<int>(p))), p);
        ++i;
    }
    return m;
}

// Elementary matrix E_{ij} (1-based indices to mirror the usual notation).
inline Matrix<Rational> unit_q(std::size_t n, std::size_t i, std::size_t j) {
    Matrix<Rational> m = Matrix<Rational>::zero(n, n, Rational(0));
    m(i - 1, j - 1) = Rational(1);
    return m;
}

inline Matrix<Rational> random_qmat(std::mt19937_64& rng, std::size_t n, int lo = -5, int hi = 5) {
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(lo + static_cast<long long>(rng() % static_cast<unsigned>(hi - lo + 1)));
    return m;
}

inline Matrix<Gaussian> random_gmat(std::mt19937_64& rng, std::size_t n, int lo = -4, int hi = 4) {
    Matrix<Gaussian> m(n, n, Gaussian(0));
    auto r = [&] { return Rational(lo + static_cast<long long>(rng() % static_cast<unsigned>(hi - lo + 1))); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Gaussian(r(), r());
    return m;
}

} // namespace cgtest
