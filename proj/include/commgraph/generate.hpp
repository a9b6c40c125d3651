#pragma once

// Deterministic test-data generation: A = S J S^{-1} with J assembled from a
// block spec and S a seeded unimodular integer matrix built from elementary
// row operations with bounded multipliers. Randomness comes only from
// mt19937_64 driven through modulo reduction, so identical seeds give
// byte-identical outputs on every platform.

#include <cstdint>
#include <random>

#include "commgraph/jordan.hpp"
#include "commgraph/linalg.hpp"

namespace commgraph {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t k) { return eng_() % k; }

    long long in_range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

// Unimodular integer matrix from `ops` row additions R_i += m R_j with
// multipliers in [-3, 3] \ {0}. det = 1 throughout.
inline Matrix<Rational> random_unimodular(SeededRng& rng, std::size_t n, int ops) {
    Matrix<Rational> S = Matrix<Rational>::identity(n, Rational(0));
    for (int t = 0; t < ops; ++t) {
        std::size_t i = rng.below(n);
        std::size_t j = rng.below(n);
        if (i == j) continue;
        long long m = rng.in_range(-3, 3);
        if (m == 0) m = 1;
        for (std::size_t c = 0; c < n; ++c) S(i, c) += Rational(m) * S(j, c);
    }
    return S;
}

constexpr int kDefaultAssemblyOps = -1;  // "3n" sentinel

inline Matrix<Rational> generate_with_spectrum(const std::vector<JordanBlock>& blocks,
                                               std::uint64_t seed,
                                               int ops = kDefaultAssemblyOps) {
    validate_blocks(blocks);
    const Matrix<Rational> J = build_jordan_matrix(blocks);
    const std::size_t n = J.order();
    SeededRng rng(seed);
    const int count = ops == kDefaultAssemblyOps ? static_cast<int>(3 * n) : ops;
    if (count < 0) throw input_error("generate_with_spectrum: negative op count");
    Matrix<Rational> S = random_unimodular(rng, n, count);
    return conjugate(S, J);
}

} // namespace commgraph
