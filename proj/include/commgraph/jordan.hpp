#pragma once

// Real Jordan canonical form with an explicit exact transform:
// A = S J S^{-1} where J is block diagonal with realified complex blocks
// C_k(a,b) (order 2k, b > 0) followed by real Jordan blocks J_m(lambda).
//
// Jordan chains are computed over Q(i) by iterated kernels of (A - lambda I)^j
// with deterministic complement selection, then conjugate-pair chains are
// realified into the C_k(a,b) structure. The construction is verified before
// returning: S invertible and A S = S J exactly.

#include <algorithm>
#include <string>
#include <vector>

#include "commgraph/embedding.hpp"
#include "commgraph/spectrum.hpp"

namespace commgraph {

struct JordanBlock {
    bool complex = false;
    Rational a;      // real part (complex) or the eigenvalue (real)
    Rational b;      // imaginary part, > 0; unused for real blocks
    unsigned size = 1;  // k for C_k(a,b) (order 2k) / m for J_m(lambda)

    std::size_t order() const { return complex ? 2 * std::size_t(size) : size; }

    static JordanBlock complex_block(Rational a, Rational b, unsigned k) {
        return JordanBlock{true, std::move(a), std::move(b), k};
    }
    static JordanBlock real_block(Rational lambda, unsigned m) {
        return JordanBlock{false, std::move(lambda), Rational(0), m};
    }

    friend bool operator==(const JordanBlock& x, const JordanBlock& y) {
        return x.complex == y.complex && x.a == y.a && x.b == y.b && x.size == y.size;
    }
};

// Canonical order: complex blocks before real blocks; within each class by
// (a, b, size) ascending. The form itself fixes no order, so one is imposed
// for reproducibility.
inline bool jordan_block_less(const JordanBlock& x, const JordanBlock& y) {
    if (x.complex != y.complex) return x.complex;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.size < y.size;
}

inline void validate_blocks(const std::vector<JordanBlock>& blocks) {
    if (blocks.empty()) throw input_error("jordan blocks: empty list");
    for (const auto& blk : blocks) {
        if (blk.size == 0) throw input_error("jordan blocks: zero size");
        if (blk.complex && blk.b.sign() <= 0)
            throw input_error("jordan blocks: complex block requires b > 0");
    }
}

inline std::size_t blocks_order(const std::vector<JordanBlock>& blocks) {
    std::size_t n = 0;
    for (const auto& blk : blocks) n += blk.order();
    return n;
}

inline Matrix<Rational> build_jordan_matrix(const std::vector<JordanBlock>& blocks) {
    validate_blocks(blocks);
    const std::size_t n = blocks_order(blocks);
    Matrix<Rational> J = Matrix<Rational>::zero(n, n, Rational(0));
    std::size_t off = 0;
    for (const auto& blk : blocks) {
        if (blk.complex) {
            for (unsigned t = 0; t < blk.size; ++t) {
                const std::size_t c = off + 2 * t;
                J(c, c) = blk.a;
                J(c, c + 1) = blk.b;
                J(c + 1, c) = -blk.b;
                J(c + 1, c + 1) = blk.a;
                if (t + 1 < blk.size) {
                    J(c, c + 2) = Rational(1);
                    J(c + 1, c + 3) = Rational(1);
                }
            }
        } else {
            for (unsigned t = 0; t < blk.size; ++t) {
                J(off + t, off + t) = blk.a;
                if (t + 1 < blk.size) J(off + t, off + t + 1) = Rational(1);
            }
        }
        off += blk.order();
    }
    return J;
}

struct RealJordanForm {
    Matrix<Rational> transform;        // invertible S with A = S J S^{-1}
    std::vector<JordanBlock> blocks;   // canonical order

    Matrix<Rational> jordan_matrix() const { return build_jordan_matrix(blocks); }
};

namespace detail_jordan {

// One Jordan chain, bottom-up: vecs[0] is the eigenvector,
// (A - lambda I) vecs[t] = vecs[t-1].
struct Chain {
    Gaussian lambda;
    std::vector<Vector<Gaussian>> vecs;
};

inline std::size_t column_rank(const std::vector<Vector<Gaussian>>& cols, std::size_t ambient) {
    if (cols.empty()) return 0;
    Matrix<Gaussian> m(ambient, cols.size(), Gaussian(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < ambient; ++i) m(i, j) = cols[j][i];
    return rank(m);
}

inline void normalize_first_nonzero(Vector<Gaussian>& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            const Gaussian inv = x.inverse();
            for (auto& y : v) y = inv * y;
            return;
        }
    }
}

// Chains for one eigenvalue of algebraic multiplicity m.
inline std::vector<Chain> jordan_chains(const Matrix<Gaussian>& A, const Gaussian& lambda, unsigned mult) {
    const std::size_t n = A.order();
    Matrix<Gaussian> M = A;
    for (std::size_t i = 0; i < n; ++i) M(i, i) -= lambda;

    // Iterated kernels K_j = ker(M^j) until the dimension reaches mult.
    std::vector<SubspaceBasis<Gaussian>> K{SubspaceBasis<Gaussian>{n, {}}};  // K[0] trivial
    Matrix<Gaussian> P = M;
    while (true) {
        SubspaceBasis<Gaussian> kj = kernel_basis(P);
        K.push_back(kj);
        if (kj.dim() >= mult) break;
        if (K.size() > n + 1) throw internal_error("jordan_chains: kernel chain failed to stabilize");
        P = P * M;
    }
    const std::size_t s = K.size() - 1;  // maximal height

    // Top-down selection: at height j keep the images of height-(j+1) picks and
    // extend to a complement of K_{j-1} inside K_j, scanning the kernel basis
    // in deterministic order.
    std::vector<std::vector<Vector<Gaussian>>> selected(s + 2);
    std::vector<Chain> chains;
    std::vector<std::pair<std::size_t, Vector<Gaussian>>> tops;
    for (std::size_t j = s; j >= 1; --j) {
        std::vector<Vector<Gaussian>> base = K[j - 1].vectors;
        for (const auto& v : selected[j + 1]) {
            Vector<Gaussian> img = M.apply(v);
            selected[j].push_back(img);
            base.push_back(std::move(img));
        }
        std::size_t base_rank = column_rank(base, n);
        const std::size_t target = K[j].dim();
        for (const auto& cand : K[j].vectors) {
            if (base_rank == target) break;
            base.push_back(cand);
            std::size_t r = column_rank(base, n);
            if (r > base_rank) {
                base_rank = r;
                Vector<Gaussian> top = cand;
                normalize_first_nonzero(top);
                selected[j].push_back(top);
                tops.push_back({j, std::move(top)});
            } else {
                base.pop_back();
            }
        }
        if (base_rank != target) throw internal_error("jordan_chains: complement selection failed");
        if (j == 1) break;
    }

    for (const auto& [height, top] : tops) {
        Chain c{lambda, {}};
        c.vecs.resize(height);
        c.vecs[height - 1] = top;
        for (std::size_t t = height - 1; t >= 1; --t) c.vecs[t - 1] = M.apply(c.vecs[t]);
        chains.push_back(std::move(c));
    }
    std::size_t total = 0;
    for (const auto& c : chains) total += c.vecs.size();
    if (total != mult) throw internal_error("jordan_chains: chain lengths do not sum to the multiplicity");
    return chains;
}

inline Rational real_part_checked(const Gaussian& z) {
    if (!z.im().is_zero()) throw internal_error("jordan: expected a real chain entry");
    return z.re();
}

} // namespace detail_jordan

// Exact real Jordan canonical form. Throws unsupported_spectrum_error when
// the spectrum does not lie in Q(i).
inline RealJordanForm real_jordan_form(const Matrix<Rational>& A) {
    using detail_jordan::Chain;
    const std::size_t n = A.order();
    SpectrumResult sr = gaussian_spectrum(A);
    if (!sr.supported) throw unsupported_spectrum_error(sr.residual_factor);

    const Matrix<Gaussian> Ag = lift_to_gaussian(A);

    struct PendingBlock {
        JordanBlock block;
        std::vector<Vector<Rational>> columns;
    };
    std::vector<PendingBlock> pending;

    for (const auto& entry : sr.spectrum.entries) {
        if (entry.value.im().sign() < 0) continue;  // conjugate handled with its b > 0 partner
        std::vector<Chain> chains = detail_jordan::jordan_chains(Ag, entry.value, entry.multiplicity);
        for (const auto& chain : chains) {
            PendingBlock pb;
            const unsigned len = static_cast<unsigned>(chain.vecs.size());
            if (entry.value.is_real()) {
                pb.block = JordanBlock::real_block(entry.value.re(), len);
                for (const auto& v : chain.vecs) {
                    Vector<Rational> col(n, Rational(0));
                    for (std::size_t i = 0; i < n; ++i) col[i] = detail_jordan::real_part_checked(v[i]);
                    pb.columns.push_back(std::move(col));
                }
            } else {
                pb.block = JordanBlock::complex_block(entry.value.re(), entry.value.im(), len);
                for (const auto& v : chain.vecs) {
                    Vector<Rational> re(n, Rational(0)), im(n, Rational(0));
                    for (std::size_t i = 0; i < n; ++i) {
                        re[i] = v[i].re();
                        im[i] = v[i].im();
                    }
                    pb.columns.push_back(std::move(re));
                    pb.columns.push_back(std::move(im));
                }
            }
            pending.push_back(std::move(pb));
        }
    }

    std::stable_sort(pending.begin(), pending.end(),
                     [](const PendingBlock& x, const PendingBlock& y) { return jordan_block_less(x.block, y.block); });

    RealJordanForm out{Matrix<Rational>::zero(n, n, Rational(0)), {}};
    std::size_t col = 0;
    for (const auto& pb : pending) {
        out.blocks.push_back(pb.block);
        for (const auto& c : pb.columns) {
            for (std::size_t i = 0; i < n; ++i) out.transform(i, col) = c[i];
            ++col;
        }
    }
    if (col != n) throw internal_error("real_jordan_form: transform is not square");

    const Matrix<Rational> J = build_jordan_matrix(out.blocks);
    if (!is_invertible(out.transform) || !(A * out.transform == out.transform * J))
        throw internal_error("real_jordan_form: verification A S = S J failed");
    return out;
}

enum class Shape4x4 { PairRepeated, PairDistinct, Nondiagonalizable };

inline std::string shape_name(Shape4x4 s) {
    switch (s) {
        case Shape4x4::PairRepeated: return "pair-repeated";
        case Shape4x4::PairDistinct: return "pair-distinct";
        default: return "nondiagonalizable";
    }
}

// The three possible real Jordan shapes of an order-4 matrix without real
// eigenvalues, separated by the eigenvalue pair count and by rank(A - lambda I)
// over Q(i).
inline Shape4x4 classify_shape_4x4(const Matrix<Rational>& A) {
    if (A.order() != 4) throw input_error("classify_shape_4x4: order must be 4");
    SpectrumResult sr = gaussian_spectrum(A);
    if (!sr.supported) throw unsupported_spectrum_error(sr.residual_factor);
    if (sr.spectrum.has_rational()) throw input_error("classify_shape_4x4: real eigenvalue present");
    if (sr.spectrum.entries.size() == 4) return Shape4x4::PairDistinct;
    if (sr.spectrum.entries.size() != 2) throw internal_error("classify_shape_4x4: unexpected spectrum layout");

    Matrix<Gaussian> M = lift_to_gaussian(A);
    const Gaussian& lambda = sr.spectrum.entries.front().value;
    for (std::size_t i = 0; i < 4; ++i) M(i, i) -= lambda;
    return rank(M) == 2 ? Shape4x4::PairRepeated : Shape4x4::Nondiagonalizable;
}

} // namespace commgraph
