#pragma once

// Exhaustive ground truth over M_n(F_p): the commuting graph on all
// non-scalar matrices, exact distances by breadth-first search, and
// brute-force verification of the field-generic midpoint lemmas.
//
// Matrices are encoded as base-p integers in row-major order. Adjacency is
// computed on the fly (a commutation test per probe) instead of storing the
// quadratic adjacency structure; frontier and visited sets use one bit per
// vertex. The size guard p^(n^2) <= 2^24 keeps everything in memory.

#include <array>
#include <chrono>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "commgraph/paths.hpp"
#include "commgraph/prime_field.hpp"

namespace commgraph {

struct GraphStats {
    std::uint32_t n = 0;
    std::uint32_t p = 0;
    std::uint64_t vertex_count = 0;
    std::uint32_t component_count = 0;
    std::vector<std::uint64_t> component_sizes;
    std::vector<std::uint32_t> component_diameters;
    std::map<std::uint32_t, std::uint64_t> eccentricity_histogram;
    double elapsed_seconds = 0.0;
};

struct OracleReport {
    std::string lemma;
    std::uint64_t matrices = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> violating_pairs;  // capped at 16
    double elapsed_seconds = 0.0;

    bool passed() const { return violations == 0; }
};

struct CrossCheckReport {
    std::uint64_t seed = 0;
    std::uint32_t requested = 0;
    std::uint32_t used = 0;
    std::uint32_t skipped_no_eigenvalue = 0;
    std::map<int, std::uint32_t> slack_histogram;  // certificate length - exact distance
    std::uint64_t violations = 0;                  // certificate shorter than the true distance

    bool passed() const { return violations == 0; }
};

class FiniteLab {
public:
    static constexpr std::uint64_t kSpaceBudget = 1ull << 24;

    FiniteLab(std::uint32_t n, std::uint32_t p) : n_(n), p_(p) {
        if (n < 2) throw input_error("finite lab: order must be >= 2");
        check_prime_modulus(p);
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < n * n; ++i) {
            total *= p;
            if (total > kSpaceBudget)
                throw resource_error("finite lab: p^(n^2) exceeds the 2^24 budget");
        }
        total_ = static_cast<std::uint32_t>(total);
        scalar_bit_.assign(words(), 0);
        for (std::uint32_t c = 0; c < p_; ++c) set_bit(scalar_bit_, encode_scalar(c));
        if (total_ <= (1u << 17)) {
            cells_.resize(static_cast<std::size_t>(total_) * n_ * n_);
            for (std::uint32_t idx = 0; idx < total_; ++idx) {
                std::uint32_t v = idx;
                for (std::uint32_t k = 0; k < n_ * n_; ++k) {
                    cells_[static_cast<std::size_t>(idx) * n_ * n_ + k] = static_cast<std::uint16_t>(v % p_);
                    v /= p_;
                }
            }
        }
    }

    std::uint32_t order() const { return n_; }
    std::uint32_t modulus() const { return p_; }
    std::uint32_t total() const { return total_; }
    std::uint64_t vertex_count() const { return static_cast<std::uint64_t>(total_) - p_; }

    using Cells = std::array<std::uint16_t, 16>;

    Cells decode(std::uint32_t idx) const {
        Cells c{};
        for (std::uint32_t k = 0; k < n_ * n_; ++k) {
            c[k] = static_cast<std::uint16_t>(idx % p_);
            idx /= p_;
        }
        return c;
    }

    std::uint32_t encode(const Cells& c) const {
        std::uint64_t idx = 0;
        for (std::uint32_t k = n_ * n_; k-- > 0;) idx = idx * p_ + c[k];
        return static_cast<std::uint32_t>(idx);
    }

    bool is_scalar_index(std::uint32_t idx) const { return get_bit(scalar_bit_, idx); }

    bool commute_indices(std::uint32_t a, std::uint32_t b) const {
        if (!cells_.empty()) return commute_cells(&cells_[std::size_t(a) * n_ * n_], &cells_[std::size_t(b) * n_ * n_]);
        Cells ca = decode(a), cb = decode(b);
        return commute_cells(ca.data(), cb.data());
    }

    Matrix<Fp> to_matrix(std::uint32_t idx) const {
        Cells c = decode(idx);
        Matrix<Fp> m(n_, n_, Fp(0, p_));
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j) m(i, j) = Fp(c[i * n_ + j], p_);
        return m;
    }

    std::uint32_t from_matrix(const Matrix<Fp>& m) const {
        Cells c{};
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j) c[i * n_ + j] = static_cast<std::uint16_t>(m(i, j).value());
        return encode(c);
    }

    // Exact graph distance; nullopt when the vertices lie in different
    // components. Adjacency is the commutation test, probed on the fly.
    std::optional<std::uint32_t> bfs_distance(std::uint32_t a, std::uint32_t b) const {
        if (is_scalar_index(a) || is_scalar_index(b)) throw input_error("bfs_distance: central input");
        if (a == b) return 0;
        std::vector<std::uint32_t> frontier{a}, next;
        std::vector<std::uint32_t> unvisited = nonscalars_except(a);
        std::uint32_t level = 0;
        while (!frontier.empty()) {
            ++level;
            next.clear();
            for (std::size_t i = 0; i < unvisited.size();) {
                const std::uint32_t cand = unvisited[i];
                bool adjacent = false;
                for (std::uint32_t f : frontier)
                    if (commute_indices(f, cand)) {
                        adjacent = true;
                        break;
                    }
                if (adjacent) {
                    if (cand == b) return level;
                    next.push_back(cand);
                    unvisited[i] = unvisited.back();
                    unvisited.pop_back();
                } else {
                    ++i;
                }
            }
            frontier.swap(next);
        }
        return std::nullopt;
    }

    // Eccentricity of src within its component plus the set of reached vertices.
    std::uint32_t eccentricity(std::uint32_t src, std::uint64_t* reached_out = nullptr) const {
        std::vector<std::uint32_t> frontier{src}, next;
        std::vector<std::uint32_t> unvisited = nonscalars_except(src);
        std::uint32_t level = 0;
        std::uint64_t reached = 1;
        while (!frontier.empty()) {
            next.clear();
            for (std::size_t i = 0; i < unvisited.size();) {
                const std::uint32_t cand = unvisited[i];
                bool adjacent = false;
                for (std::uint32_t f : frontier)
                    if (commute_indices(f, cand)) {
                        adjacent = true;
                        break;
                    }
                if (adjacent) {
                    next.push_back(cand);
                    unvisited[i] = unvisited.back();
                    unvisited.pop_back();
                } else {
                    ++i;
                }
            }
            if (!next.empty()) ++level;
            reached += next.size();
            frontier.swap(next);
        }
        if (reached_out) *reached_out = reached;
        return level;
    }

    std::uint64_t noncentral_count() const { return vertex_count(); }

    // Full component decomposition with exact per-component diameters and the
    // eccentricity histogram. Eccentricities run in parallel over sources.
    GraphStats graph_stats(unsigned threads = 0) const {
        const auto t0 = std::chrono::steady_clock::now();
        GraphStats stats;
        stats.n = n_;
        stats.p = p_;
        stats.vertex_count = vertex_count();

        // components by BFS sweep
        std::vector<std::uint32_t> component(total_, 0);  // 0 = unassigned / scalar
        std::uint32_t comp_id = 0;
        for (std::uint32_t v = 0; v < total_; ++v) {
            if (is_scalar_index(v) || component[v] != 0) continue;
            ++comp_id;
            component[v] = comp_id;
            std::vector<std::uint32_t> frontier{v};
            std::uint64_t size = 1;
            while (!frontier.empty()) {
                std::vector<std::uint32_t> next;
                for (std::uint32_t u = 0; u < total_; ++u) {
                    if (is_scalar_index(u) || component[u] != 0) continue;
                    for (std::uint32_t f : frontier)
                        if (commute_indices(f, u)) {
                            component[u] = comp_id;
                            next.push_back(u);
                            ++size;
                            break;
                        }
                }
                frontier.swap(next);
            }
            stats.component_sizes.push_back(size);
        }
        stats.component_count = comp_id;
        stats.component_diameters.assign(comp_id, 0);

        // eccentricities, parallel over sources
        std::vector<std::uint32_t> sources;
        sources.reserve(vertex_count());
        for (std::uint32_t v = 0; v < total_; ++v)
            if (!is_scalar_index(v)) sources.push_back(v);

        const unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
        struct Partial {
            std::vector<std::uint32_t> diameters;
            std::map<std::uint32_t, std::uint64_t> hist;
        };
        std::vector<std::future<Partial>> futs;
        const std::size_t chunk = (sources.size() + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            const std::size_t lo = t * chunk, hi = std::min(sources.size(), (t + 1) * chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, [this, &sources, &component, comp_id, lo, hi] {
                Partial part;
                part.diameters.assign(comp_id, 0);
                for (std::size_t s = lo; s < hi; ++s) {
                    const std::uint32_t ecc = eccentricity(sources[s]);
                    const std::uint32_t cid = component[sources[s]] - 1;
                    part.diameters[cid] = std::max(part.diameters[cid], ecc);
                    ++part.hist[ecc];
                }
                return part;
            }));
        }
        for (auto& f : futs) {
            Partial part = f.get();
            for (std::uint32_t c = 0; c < comp_id; ++c)
                stats.component_diameters[c] = std::max(stats.component_diameters[c], part.diameters[c]);
            for (const auto& [e, cnt] : part.hist) stats.eccentricity_histogram[e] += cnt;
        }

        stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return stats;
    }

    std::vector<std::uint32_t> square_zero_indices() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t v = 0; v < total_; ++v) {
            if (v == encode_scalar(0)) continue;
            Cells c = decode(v);
            if (square_is(c, nullptr)) out.push_back(v);
        }
        return out;
    }

    std::vector<std::uint32_t> nonscalar_idempotent_indices() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t v = 0; v < total_; ++v) {
            if (is_scalar_index(v)) continue;
            Cells c = decode(v);
            if (square_is(c, &c)) out.push_back(v);
        }
        return out;
    }

    // Lemma check, exhaustive: all ordered pairs of distinct nonzero
    // square-zero matrices are at distance <= 2.
    OracleReport oracle_square_zero(unsigned threads = 0) const {
        require_midpoint_order("oracle_square_zero");
        return pair_distance_oracle("square-zero", square_zero_indices(), threads);
    }

    // Lemma check, exhaustive: all ordered pairs of distinct non-scalar
    // idempotents are at distance <= 2.
    OracleReport oracle_idempotents(unsigned threads = 0) const {
        require_midpoint_order("oracle_idempotents");
        return pair_distance_oracle("idempotents", nonscalar_idempotent_indices(), threads);
    }

    // Sampled agreement between the rank-one construction over F_p and exact
    // BFS distances. Matrices without an eigenvalue in F_p are skipped and
    // counted (the rank-two fallback is specific to the reals).
    CrossCheckReport cross_check_constructions(std::uint32_t samples, std::uint64_t seed) const {
        require_midpoint_order("cross_check_constructions");
        CrossCheckReport rep;
        rep.seed = seed;
        rep.requested = samples;
        std::mt19937_64 rng(seed);
        auto draw_vertex = [&] {
            for (;;) {
                const std::uint32_t v = static_cast<std::uint32_t>(rng() % total_);
                if (!is_scalar_index(v)) return v;
            }
        };
        for (std::uint32_t s = 0; s < samples; ++s) {
            const std::uint32_t a = draw_vertex();
            std::uint32_t b = draw_vertex();
            while (b == a) b = draw_vertex();
            Matrix<Fp> A = to_matrix(a), B = to_matrix(b);
            if (field_eigenvalues(A).empty() || field_eigenvalues(B).empty()) {
                ++rep.skipped_no_eigenvalue;
                continue;
            }
            PathCertificate<Fp> cert = connect(A, B);
            if (!verify(cert).ok) {
                ++rep.violations;
                continue;
            }
            const auto dist = bfs_distance(a, b);
            if (!dist || *dist > cert.length()) {
                ++rep.violations;
                continue;
            }
            ++rep.used;
            ++rep.slack_histogram[static_cast<int>(cert.length()) - static_cast<int>(*dist)];
        }
        return rep;
    }

private:
    std::uint32_t n_, p_, total_ = 0;
    std::vector<std::uint64_t> scalar_bit_;
    std::vector<std::uint16_t> cells_;  // decoded cache when the space is small

    std::size_t words() const { return (total_ + 63) / 64; }
    static void set_bit(std::vector<std::uint64_t>& bits, std::uint32_t i) { bits[i >> 6] |= 1ull << (i & 63); }
    static bool get_bit(const std::vector<std::uint64_t>& bits, std::uint32_t i) {
        return (bits[i >> 6] >> (i & 63)) & 1;
    }

    std::uint32_t encode_scalar(std::uint32_t c) const {
        Cells cells{};
        for (std::uint32_t i = 0; i < n_; ++i) cells[i * n_ + i] = static_cast<std::uint16_t>(c);
        return encode(cells);
    }

    std::vector<std::uint32_t> nonscalars_except(std::uint32_t skip) const {
        std::vector<std::uint32_t> out;
        out.reserve(vertex_count());
        for (std::uint32_t v = 0; v < total_; ++v)
            if (v != skip && !is_scalar_index(v)) out.push_back(v);
        return out;
    }

    // AB == BA with one reduction per dot product and early exit per entry.
    bool commute_cells(const std::uint16_t* A, const std::uint16_t* B) const {
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j) {
                std::uint64_t ab = 0, ba = 0;
                for (std::uint32_t k = 0; k < n_; ++k) {
                    ab += static_cast<std::uint64_t>(A[i * n_ + k]) * B[k * n_ + j];
                    ba += static_cast<std::uint64_t>(B[i * n_ + k]) * A[k * n_ + j];
                }
                if (ab % p_ != ba % p_) return false;
            }
        return true;
    }

    // M^2 == target (target = nullptr means zero).
    bool square_is(const Cells& m, const Cells* target) const {
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j) {
                std::uint64_t acc = 0;
                for (std::uint32_t k = 0; k < n_; ++k)
                    acc += static_cast<std::uint64_t>(m[i * n_ + k]) * m[k * n_ + j];
                const std::uint32_t want = target ? (*target)[i * n_ + j] : 0;
                if (acc % p_ != want) return false;
            }
        return true;
    }

    void require_midpoint_order(const char* who) const {
        if (n_ < 3) throw input_error(std::string(who) + ": lemma hypothesis requires order >= 3");
    }

    OracleReport pair_distance_oracle(const char* lemma, const std::vector<std::uint32_t>& list,
                                      unsigned threads) const {
        const auto t0 = std::chrono::steady_clock::now();
        OracleReport rep;
        rep.lemma = lemma;
        rep.matrices = list.size();

        const unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
        struct Partial {
            std::uint64_t pairs = 0, violations = 0;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> bad;
        };
        std::vector<std::future<Partial>> futs;
        const std::size_t chunk = (list.size() + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            const std::size_t lo = t * chunk, hi = std::min(list.size(), (t + 1) * chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, [this, &list, lo, hi] {
                Partial part;
                for (std::size_t x = lo; x < hi; ++x) {
                    for (std::size_t y = 0; y < list.size(); ++y) {
                        if (x == y) continue;
                        ++part.pairs;
                        if (distance_at_most_two(list[x], list[y])) continue;
                        ++part.violations;
                        if (part.bad.size() < 16) part.bad.push_back({list[x], list[y]});
                    }
                }
                return part;
            }));
        }
        for (auto& f : futs) {
            Partial part = f.get();
            rep.pairs_checked += part.pairs;
            rep.violations += part.violations;
            for (const auto& pr : part.bad)
                if (rep.violating_pairs.size() < 16) rep.violating_pairs.push_back(pr);
        }
        rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }

    bool distance_at_most_two(std::uint32_t a, std::uint32_t b) const {
        if (commute_indices(a, b)) return true;
        for (std::uint32_t w = 0; w < total_; ++w) {
            if (w == a || w == b || is_scalar_index(w)) continue;
            if (commute_indices(w, a) && commute_indices(w, b)) return true;
        }
        return false;
    }
};

// Vertex count of the commuting graph: all matrices minus the p scalars.
inline std::uint64_t enumerate_noncentral(std::uint32_t n, std::uint32_t p) {
    return FiniteLab(n, p).vertex_count();
}

} // namespace commgraph
