#pragma once

// Path certificates: explicit vertex sequences in the commuting graph with
// checkable evidence. Verification re-derives everything from the vertices;
// nothing is trusted from the construction that produced them.

#include <cstddef>
#include <string>
#include <vector>

#include "commgraph/matrix.hpp"

namespace commgraph {

template <class K>
struct PathCertificate {
    std::vector<Matrix<K>> vertices;  // v0 = A, ..., vL = B
    std::string route;                // construction tag

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    std::size_t order() const { return vertices.empty() ? 0 : vertices.front().order(); }
};

struct VerifyReport {
    bool ok = false;
    std::string diagnostic;                  // names the first failing edge or vertex
    std::vector<std::string> edge_residuals; // "0" per edge in exact mode

    explicit operator bool() const { return ok; }
};

// Remove repeated vertices by splicing out the loop between two occurrences.
// Edges stay valid because the retained successor was adjacent to the same
// matrix; the sequence only ever gets shorter.
template <class K>
void collapse_duplicate_vertices(std::vector<Matrix<K>>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = vs.size(); j-- > i + 1;) {
            if (vs[i] == vs[j]) {
                vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                         vs.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                break;
            }
        }
    }
}

template <ExactScalar K>
VerifyReport verify(const PathCertificate<K>& cert) {
    VerifyReport rep;
    const auto& vs = cert.vertices;
    if (vs.size() < 2) {
        rep.diagnostic = "certificate has fewer than two vertices";
        return rep;
    }
    const std::size_t n = vs.front().order();
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (!vs[k].is_square() || vs[k].order() != n) {
            rep.diagnostic = "vertex " + std::to_string(k) + " has mismatched order";
            return rep;
        }
    }
    if (cert.length() > 5) {
        rep.diagnostic = "path length " + std::to_string(cert.length()) + " exceeds 5";
        return rep;
    }
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (is_central(vs[k])) {
            rep.diagnostic = "vertex " + std::to_string(k) + " is central";
            return rep;
        }
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) {
                rep.diagnostic = "vertices " + std::to_string(i) + " and " + std::to_string(j) + " are equal";
                return rep;
            }
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
        if (!commutes(vs[k], vs[k + 1])) {
            rep.diagnostic = "edge " + std::to_string(k) + "-" + std::to_string(k + 1) + " does not commute";
            return rep;
        }
        rep.edge_residuals.push_back("0");
    }
    rep.ok = true;
    return rep;
}

// Proven lower bound on the graph distance, with its evidence.
struct DistanceBound {
    int bound = 0;         // 1, 2 or 3
    std::string evidence;  // "commuting" | "non-commuting" | "joint-centralizer-scalar-only"
};

} // namespace commgraph
