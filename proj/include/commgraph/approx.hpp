#pragma once

// Float-mode scalar support: finite doubles compared under a tolerance
// policy |x-y| <= abs_eps + rel_eps * max(|x|,|y|). Equality under this
// policy is reflexive and symmetric; transitivity is not claimed.

#include <cmath>
#include <string>

#include "commgraph/errors.hpp"

namespace commgraph {

struct Tolerance {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;

    void validate() const {
        if (!(abs_eps > 0.0) || !(rel_eps > 0.0))
            throw input_error("Tolerance: epsilons must be positive");
    }
};

inline bool approx_equal(double x, double y, const Tolerance& tol = {}) {
    return std::fabs(x - y) <= tol.abs_eps + tol.rel_eps * std::max(std::fabs(x), std::fabs(y));
}

class ApproxReal {
public:
    ApproxReal() : v_(0.0) {}
    ApproxReal(double v) : v_(v) {  // NOLINT: implicit by design
        if (!std::isfinite(v_)) throw input_error("ApproxReal: non-finite value");
    }

    double value() const { return v_; }

    bool equals(const ApproxReal& o, const Tolerance& tol = {}) const {
        return approx_equal(v_, o.v_, tol);
    }

private:
    double v_;
};

} // namespace commgraph
