#pragma once

// Exact spectra over Q(i). The supported class is: characteristic polynomial
// splits over Q(i). Root finding is a rational-root scan with deflation,
// quadratic residuals via a rational-square discriminant test, and a
// Gaussian-integer divisor scan for higher-degree residuals. Anything else
// yields an explicit unsupported verdict carrying the residual factor.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/charpoly.hpp"
#include "commgraph/gaussian.hpp"
#include "commgraph/linalg.hpp"
#include "commgraph/poly.hpp"

namespace commgraph {

struct SpectrumEntry {
    Gaussian value;
    unsigned multiplicity = 0;
};

inline bool gaussian_lex_less(const Gaussian& a, const Gaussian& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

struct Spectrum {
    std::vector<SpectrumEntry> entries;  // distinct eigenvalues, (re, im)-sorted

    unsigned total_multiplicity() const {
        unsigned t = 0;
        for (const auto& e : entries) t += e.multiplicity;
        return t;
    }
    bool has_rational() const {
        for (const auto& e : entries)
            if (e.value.is_real()) return true;
        return false;
    }
    bool all_nonreal() const { return !has_rational(); }
};

struct SpectrumResult {
    bool supported = false;
    Spectrum spectrum;
    std::string residual_factor;  // set when unsupported
};

namespace detail_spectrum {

inline bool perfect_square(const BigInt& v, BigInt& root) {
    if (v < 0) return false;
    root = boost::multiprecision::sqrt(v);
    return root * root == v;
}

inline bool rational_square_root(const Rational& r, Rational& root) {
    if (r.sign() < 0) return false;
    BigInt sn, sd;
    if (!perfect_square(r.num(), sn) || !perfect_square(r.den(), sd)) return false;
    root = Rational(sn, sd);
    return true;
}

inline BigInt powmod(BigInt base, BigInt exp, const BigInt& mod) {
    BigInt r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp % 2 == 1) r = (r * base) % mod;
        base = (base * base) % mod;
        exp /= 2;
    }
    return r;
}

// Deterministic Miller-Rabin for the sizes reached here.
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (BigInt c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = boost::multiprecision::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factorize_into(BigInt n, std::map<BigInt, unsigned>& out) {
    if (n <= 1) return;
    for (BigInt d = 2; d <= 1 << 16 && d * d <= n; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt f = pollard_rho(n);
    factorize_into(f, out);
    factorize_into(n / f, out);
}

inline std::vector<BigInt> positive_divisors(const BigInt& n) {
    std::map<BigInt, unsigned> f;
    factorize_into(boost::multiprecision::abs(n), f);
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : f) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

struct GInt {
    BigInt re, im;
    BigInt norm() const { return re * re + im * im; }
    GInt mul(const GInt& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
};

inline std::optional<GInt> gint_exact_div(const GInt& a, const GInt& b) {
    BigInt den = b.norm();
    BigInt nre = a.re * b.re + a.im * b.im;
    BigInt nim = a.im * b.re - a.re * b.im;
    if (nre % den != 0 || nim % den != 0) return std::nullopt;
    return GInt{nre / den, nim / den};
}

// Splitting prime p ≡ 1 (mod 4) as a^2 + b^2.
inline GInt split_prime(const BigInt& p) {
    for (BigInt a = 1; a * a * 2 <= p; ++a) {
        BigInt b2 = p - a * a, b;
        if (perfect_square(b2, b)) return GInt{a, b};
    }
    throw internal_error("split_prime: no representation found for " + p.str());
}

// All Gaussian-integer divisors of z != 0, one representative per associate
// class. Unit multiples are the caller's concern.
inline std::vector<GInt> gaussian_divisors(const GInt& z) {
    std::map<BigInt, unsigned> nf;
    factorize_into(z.norm(), nf);
    std::vector<std::pair<GInt, unsigned>> primes;
    for (const auto& [p, e] : nf) {
        if (p == 2) {
            primes.push_back({GInt{1, 1}, e});
        } else if (p % 4 == 3) {
            primes.push_back({GInt{p, 0}, e / 2});
        } else {
            GInt pi = split_prime(p);
            // exponent of pi in z by repeated exact division
            unsigned s = 0;
            GInt cur = z;
            while (s < e) {
                auto q = gint_exact_div(cur, pi);
                if (!q) break;
                cur = *q;
                ++s;
            }
            if (s > 0) primes.push_back({pi, s});
            if (e - s > 0) primes.push_back({GInt{pi.re, -pi.im}, e - s});
        }
    }
    std::vector<GInt> divs{GInt{1, 0}};
    for (const auto& [pi, e] : primes) {
        std::size_t base = divs.size();
        GInt pk{1, 0};
        for (unsigned k = 1; k <= e; ++k) {
            pk = pk.mul(pi);
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i].mul(pk));
        }
    }
    return divs;
}

// Clear denominators and content: returns a primitive integer polynomial with
// the same roots.
inline std::vector<BigInt> integerize(const Poly<Rational>& p) {
    BigInt l = 1;
    for (const auto& c : p) l = boost::multiprecision::lcm(l, c.den());
    std::vector<BigInt> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c.num() * (l / c.den()));
    BigInt g = 0;
    for (const auto& c : out) g = boost::multiprecision::gcd(g, c);
    if (g > 1)
        for (auto& c : out) c /= g;
    return out;
}

} // namespace detail_spectrum

struct RationalRootScan {
    std::vector<std::pair<Rational, unsigned>> roots;
    Poly<Rational> residual;  // monic, no rational roots (or constant 1)
};

// Complete scan: divisors of the constant term over divisors of the leading
// coefficient, multiplicities by repeated deflation.
inline RationalRootScan rational_roots(Poly<Rational> p) {
    poly_trim(p);
    RationalRootScan out;
    if (poly_degree(p) == 0) {
        out.residual = p;
        return out;
    }
    // zero roots first
    unsigned zero_mult = 0;
    while (poly_degree(p) >= 1 && p[0].is_zero()) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult) out.roots.push_back({Rational(0), zero_mult});

    if (poly_degree(p) >= 1) {
        auto ip = detail_spectrum::integerize(p);
        auto consts = detail_spectrum::positive_divisors(ip.front());
        auto leads = detail_spectrum::positive_divisors(ip.back());
        std::vector<Rational> candidates;
        for (const auto& u : consts)
            for (const auto& v : leads) {
                if (boost::multiprecision::gcd(u, v) != 1) continue;
                candidates.push_back(Rational(u, v));
                candidates.push_back(Rational(-u, v));
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            if (poly_degree(p) == 0) break;
            if (!poly_eval(p, r).is_zero()) continue;
            unsigned mult = 0;
            while (poly_eval(p, r).is_zero() && poly_degree(p) >= 1) {
                p = poly_deflate_root(p, r);
                ++mult;
            }
            out.roots.push_back({r, mult});
        }
    }
    out.residual = std::move(p);
    return out;
}

inline Matrix<Gaussian> lift_to_gaussian(const Matrix<Rational>& A) {
    Matrix<Gaussian> g(A.rows(), A.cols(), Gaussian(0));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) g(i, j) = Gaussian(A(i, j));
    return g;
}

inline Poly<Gaussian> lift_to_gaussian(const Poly<Rational>& p) {
    Poly<Gaussian> g;
    g.reserve(p.size());
    for (const auto& c : p) g.push_back(Gaussian(c));
    return g;
}

// Complete eigenvalue list when the spectrum lies in Q(i); otherwise an
// unsupported verdict naming the residual factor. Never throws for the
// unsupported case: callers fall back to float mode.
inline SpectrumResult gaussian_spectrum(const Matrix<Rational>& A) {
    using namespace detail_spectrum;
    SpectrumResult out;
    Poly<Rational> chi = characteristic_polynomial(A);
    RationalRootScan scan = rational_roots(chi);
    for (const auto& [r, m] : scan.roots) out.spectrum.entries.push_back({Gaussian(r), m});

    Poly<Rational> res = scan.residual;
    while (poly_degree(res) >= 1) {
        const std::size_t deg = poly_degree(res);
        if (deg == 1) throw internal_error("gaussian_spectrum: linear residual after root scan");
        if (deg == 2) {
            const Rational p = res[1], q = res[0];
            const Rational disc = p * p - Rational(4) * q;
            Rational s;
            if (rational_square_root(-disc, s)) {
                Gaussian lambda(-(p / Rational(2)), s / Rational(2));
                out.spectrum.entries.push_back({lambda, 1});
                out.spectrum.entries.push_back({lambda.conj(), 1});
                res = Poly<Rational>{Rational(1)};
                continue;
            }
            out.residual_factor = poly_to_string(res);
            return out;
        }
        // degree >= 3: Gaussian-integer divisor scan of the residual
        auto ip = integerize(res);
        auto consts = gaussian_divisors(GInt{ip.front(), 0});
        auto leads = gaussian_divisors(GInt{ip.back(), 0});
        const GInt units[4] = {{1, 0}, {0, 1}, {BigInt(-1), 0}, {0, BigInt(-1)}};
        const Poly<Gaussian> res_qi = lift_to_gaussian(res);
        bool found = false;
        for (const auto& u : consts) {
            for (const auto& v : leads) {
                for (const auto& unit : units) {
                    const GInt num = u.mul(unit);
                    const Gaussian gu(Rational(num.re), Rational(num.im));
                    const Gaussian gv(Rational(v.re), Rational(v.im));
                    const Gaussian lambda = gu / gv;
                    if (lambda.is_real()) continue;  // rational roots are exhausted
                    if (!poly_eval(res_qi, lambda).is_zero()) continue;
                    // quadratic factor (x - λ)(x - conj λ) over Q
                    Poly<Rational> quad{lambda.norm(), -(lambda.re() * Rational(2)), Rational(1)};
                    unsigned mult = 0;
                    for (;;) {
                        auto [quot, rem] = poly_divmod_monic(res, quad);
                        if (!(rem.size() == 1 && rem[0].is_zero())) break;
                        res = quot;
                        ++mult;
                    }
                    if (mult == 0) throw internal_error("gaussian_spectrum: root without quadratic factor");
                    Gaussian canon = lambda.im().sign() > 0 ? lambda : lambda.conj();
                    out.spectrum.entries.push_back({canon, mult});
                    out.spectrum.entries.push_back({canon.conj(), mult});
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            out.residual_factor = poly_to_string(res);
            return out;
        }
    }

    std::sort(out.spectrum.entries.begin(), out.spectrum.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return gaussian_lex_less(a.value, b.value); });
    if (out.spectrum.total_multiplicity() != A.order())
        throw internal_error("gaussian_spectrum: multiplicities do not sum to the order");
    out.supported = true;
    return out;
}

// Rational eigenvalues with multiplicities; always available, even when the
// full spectrum is not supported.
inline std::vector<std::pair<Rational, unsigned>> rational_eigenvalues(const Matrix<Rational>& A) {
    auto scan = rational_roots(characteristic_polynomial(A));
    std::sort(scan.roots.begin(), scan.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return scan.roots;
}

// Nonzero v over Q(i) with Av = λv, exactly.
inline Vector<Gaussian> eigenvector_for(const Matrix<Rational>& A, const Gaussian& lambda) {
    Matrix<Gaussian> M = lift_to_gaussian(A);
    const std::size_t n = M.order();
    for (std::size_t i = 0; i < n; ++i) M(i, i) -= lambda;
    SubspaceBasis<Gaussian> k = kernel_basis(M);
    if (k.trivial()) throw input_error("eigenvector_for: " + lambda.to_string() + " is not an eigenvalue");
    return k.vectors.front();
}

} // namespace commgraph
