// gram.hpp
//
// The Gram function g(x) for real x >= -1, defined by theta(g(x)) = pi x,
// its exact inverse x = theta(t)/pi, derivatives through order 4, and a
// persistent cache of Gram abscissas.
//
// Root finding is Newton on theta(t) - pi x with a bisection safeguard on
// [7, t_hi]; residuals are measured in theta-space (they directly control
// the phase error the downstream cosines consume).

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "hardyz/bounded.hpp"

namespace hardyz::gram {

inline constexpr double kDefaultTol = 1e-10;

struct GramPoint {
    double x = 0;         // real index
    double t = 0;         // abscissa, theta(t) = pi x
    double residual = 0;  // |theta(t) - pi x| at the accepted iterate
};

// Newton + bisection bracket; throws std::runtime_error after 100 iterations
// (a bug, not a data condition) and std::domain_error for x < -1.
GramPoint gram_point(double x, double tol = kDefaultTol);

// Initial guess for the solver: the two-term asymptotic
//   g(x) ~ (2 pi x/log x) (1 + (1+log log x)/log x)
// sharpened by a few Newton steps on y(log y - 1) = x + 1/8 (the two-term
// value alone is 4-10% low over [10, 1e6], which is outside the documented
// few-percent envelope; the sharpened seed is well inside it).  Below x = 2
// a fixed table seeded from the first Gram points is interpolated.
double initial_guess(double x);

// exact functional inverse, x = theta(t)/pi; requires t >= 7
double gram_inverse(double t);

// derivatives of g at x, orders 1..4, via the closed forms in theta';
// orders 3-4 carry a coarse uncertainty from the theta''', theta'''' envelopes
BoundedValue derivative(double x, int order);

struct GramCache {
    double x_lo = 0.0;
    double stride = 1.0;
    std::vector<double> abscissas;
    double tolerance = kDefaultTol;  // creation metadata (not serialized)

    std::size_t size() const { return abscissas.size(); }
    double x_at(std::size_t i) const { return x_lo + stride * static_cast<double>(i); }
    double t_at(std::size_t i) const { return abscissas[i]; }
    // abscissa for index x; x must lie on the grid
    double t_for(double x) const;
    bool covers(double x) const;

    bool operator==(const GramCache& o) const {
        return x_lo == o.x_lo && stride == o.stride && abscissas == o.abscissas;
    }
};

// Batch generation over [x_lo, x_hi] inclusive.  Points are produced in fixed
// blocks of 1024: the block head starts from initial_guess, later points warm
// start from their predecessor.  Blocks are the parallel unit, so the result
// is identical for any thread count.
GramCache gram_range(double x_lo, double x_hi, double stride,
                     double tol = kDefaultTol, int threads = 1);

// Binary format: "GRAMCACHE" + version byte 0x01, then stride, x_lo as
// little-endian f64 and count as u64, then the abscissas.  Round-trips
// bit-exactly; a version mismatch on load is an error.
void cache_save(const GramCache& cache, const std::filesystem::path& path);
GramCache cache_load(const std::filesystem::path& path);

// CSV export: header "x,t,residual", 17 significant digits.
void cache_export_csv(const GramCache& cache, std::ostream& os);

}  // namespace hardyz::gram
