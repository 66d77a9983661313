// weight.hpp
//
// Ivic-style smooth cutoff: the normalized bump
//   phi(t) = exp((t^2-1/4)^{-1}) / integral,   |t| < 1/2,
// its integral window f(x) = int_{x-3/2}^{x+3/2} phi, and the weight
//   rho(x) = (1 + f(x) - f(1/x)) / 2.
//
// f is exactly 0 for |x| >= 2 and exactly 1 for |x| <= 1 (piecewise
// short-circuits, no quadrature), which makes rho(x) = 0 for x >= 2 and
// rho(x) = 1 for x <= 1/2 exact, and rho(x)+rho(1/x) = 1 up to one rounding.

#pragma once

#include <span>
#include <utility>
#include <vector>

namespace hardyz::weight {

class SmoothWeight {
public:
    explicit SmoothWeight(double quad_tol = 1e-12, bool build_table = true);

    // normalized bump; 0 for |t| >= 1/2
    double phi(double t) const;
    // window integral with the exact 0/1 short-circuits
    double f_window(double x) const;
    // the weight; throws std::domain_error for x <= 0
    double rho(double x) const;
    // table-backed rho for hot paths (validated against rho to <= 1e-9);
    // falls back to the quadrature path when no table was built
    double rho_fast(double x) const;

    // deviation profile (eps, |rho(1+eps) - 1/2|)
    std::vector<std::pair<double, double>> flatness_profile(std::span<const double> eps) const;

    double normalization() const { return norm_; }
    double quad_tol() const { return quad_tol_; }
    bool has_table() const { return !table_.empty(); }

private:
    double raw_phi(double t) const;

    double quad_tol_;
    double norm_;  // reciprocal of the bump integral
    // cubic-interpolation table for rho on [0.45, 2.05]
    std::vector<double> table_;
    double table_lo_ = 0.45, table_hi_ = 2.05, table_h_ = 0.0;
};

// process-wide immutable instance for the evaluators
const SmoothWeight& shared();

}  // namespace hardyz::weight
