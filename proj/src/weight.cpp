// weight.cpp

#include "hardyz/weight.hpp"

#include <cmath>
#include <stdexcept>

#include "hardyz/quadrature.hpp"

namespace hardyz::weight {

namespace {
constexpr int kTablePoints = 4096;
}

double SmoothWeight::raw_phi(double t) const {
    if (!(std::fabs(t) < 0.5)) return 0.0;
    return std::exp(1.0 / (t * t - 0.25));
}

SmoothWeight::SmoothWeight(double quad_tol, bool build_table) : quad_tol_(quad_tol) {
    auto raw = [this](double t) { return raw_phi(t); };
    // split at 0 so the peak sits on a panel edge
    auto left = quad::integrate_gk15(raw, -0.5, 0.0, quad_tol_ * 0.25);
    auto right = quad::integrate_gk15(raw, 0.0, 0.5, quad_tol_ * 0.25);
    norm_ = 1.0 / (left.value + right.value);

    if (build_table) {
        table_.resize(kTablePoints);
        table_h_ = (table_hi_ - table_lo_) / (kTablePoints - 1);
        for (int i = 0; i < kTablePoints; ++i)
            table_[i] = rho(table_lo_ + table_h_ * i);
    }
}

double SmoothWeight::phi(double t) const {
    if (!(std::fabs(t) < 0.5)) return 0.0;
    return norm_ * raw_phi(t);
}

double SmoothWeight::f_window(double x) const {
    const double ax = std::fabs(x);
    if (ax >= 2.0) return 0.0;
    if (ax <= 1.0) return 1.0;
    // clipped window [x-3/2, x+3/2] ∩ [-1/2, 1/2]
    const double lo = std::max(x - 1.5, -0.5);
    const double hi = std::min(x + 1.5, 0.5);
    if (lo >= hi) return 0.0;
    auto raw = [this](double t) { return raw_phi(t); };
    return norm_ * quad::integrate_gk15(raw, lo, hi, quad_tol_).value;
}

double SmoothWeight::rho(double x) const {
    if (!(x > 0.0)) throw std::domain_error("rho: requires x > 0");
    if (x >= 2.0) return 0.0;
    if (x <= 0.5) return 1.0;
    return 0.5 * (1.0 + f_window(x) - f_window(1.0 / x));
}

double SmoothWeight::rho_fast(double x) const {
    if (!(x > 0.0)) throw std::domain_error("rho_fast: requires x > 0");
    if (x >= 2.0) return 0.0;
    if (x <= 0.5) return 1.0;
    if (table_.empty()) return rho(x);
    // 4-point Lagrange on the uniform grid
    double pos = (x - table_lo_) / table_h_;
    int i = static_cast<int>(pos);
    i = std::min(std::max(i - 1, 0), kTablePoints - 4);
    const double u = pos - i;  // in [0,3] around the 4-point stencil
    const double c0 = -(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0;
    const double c1 = u * (u - 2.0) * (u - 3.0) / 2.0;
    const double c2 = -u * (u - 1.0) * (u - 3.0) / 2.0;
    const double c3 = u * (u - 1.0) * (u - 2.0) / 6.0;
    return c0 * table_[i] + c1 * table_[i + 1] + c2 * table_[i + 2] + c3 * table_[i + 3];
}

std::vector<std::pair<double, double>> SmoothWeight::flatness_profile(
    std::span<const double> eps) const {
    std::vector<std::pair<double, double>> out;
    out.reserve(eps.size());
    for (double e : eps) {
        if (!(e > -0.4 && e < 0.4) || e == 0.0)
            throw std::invalid_argument("flatness_profile: eps must be in (-0.4, 0.4) \\ {0}");
        out.emplace_back(e, std::fabs(rho(1.0 + e) - 0.5));
    }
    return out;
}

const SmoothWeight& shared() {
    static const SmoothWeight instance;
    return instance;
}

}  // namespace hardyz::weight
