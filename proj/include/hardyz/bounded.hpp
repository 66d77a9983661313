// bounded.hpp
//
// A numeric value paired with a certified absolute error radius.  Every
// asymptotic expansion in this library reports its truncation remainder
// through this type, plus a small documented allowance for double-precision
// rounding (radii are "certified modulo floating point", see README).

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace hardyz {

// Rounding allowance: `ulps` units in the last place at magnitude `scale`.
// Used when an evaluation path touches intermediates of size ~scale.
inline double fp_allowance(double scale, double ulps = 16.0) {
    return ulps * std::numeric_limits<double>::epsilon() * std::fabs(scale);
}

struct BoundedValue {
    double value = 0.0;
    double radius = 0.0;

    BoundedValue() = default;
    BoundedValue(double v, double r) : value(v), radius(r) {
        if (!(radius >= 0.0) || !std::isfinite(radius))
            throw std::invalid_argument("BoundedValue: radius must be finite and >= 0");
    }

    BoundedValue operator+(const BoundedValue& o) const {
        return {value + o.value, radius + o.radius};
    }
    BoundedValue operator-(const BoundedValue& o) const {
        return {value - o.value, radius + o.radius};
    }
    BoundedValue operator*(const BoundedValue& o) const {
        return {value * o.value,
                std::fabs(value) * o.radius + std::fabs(o.value) * radius + radius * o.radius};
    }
    BoundedValue operator-() const { return {-value, radius}; }

    // quotient enclosure; denominator must exclude zero
    BoundedValue operator/(const BoundedValue& o) const {
        const double ov = std::fabs(o.value);
        if (!(ov > o.radius))
            throw std::domain_error("BoundedValue: division by enclosure containing 0");
        const double v = value / o.value;
        const double r = (std::fabs(value) * o.radius + ov * radius + radius * o.radius) /
                         (ov * (ov - o.radius));
        return {v, r};
    }

    // true if x is inside the enclosure
    bool contains(double x) const { return std::fabs(x - value) <= radius; }
};

struct BoundedComplex {
    std::complex<double> value{0.0, 0.0};
    double radius = 0.0;

    BoundedComplex() = default;
    BoundedComplex(std::complex<double> v, double r) : value(v), radius(r) {
        if (!(radius >= 0.0) || !std::isfinite(radius))
            throw std::invalid_argument("BoundedComplex: radius must be finite and >= 0");
    }

    BoundedComplex operator+(const BoundedComplex& o) const {
        return {value + o.value, radius + o.radius};
    }
    BoundedComplex operator-(const BoundedComplex& o) const {
        return {value - o.value, radius + o.radius};
    }
    BoundedComplex operator*(const BoundedComplex& o) const {
        return {value * o.value,
                std::abs(value) * o.radius + std::abs(o.value) * radius + radius * o.radius};
    }

    BoundedValue real() const { return {value.real(), radius}; }
    BoundedValue imag() const { return {value.imag(), radius}; }
    bool contains(std::complex<double> x) const { return std::abs(x - value) <= radius; }
};

}  // namespace hardyz
