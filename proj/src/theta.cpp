// theta.cpp

#include "hardyz/theta.hpp"

#include <cmath>
#include <stdexcept>

#include "hardyz/special.hpp"

namespace hardyz {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;
constexpr long double kLogPiL = 1.144729885849400174143427351353058712L;

long double theta_asym_ld(long double t) {
    return 0.5L * t * std::log(t / kTwoPiL) - 0.5L * t - kPiL / 8.0L +
           1.0L / (48.0L * t) + 7.0L / (5760.0L * t * t * t);
}

// Im log Gamma(1/4 + it/2) - (t/2) log pi in long double, t > 0.
// Same shifted-Stirling core as special::log_gamma, imaginary part only.
long double theta_ref_ld(long double t) {
    std::complex<long double> z(0.25L, 0.5L * t);
    long double im_shift = 0.0L;
    int shifts = 0;
    while (std::abs(z) < 9.0L && shifts < 64) {
        im_shift += std::arg(z);
        z += 1.0L;
        ++shifts;
    }
    std::complex<long double> lg =
        (z - 0.5L) * std::log(z) - z +
        0.918938533204672741780329736405617639L;  // log(2pi)/2
    std::complex<long double> zinv = 1.0L / z;
    std::complex<long double> zinv2 = zinv * zinv;
    std::complex<long double> zpow = zinv;
    for (int r = 1; r <= 12; ++r) {
        lg += static_cast<long double>(special::bernoulli_2r(r)) /
              (2.0L * r * (2.0L * r - 1.0L)) * zpow;
        zpow *= zinv2;
    }
    return lg.imag() - im_shift - 0.5L * t * kLogPiL;
}

double theta_scale(double t) {
    // magnitude of the dominant intermediates in either evaluation path
    double a = std::fabs(t);
    return a * (std::fabs(std::log(a + 1.0)) + 2.0) + 1.0;
}

}  // namespace

namespace theta {

BoundedValue theta_asym(double t) {
    if (!(t >= 6.0)) throw std::domain_error("theta_asym: requires t >= 6");
    const long double v = theta_asym_ld(t);
    double radius = kAsymC5 / std::pow(t, 5.0) + fp_allowance(theta_scale(t));
    return {static_cast<double>(v), radius};
}

BoundedValue theta_ref(double t) {
    if (t == 0.0) return {0.0, 0.0};
    const bool neg = t < 0.0;  // theta is odd
    const long double v = theta_ref_ld(neg ? -static_cast<long double>(t) : t);
    // Stirling tail at |z| >= 9 with 12 terms is ~1e-19; rounding dominates
    double radius = 1e-18 + fp_allowance(theta_scale(t));
    return {static_cast<double>(neg ? -v : v), radius};
}

BoundedValue theta_prime(double t) {
    if (!(t >= 6.0)) throw std::domain_error("theta_prime: requires t >= 6");
    const long double tl = t;
    const long double v = 0.5L * std::log(tl / kTwoPiL) - 1.0L / (48.0L * tl * tl);
    double radius = kV1Bound / (t * t * t) + fp_allowance(8.0);
    return {static_cast<double>(v), radius};
}

BoundedValue theta_double_prime(double t) {
    if (!(t >= 6.0)) throw std::domain_error("theta_double_prime: requires t >= 6");
    double radius = kV2Bound / (t * t * t) + fp_allowance(1.0);
    return {1.0 / (2.0 * t), radius};
}

double theta_higher_bound(double t, int order) {
    if (!(t >= 6.0)) throw std::domain_error("theta_higher_bound: requires t >= 6");
    if (order == 3) return kC3Envelope / (t * t);
    if (order == 4) return kC4Envelope / (t * t * t);
    throw std::invalid_argument("theta_higher_bound: order must be 3 or 4");
}

BoundedValue theta_value(double t) {
    return (t >= kSwitchover) ? theta_asym(t) : theta_ref(t);
}

ThetaEval eval(double t) {
    return {t, theta_value(t), theta_prime(t), theta_double_prime(t)};
}

}  // namespace theta

namespace phase {

long double theta_ld(long double t) {
    return (t >= theta::kSwitchover) ? theta_asym_ld(t) : theta_ref_ld(t);
}

long double theta_minus_pix(long double t, long double x) {
    return theta_ld(t) - kPiL * x;
}

double cos_reduced(long double phi) {
    long double r = phi - kTwoPiL * std::floor(phi / kTwoPiL);
    return static_cast<double>(std::cos(r));
}

double sin_reduced(long double phi) {
    long double r = phi - kTwoPiL * std::floor(phi / kTwoPiL);
    return static_cast<double>(std::sin(r));
}

double cos_theta_minus_tlog(long double theta_t, long double t, long double log_m) {
    return cos_reduced(theta_t - t * log_m);
}

}  // namespace phase

}  // namespace hardyz
