// theta.hpp
//
// The Riemann-Siegel theta function and derivatives.  Two evaluation paths:
//
//   theta_asym  4-term expansion  t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t)
//               + 7/(5760 t^3), radius c5 * t^-5 with the calibrated c5
//               below (validated with x10 margin in the test suite);
//   theta_ref   Im log Gamma(1/4 + it/2) - (t/2) log pi, radius propagated
//               from the Stirling remainder.
//
// Production code uses theta_asym for t >= 50 and theta_ref below.  The
// hardyz::phase helpers carry the same evaluations in 80-bit long double for
// the cancellation-critical phase work in gram and zfun (theta(t) - pi x and
// theta(t) - t log m at magnitudes ~1e7 need absolute accuracy ~1e-12).

#pragma once

#include "hardyz/bounded.hpp"

namespace hardyz::theta {

// remainder constant of the 4-term expansion (true coefficient of t^-5 is
// 31/967680 ~ 3.2e-5; 0.01 keeps a wide certified margin)
inline constexpr double kAsymC5 = 0.01;
// asym/ref switchover for production paths
inline constexpr double kSwitchover = 50.0;
// Lemma bounds for theta' and theta'' remainders
inline constexpr double kV1Bound = 0.07;
inline constexpr double kV2Bound = 0.46;
// envelopes c3/t^2 and c4/t^3 for theta''' and theta'''' (validated by
// finite differences; true leading sizes are 1/(2t^2) and 1/t^3)
inline constexpr double kC3Envelope = 1.0;
inline constexpr double kC4Envelope = 2.0;

BoundedValue theta_asym(double t);         // t >= 6
BoundedValue theta_ref(double t);          // t > 0 (odd extension for t < 0)
BoundedValue theta_prime(double t);        // t >= 6
BoundedValue theta_double_prime(double t); // t >= 6
double theta_higher_bound(double t, int order);  // order in {3,4}

// production value with the documented switchover
BoundedValue theta_value(double t);

struct ThetaEval {
    double t;
    BoundedValue theta, dtheta, d2theta;
};
ThetaEval eval(double t);

}  // namespace hardyz::theta

namespace hardyz::phase {

// theta(t) in long double along the production switchover.
long double theta_ld(long double t);

// theta(t) - pi*x without cancellation loss (gram residuals).
long double theta_minus_pix(long double t, long double x);

// cos/sin of a long-double phase reduced mod 2pi.
double cos_reduced(long double phi);
double sin_reduced(long double phi);

// cos(theta_t - t*log m) given a precomputed long-double theta(t).
double cos_theta_minus_tlog(long double theta_t, long double t, long double log_m);

}  // namespace hardyz::phase
