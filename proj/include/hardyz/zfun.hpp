// zfun.hpp
//
// Three evaluators of Hardy's Z(t):
//
//   z_reference     Re(e^{i theta(t)} zeta(1/2+it)) against the
//                   Euler-Maclaurin zeta oracle (t <= 2e4);
//   z_rs_main       2 sum_{m <= sqrt(t/2pi)} m^{-1/2} cos(theta - t log m),
//                   envelope c_rs t^{-1/4};
//   z_rs_corrected  main sum plus the standard Riemann-Siegel correction
//                   terms C_0..C_order at the fractional phase
//                   p = sqrt(t/2pi) - floor(...), envelope c_k t^{-(2k+3)/4};
//   z_afe_smooth    the smooth-weight sum 2 sum m^{-1/2} rho(m sqrt(2pi/t))
//                   cos(theta - t log m), envelope c_afe t^{-5/6}.
//
// Phases theta(t) - t log m are carried in 80-bit long double and reduced
// mod 2pi before the cosine (good to ~1e-12 absolute for t <= 1e7).
// Envelope constants live in the calibration record.

#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>

#include "hardyz/gram.hpp"

namespace hardyz::zfun {

enum class Method { reference, rs_main, rs_corrected, afe_smooth };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct ZSample {
    double t = 0;
    double z = 0;
    Method method = Method::rs_corrected;
    double est_error = 0;
};

inline constexpr double kReferenceCeiling = 2e4;

ZSample z_reference(double t);                    // 0 <= t <= 2e4
ZSample z_rs_main(double t);                      // t >= 20
ZSample z_rs_corrected(double t, int order = 1);  // t >= 20, order in 0..2
ZSample z_afe_smooth(double t);                   // t >= 20

// Z(g(n)) by the chosen method; consults the registered Gram cache first.
ZSample z_at_gram(long n, Method method = Method::rs_corrected, int order = 1);

// Im zeta(1/2 + i g(n)) when the reference oracle is in range.
std::optional<double> imag_zeta_at_gram(long n);

// number of nonzero terms of the smooth AFE at this t
std::size_t afe_nonzero_terms(double t);

// share a Gram cache with z_at_gram (e.g. from the experiments driver)
void set_gram_cache(std::shared_ptr<const gram::GramCache> cache);

// Riemann-Siegel correction machinery, exposed for tests:
// Psi(p) = cos(2pi(p^2-p-1/16))/cos(2pi p) continued across the removable
// points, and the coefficients C_0..C_2 built from its derivatives.
double rs_psi(double p);
double rs_correction(double p, int k);

}  // namespace hardyz::zfun
