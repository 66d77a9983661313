// zfun.cpp

#include "hardyz/zfun.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hardyz/calibration.hpp"
#include "hardyz/special.hpp"
#include "hardyz/summation.hpp"
#include "hardyz/theta.hpp"
#include "hardyz/weight.hpp"

namespace hardyz::zfun {

namespace {

using cld = std::complex<long double>;

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

long double sinc_ld(long double x) {
    return (std::fabs(x) < 1e-8L) ? 1.0L - x * x / 6.0L : std::sin(x) / x;
}

// sin(a)/sin(b) written through sinc so both near-zero factors cancel cleanly
long double sin_ratio(long double a, long double b) {
    return (a * sinc_ld(a)) / (b * sinc_ld(b));
}

// Psi on the real line with smooth branches across the removable points
// p in {-1/4, 1/4, 3/4, 5/4} (cos(2pi p) and the numerator vanish together).
long double rs_psi_ld(long double p) {
    struct Branch {
        long double center, slope;  // numerator = sin(pi d (slope + 2 s d)), s below
        long double sign;
    };
    // near center c: numerator = sin(pi*d*(slope + sgn*2*d)), denominator = sin(2pi d)
    // derived by expanding 2pi(p^2-p-1/16) and 2pi p at p = c + d
    const long double d25 = p - 0.25L, d75 = p - 0.75L;
    const long double dm25 = p + 0.25L, d125 = p - 1.25L;
    constexpr long double w = 0.02L;
    if (std::fabs(d25) < w) return sin_ratio(kPiL * d25 * (1.0L - 2.0L * d25), kTwoPiL * d25);
    if (std::fabs(d75) < w) return sin_ratio(kPiL * d75 * (1.0L + 2.0L * d75), kTwoPiL * d75);
    if (std::fabs(dm25) < w) return sin_ratio(kPiL * dm25 * (3.0L - 2.0L * dm25), kTwoPiL * dm25);
    if (std::fabs(d125) < w) return sin_ratio(kPiL * d125 * (3.0L + 2.0L * d125), kTwoPiL * d125);
    return std::cos(kTwoPiL * (p * p - p - 0.0625L)) / std::cos(kTwoPiL * p);
}

cld rs_psi_cld(cld z) {
    if (std::fabs(z.imag()) < 1e-9L) return rs_psi_ld(z.real());
    return std::cos(kTwoPiL * (z * z - z - 0.0625L)) / std::cos(kTwoPiL * z);
}

// Derivatives Psi^(m) by a Cauchy contour integral (Psi is entire); radius
// chosen so the two real contour points stay clear of the removable points.
struct PsiDerivs {
    double d2, d3, d6;
};

PsiDerivs psi_derivs_contour(double p) {
    constexpr int N = 64;
    long double r = 0.31L;
    for (long double cand : {0.31L, 0.29L, 0.33L, 0.277L}) {
        const long double lo = p - cand, hi = p + cand;
        bool ok = true;
        for (long double bad : {-0.25L, 0.25L, 0.75L, 1.25L})
            if (std::fabs(lo - bad) < 5e-3L || std::fabs(hi - bad) < 5e-3L) ok = false;
        if (ok) { r = cand; break; }
    }
    std::array<cld, N> vals;
    for (int j = 0; j < N; ++j) {
        const long double ang = kTwoPiL * j / N;
        vals[j] = rs_psi_cld(cld(p + r * std::cos(ang), r * std::sin(ang)));
    }
    auto deriv = [&](int m) {
        cld acc = 0.0L;
        for (int j = 0; j < N; ++j) {
            const long double ang = -kTwoPiL * j * m / N;
            acc += vals[j] * cld(std::cos(ang), std::sin(ang));
        }
        long double fact = 1.0L;
        for (int k = 2; k <= m; ++k) fact *= k;
        acc *= fact / (static_cast<long double>(N) * std::pow(r, static_cast<long double>(m)));
        return static_cast<double>(acc.real());
    };
    return {deriv(2), deriv(3), deriv(6)};
}

// C_1, C_2 on a lookup grid over p in [0,1] (4-point Lagrange interpolation;
// validated against the direct contour values in the tests).
constexpr int kCGrid = 2048;

struct CTable {
    std::array<double, kCGrid + 1> c1, c2;
};

const CTable& c_table() {
    static const CTable table = [] {
        CTable t;
        constexpr double pi2 = 9.86960440108935861883449099987615114;
        for (int i = 0; i <= kCGrid; ++i) {
            const double p = static_cast<double>(i) / kCGrid;
            PsiDerivs d = psi_derivs_contour(p);
            t.c1[i] = -d.d3 / (96.0 * pi2);
            t.c2[i] = d.d2 / (64.0 * pi2) + d.d6 / (18432.0 * pi2 * pi2);
        }
        return t;
    }();
    return table;
}

double interp_c(const std::array<double, kCGrid + 1>& tab, double p) {
    double pos = p * kCGrid;
    int i = static_cast<int>(pos);
    i = std::min(std::max(i - 1, 0), kCGrid - 3);
    const double u = pos - i;
    const double c0 = -(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0;
    const double c1 = u * (u - 2.0) * (u - 3.0) / 2.0;
    const double c2 = -u * (u - 1.0) * (u - 3.0) / 2.0;
    const double c3 = u * (u - 1.0) * (u - 2.0) / 6.0;
    return c0 * tab[i] + c1 * tab[i + 1] + c2 * tab[i + 2] + c3 * tab[i + 3];
}

// main sum 2 sum_{m<=K} m^{-1/2} cos(theta - t log m); K = floor(sqrt(t/2pi))
double rs_main_sum(long double t, long double theta_t, long& K_out) {
    const long double a = std::sqrt(t / kTwoPiL);
    const long K = static_cast<long>(a);
    K_out = K;
    NeumaierSum acc;
    for (long m = 1; m <= K; ++m) {
        const double c = phase::cos_theta_minus_tlog(theta_t, t, std::log(static_cast<long double>(m)));
        acc.add(c / std::sqrt(static_cast<double>(m)));
    }
    return 2.0 * acc.value();
}

std::shared_ptr<const gram::GramCache> g_cache;
std::mutex g_cache_mutex;

double gram_abscissa(long n) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        if (g_cache && g_cache->covers(static_cast<double>(n)))
            return g_cache->t_for(static_cast<double>(n));
    }
    return gram::gram_point(static_cast<double>(n)).t;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::reference: return "reference";
        case Method::rs_main: return "rs_main";
        case Method::rs_corrected: return "rs_corrected";
        case Method::afe_smooth: return "afe_smooth";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "reference") return Method::reference;
    if (name == "rs_main") return Method::rs_main;
    if (name == "rs_corrected") return Method::rs_corrected;
    if (name == "afe_smooth") return Method::afe_smooth;
    throw std::invalid_argument("unknown method: " + name);
}

double rs_psi(double p) { return static_cast<double>(rs_psi_ld(p)); }

double rs_correction(double p, int k) {
    if (k == 0) return rs_psi(p);
    if (k == 1) return interp_c(c_table().c1, p);
    if (k == 2) return interp_c(c_table().c2, p);
    throw std::invalid_argument("rs_correction: k in 0..2");
}

ZSample z_reference(double t) {
    if (!(t >= 0.0 && t <= kReferenceCeiling))
        throw std::range_error("z_reference: t outside [0, 2e4]");
    const std::complex<double> zeta = special::zeta_half(t);
    const long double th = phase::theta_ld(t);
    const double c = phase::cos_reduced(th), s = phase::sin_reduced(th);
    const double re = c * zeta.real() - s * zeta.imag();
    const double im = s * zeta.real() + c * zeta.imag();
    if (std::fabs(im) > 1e-8)
        throw std::logic_error("z_reference: imaginary residue above 1e-8");
    return {t, re, Method::reference, 1e-9};
}

ZSample z_rs_main(double t) {
    if (!(t >= 20.0)) throw std::domain_error("z_rs_main: requires t >= 20");
    long K = 0;
    const double z = rs_main_sum(t, phase::theta_ld(t), K);
    return {t, z, Method::rs_main, calibration::current().c_rs * std::pow(t, -0.25)};
}

ZSample z_rs_corrected(double t, int order) {
    if (!(t >= 20.0)) throw std::domain_error("z_rs_corrected: requires t >= 20");
    if (order < 0 || order > 2) throw std::invalid_argument("z_rs_corrected: order in 0..2");
    const long double tl = t;
    long K = 0;
    double z = rs_main_sum(tl, phase::theta_ld(tl), K);
    const long double tau = std::sqrt(tl / kTwoPiL);
    const double p = static_cast<double>(tau - static_cast<long double>(K));
    const double sign = (K % 2 == 1) ? 1.0 : -1.0;  // (-1)^{K-1}
    const double tau_d = static_cast<double>(tau);
    double corr = rs_correction(p, 0);
    if (order >= 1) corr += rs_correction(p, 1) / tau_d;
    if (order >= 2) corr += rs_correction(p, 2) / (tau_d * tau_d);
    z += sign * corr / std::sqrt(tau_d);
    const auto& cal = calibration::current();
    const double c = (order == 0) ? cal.c_corr0 : (order == 1) ? cal.c_corr1 : cal.c_corr2;
    return {t, z, Method::rs_corrected, c * std::pow(t, -(2.0 * order + 3.0) / 4.0)};
}

ZSample z_afe_smooth(double t) {
    if (!(t >= 20.0)) throw std::domain_error("z_afe_smooth: requires t >= 20");
    const long double tl = t;
    const long double theta_t = phase::theta_ld(tl);
    const long double a = std::sqrt(tl / kTwoPiL);
    const long m_max = static_cast<long>(2.0L * a) + 1;
    const auto& w = weight::shared();
    NeumaierSum acc;
    for (long m = 1; m <= m_max; ++m) {
        const double arg = static_cast<double>(static_cast<long double>(m) / a);
        if (arg >= 2.0) break;  // rho vanishes; the sum is finite
        const double weight_m = w.rho_fast(arg);
        if (weight_m == 0.0) continue;
        const double c = phase::cos_theta_minus_tlog(theta_t, tl, std::log(static_cast<long double>(m)));
        acc.add(weight_m * c / std::sqrt(static_cast<double>(m)));
    }
    return {t, 2.0 * acc.value(), Method::afe_smooth,
            calibration::current().c_afe * std::pow(t, -5.0 / 6.0)};
}

std::size_t afe_nonzero_terms(double t) {
    const long double a = std::sqrt(static_cast<long double>(t) / kTwoPiL);
    const auto& w = weight::shared();
    std::size_t count = 0;
    for (long m = 1; m <= static_cast<long>(2.0L * a) + 1; ++m) {
        const double arg = static_cast<double>(static_cast<long double>(m) / a);
        if (arg >= 2.0) break;
        if (w.rho_fast(arg) != 0.0) ++count;
    }
    return count;
}

ZSample z_at_gram(long n, Method method, int order) {
    if (n < -1) throw std::domain_error("z_at_gram: requires n >= -1");
    const double t = gram_abscissa(n);
    switch (method) {
        case Method::reference: return z_reference(t);
        case Method::rs_main: return z_rs_main(t);
        case Method::rs_corrected: return z_rs_corrected(t, order);
        case Method::afe_smooth: return z_afe_smooth(t);
    }
    throw std::logic_error("z_at_gram: bad method");
}

std::optional<double> imag_zeta_at_gram(long n) {
    const double t = gram_abscissa(n);
    if (t > special::kZetaCeiling) return std::nullopt;
    return special::zeta_half(t).imag();
}

void set_gram_cache(std::shared_ptr<const gram::GramCache> cache) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache = std::move(cache);
}

}  // namespace hardyz::zfun
