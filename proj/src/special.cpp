// special.cpp

#include "hardyz/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "hardyz/summation.hpp"

namespace hardyz::special {

namespace {

using cld = std::complex<long double>;

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kLog2PiHalfL = 0.918938533204672741780329736405617639L;  // log(2*pi)/2

// shift until the Stirling tail bound is small and the sigma>=0 condition holds
constexpr double kShiftTarget = 9.0;
constexpr int kShiftBudget = 64;

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// (2n-2)!!/(2n-1)!! for n>=1 (empty products = 1)
double semifactorial_ratio_even_over_odd(int n) {
    double r = 1.0;
    for (int k = 1; k < n; ++k) r *= (2.0 * k) / (2.0 * k + 1.0);
    return r;
}

// (2n-1)!!/(2n)!!
double semifactorial_ratio_odd_over_even(int n) {
    double r = 1.0;
    for (int k = 1; k <= n; ++k) r *= (2.0 * k - 1.0) / (2.0 * k);
    return r;
}

double pow_int(double x, int n) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= x;
    return p;
}

}  // namespace

BernoulliTable::BernoulliTable(int pairs) {
    if (pairs < 2 || pairs > 120)
        throw std::invalid_argument("BernoulliTable: pairs out of range");
    const int n_max = 2 * pairs;
    // b_n = B_n/n!; b_n = -sum_{j<n} b_j/(n+1-j)!
    std::vector<long double> b(n_max + 1, 0.0L);
    std::vector<long double> invfact(n_max + 2, 0.0L);
    invfact[0] = 1.0L;
    for (int k = 1; k <= n_max + 1; ++k) invfact[k] = invfact[k - 1] / k;
    b[0] = 1.0L;
    b[1] = -0.5L;
    for (int n = 2; n <= n_max; ++n) {
        long double s = 0.0L;
        for (int j = 0; j < n; ++j) s += b[j] * invfact[n + 1 - j];
        b[n] = -s;
    }
    long double fact = 2.0L;
    even_.resize(pairs);
    for (int r = 1; r <= pairs; ++r) {
        even_[r - 1] = static_cast<double>(b[2 * r] * fact);
        fact *= (2.0L * r + 1.0L) * (2.0L * r + 2.0L);
    }
}

double BernoulliTable::b2r(int r) const {
    if (r < 1 || r > pairs()) throw std::out_of_range("BernoulliTable::b2r");
    return even_[r - 1];
}

const BernoulliTable& bernoulli() noexcept {
    static const BernoulliTable table(30);
    return table;
}

double bernoulli_2r(int r) { return bernoulli().b2r(r); }

namespace {

// Stirling evaluation at a point with Re z >= 0.5 and |z| >= kShiftTarget.
cld stirling_log_gamma(cld z, int n_terms) {
    cld lg = (z - 0.5L) * std::log(z) - z + kLog2PiHalfL;
    cld zinv = 1.0L / z;
    cld zinv2 = zinv * zinv;
    cld zpow = zinv;  // z^{1-2r} starting at r=1
    for (int r = 1; r <= n_terms; ++r) {
        lg += static_cast<long double>(bernoulli_2r(r)) /
              (2.0L * r * (2.0L * r - 1.0L)) * zpow;
        zpow *= zinv2;
    }
    return lg;
}

cld stirling_digamma(cld z, int n_terms) {
    cld ps = std::log(z) - 0.5L / z;
    cld zinv2 = 1.0L / (z * z);
    cld zpow = zinv2;
    for (int r = 1; r <= n_terms; ++r) {
        ps -= static_cast<long double>(bernoulli_2r(r)) / (2.0L * r) * zpow;
        zpow *= zinv2;
    }
    return ps;
}

double log_gamma_tail_radius(double zabs, int n) {
    // (2n)! * 4/(2pi)^{2n+1} * (2n-2)!!/(2n-1)!! * |z|^{-2n}
    double r = 4.0 * factorial(2 * n) * semifactorial_ratio_even_over_odd(n);
    r /= pow_int(2.0 * static_cast<double>(kPiL), 2 * n + 1);
    return r / pow_int(zabs, 2 * n);
}

double log_gamma_tail_radius_real(double z, int n) {
    // alternating-series envelope for real z > 0
    double b = std::fabs(bernoulli_2r(n + 1));
    return b / ((2.0 * n + 1.0) * (2.0 * n + 2.0) * pow_int(z, 2 * n + 1));
}

double digamma_tail_radius(double zabs, int n) {
    // (2n+1)! * 4/(2pi)^{2n+1} * (pi/2)(2n-1)!!/(2n)!! * |z|^{-2n-1}
    double r = 4.0 * factorial(2 * n + 1) * semifactorial_ratio_odd_over_even(n) *
               (static_cast<double>(kPiL) / 2.0);
    r /= pow_int(2.0 * static_cast<double>(kPiL), 2 * n + 1);
    return r / pow_int(zabs, 2 * n + 1);
}

double digamma_tail_radius_real(double z, int n) {
    double b = std::fabs(bernoulli_2r(n + 1));
    return b / ((2.0 * n + 2.0) * pow_int(z, 2 * n + 2));
}

}  // namespace

BoundedComplex log_gamma(std::complex<double> z, int n_terms) {
    if (n_terms < 1 || n_terms > bernoulli().pairs() - 1)
        throw std::invalid_argument("log_gamma: n_terms out of table range");
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw std::domain_error("log_gamma: z on the negative real axis");

    const bool conj = z.imag() < 0.0;
    cld w(z.real(), conj ? -z.imag() : z.imag());

    // log Gamma(w) = log Gamma(w+k) - sum log(w+j)
    cld shift_acc = 0.0L;
    int shifts = 0;
    while ((std::abs(w) < kShiftTarget || w.real() < 0.5L) && shifts < kShiftBudget) {
        shift_acc += std::log(w);
        w += 1.0L;
        ++shifts;
    }
    if (std::abs(w) < 1.0)
        throw std::domain_error("log_gamma: shifting budget exhausted with |z| < 1");

    cld lg = stirling_log_gamma(w, n_terms) - shift_acc;

    const double wabs = static_cast<double>(std::abs(w));
    double radius = (w.imag() == 0.0L) ? log_gamma_tail_radius_real(wabs, n_terms)
                                       : log_gamma_tail_radius(wabs, n_terms);
    // rounding allowance for the dominant intermediates
    double scale = wabs * (std::log(wabs) + 2.0) + shifts * 4.0 + 1.0;
    radius += fp_allowance(scale);

    std::complex<double> value(static_cast<double>(lg.real()),
                               static_cast<double>(conj ? -lg.imag() : lg.imag()));
    return {value, radius};
}

BoundedComplex digamma(std::complex<double> z, int n_terms) {
    if (n_terms < 1 || n_terms > bernoulli().pairs())
        throw std::invalid_argument("digamma: n_terms out of table range");
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw std::domain_error("digamma: z real and <= 0");

    const bool conj = z.imag() < 0.0;
    cld w(z.real(), conj ? -z.imag() : z.imag());

    // psi(w) = psi(w+k) - sum 1/(w+j)
    cld shift_acc = 0.0L;
    int shifts = 0;
    while ((std::abs(w) < kShiftTarget || w.real() < 0.5L) && shifts < kShiftBudget) {
        shift_acc += 1.0L / w;
        w += 1.0L;
        ++shifts;
    }

    cld ps = stirling_digamma(w, n_terms) - shift_acc;

    const double wabs = static_cast<double>(std::abs(w));
    double radius = (w.imag() == 0.0L) ? digamma_tail_radius_real(wabs, n_terms)
                                       : digamma_tail_radius(wabs, n_terms);
    radius += fp_allowance(std::log(wabs) + shifts + 2.0);

    std::complex<double> value(static_cast<double>(ps.real()),
                               static_cast<double>(conj ? -ps.imag() : ps.imag()));
    return {value, radius};
}

std::complex<double> zeta_euler_maclaurin(double t, long M, int tail_terms) {
    if (!(std::fabs(t) <= kZetaCeiling))
        throw std::range_error("zeta_euler_maclaurin: |t| beyond supported ceiling");
    const long m_floor = std::max<long>(20, 2 * static_cast<long>(std::ceil(std::fabs(t))));
    if (M < m_floor)
        throw std::invalid_argument("zeta_euler_maclaurin: M below floor for this t");
    if (tail_terms < 1 || tail_terms > bernoulli().pairs())
        throw std::invalid_argument("zeta_euler_maclaurin: tail_terms out of range");

    const long double tl = t;
    NeumaierSum re, im;
    for (long n = 1; n < M; ++n) {
        const long double ph = tl * std::log(static_cast<long double>(n));
        const long double r = std::fmod(ph, 2.0L * kPiL);
        const double a = 1.0 / std::sqrt(static_cast<double>(n));
        re.add(a * static_cast<double>(std::cos(r)));
        im.add(a * -static_cast<double>(std::sin(r)));
    }
    cld sum(re.value(), im.value());

    const cld s(0.5L, tl);
    const long double logM = std::log(static_cast<long double>(M));
    const cld M_minus_s = std::exp(-s * logM);  // M^{-s}
    // M^{1-s}/(s-1) + M^{-s}/2
    cld tail = M_minus_s * static_cast<long double>(M) / (s - 1.0L) + 0.5L * M_minus_s;

    // Bernoulli tail: sum_k B_{2k}/(2k)! * [prod_{j=0}^{2k-2}(s+j)] * M^{-s-2k+1}
    cld poch = s;
    long double mpow = 1.0L / static_cast<long double>(M);  // M^{-(2k-1)} at k=1
    long double fact = 2.0L;                                // (2k)! at k=1
    for (int k = 1; k <= tail_terms; ++k) {
        tail += static_cast<long double>(bernoulli_2r(k)) / fact * poch * M_minus_s * mpow;
        poch *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
        mpow /= static_cast<long double>(M) * static_cast<long double>(M);
        fact *= (2.0L * k + 1.0L) * (2.0L * k + 2.0L);
    }

    cld total = sum + tail;
    return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

std::complex<double> zeta_half(double t) {
    const long M = std::max<long>(20, 2 * static_cast<long>(std::ceil(std::fabs(t))));
    return zeta_euler_maclaurin(t, M);
}

}  // namespace hardyz::special
