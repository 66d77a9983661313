// expsum.cpp

#include "hardyz/expsum.hpp"

#include <cmath>
#include <stdexcept>

#include "hardyz/gram.hpp"
#include "hardyz/quadrature.hpp"
#include "hardyz/summation.hpp"
#include "hardyz/theta.hpp"
#include "hardyz/weight.hpp"

namespace hardyz::expsum {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647693;

std::complex<double> unit_phase(double f) {
    // e^{2pi i f} from the fractional part; |f| is assumed accurate to ~1 ulp
    const double frac = f - std::nearbyint(f);
    return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double nearest_int_dist(double x) {
    return std::fabs(x - std::nearbyint(x));
}

double check_scales(const PhaseProblem& p, int samples) {
    require(p.b > p.a, "check_scales: empty interval");
    double worst = 0.0;
    const double slack = p.scale_slack;
    auto update = [&](double observed, double allowed) {
        if (allowed > 0.0) worst = std::max(worst, observed / (slack * allowed));
    };
    for (int i = 0; i <= samples; ++i) {
        const double x = p.a + (p.b - p.a) * i / samples;
        if (p.amplitude) update(std::fabs(p.amplitude(x)), p.H);
        if (p.amplitude_d1) update(std::fabs(p.amplitude_d1(x)), p.H / p.U);
        if (p.phase_d2) {
            const double f2 = std::fabs(p.phase_d2(x));
            update(f2, 1.0 / p.A);   // f'' << 1/A
            update(1.0 / p.A, f2);   // 1/A << f'' (two-sided condition)
        }
    }
    return worst;
}

std::complex<double> direct_sum(const PhaseProblem& p) {
    require(p.b - p.a <= 1e8, "direct_sum: range exceeds the cost guard");
    require(static_cast<bool>(p.phase), "direct_sum: phase not set");
    const long n_lo = static_cast<long>(std::floor(p.a)) + 1;
    const long n_hi = static_cast<long>(std::floor(p.b));
    NeumaierSum re, im;
    for (long n = n_lo; n <= n_hi; ++n) {
        const double x = static_cast<double>(n);
        const double amp = p.amplitude ? p.amplitude(x) : 1.0;
        if (amp == 0.0) continue;
        const std::complex<double> ph = unit_phase(p.phase(x));
        re.add(amp * ph.real());
        im.add(amp * ph.imag());
    }
    return {re.value(), im.value()};
}

FdtResult fdt_compare(const PhaseProblem& p, double delta, double quad_tol) {
    require(delta < 1.0 && delta >= 0.0, "fdt_compare: need 0 <= delta < 1");
    require(static_cast<bool>(p.phase_d1), "fdt_compare: phase_d1 not set");
    for (int i = 0; i <= 1024; ++i) {
        const double x = p.a + (p.b - p.a) * i / 1024.0;
        if (std::fabs(p.phase_d1(x)) > delta + 1e-12)
            throw std::invalid_argument("fdt_compare: sampled |f'| exceeds delta");
    }
    FdtResult out;
    out.sum = direct_sum(p);

    auto integrand = [&](double x) -> std::complex<double> {
        const double amp = p.amplitude ? p.amplitude(x) : 1.0;
        return amp * unit_phase(p.phase(x));
    };
    // initial mesh: about two panels per phase cycle plus amplitude scale
    const double len = p.b - p.a;
    std::size_t panels = static_cast<std::size_t>(
        std::min(4e6, std::ceil(2.0 * delta * len) + std::ceil(len / std::max(p.U, 1.0)))) + 1;
    std::complex<double> total{0.0, 0.0};
    double x0 = p.a;
    for (std::size_t k = 0; k < panels; ++k) {
        const double x1 = p.a + len * static_cast<double>(k + 1) / static_cast<double>(panels);
        auto r = quad::integrate_gk15(integrand, x0, x1, quad_tol / static_cast<double>(panels), 14);
        total += r.value;
        x0 = x1;
    }
    out.integral = total;
    out.diff = std::abs(out.sum - out.integral);
    out.bound = p.H / (1.0 - delta);
    return out;
}

double fdt_bound(const PhaseProblem& p, double delta1, double delta) {
    require(delta1 > 0.0 && delta1 <= delta && delta < 1.0,
            "fdt_bound: need 0 < delta1 <= delta < 1");
    require(static_cast<bool>(p.phase_d1), "fdt_bound: phase_d1 not set");
    for (int i = 0; i <= 1024; ++i) {
        const double x = p.a + (p.b - p.a) * i / 1024.0;
        const double d = p.phase_d1(x);
        if (d < delta1 - 1e-12 || d > delta + 1e-12)
            throw std::invalid_argument("fdt_bound: sampled f' leaves [delta1, delta]");
    }
    return p.H / delta1 + p.H / (1.0 - delta);
}

namespace {

// solve f'(x) = nu on [lo_x, hi_x] by safeguarded Newton; f' monotone
double solve_saddle(const PhaseProblem& p, double nu, double lo_x, double hi_x,
                    bool increasing) {
    double flo = p.phase_d1(lo_x) - nu;
    double fhi = p.phase_d1(hi_x) - nu;
    if (!increasing) { std::swap(lo_x, hi_x); std::swap(flo, fhi); }
    // now f(lo_x) <= 0 <= f(hi_x) up to ties at the endpoints
    if (flo > 0.0 && flo < 1e-9) return lo_x;
    if (fhi < 0.0 && fhi > -1e-9) return hi_x;
    double x = 0.5 * (lo_x + hi_x);
    for (int it = 0; it < 80; ++it) {
        const double r = p.phase_d1(x) - nu;
        if (std::fabs(r) <= 1e-12) return x;
        if (r > 0.0) hi_x = x; else lo_x = x;
        double x_next = x;
        if (p.phase_d2) {
            const double d2 = p.phase_d2(x);
            if (d2 != 0.0) x_next = x - r / d2;
        }
        const double lo = std::min(lo_x, hi_x), hi = std::max(lo_x, hi_x);
        if (!(x_next > lo && x_next < hi)) x_next = 0.5 * (lo_x + hi_x);
        x = x_next;
    }
    throw std::runtime_error("stationary_points: saddle solver failed to converge");
}

}  // namespace

std::vector<Saddle> stationary_points(const PhaseProblem& p) {
    require(static_cast<bool>(p.phase_d1), "stationary_points: phase_d1 not set");
    const double fa = p.phase_d1(p.a), fb = p.phase_d1(p.b);
    const bool increasing = fb >= fa;
    // monotonicity check by sampling
    double prev = fa;
    for (int i = 1; i <= 1024; ++i) {
        const double x = p.a + (p.b - p.a) * i / 1024.0;
        const double d = p.phase_d1(x);
        if (increasing ? (d < prev - 1e-9) : (d > prev + 1e-9))
            throw std::runtime_error("stationary_points: f' not monotone on [a,b]");
        prev = d;
    }
    const double lo = std::min(fa, fb), hi = std::max(fa, fb);
    std::vector<Saddle> out;
    const long nu_lo = static_cast<long>(std::ceil(lo - kEndpointTie));
    const long nu_hi = static_cast<long>(std::floor(hi + kEndpointTie));
    for (long nu = nu_lo; nu <= nu_hi; ++nu) {
        const double x = solve_saddle(p, static_cast<double>(nu), p.a, p.b, increasing);
        out.push_back({nu, x});
    }
    return out;
}

TransformOutput vdc_transform(const PhaseProblem& p) {
    require(static_cast<bool>(p.phase) && static_cast<bool>(p.phase_d1) &&
                static_cast<bool>(p.phase_d2),
            "vdc_transform: phase callables not set");
    // curvature sign must be constant
    const double mid_d2 = p.phase_d2(0.5 * (p.a + p.b));
    const double sign = (mid_d2 > 0.0) ? 1.0 : -1.0;
    for (int i = 0; i <= 256; ++i) {
        const double x = p.a + (p.b - p.a) * i / 256.0;
        if (sign * p.phase_d2(x) <= 0.0)
            throw std::runtime_error("vdc_transform: curvature sign flip detected");
    }

    TransformOutput out;
    const double fa = p.phase_d1(p.a), fb = p.phase_d1(p.b);
    const auto saddles = stationary_points(p);
    const std::complex<double> rot = (sign > 0.0)
                                         ? std::complex<double>(M_SQRT1_2, M_SQRT1_2)
                                         : std::complex<double>(M_SQRT1_2, -M_SQRT1_2);
    std::complex<double> rhs{0.0, 0.0};
    for (const auto& s : saddles) {
        SaddleTerm term;
        term.nu = s.nu;
        term.x = s.x;
        const bool at_end = std::fabs(static_cast<double>(s.nu) - fa) <= kEndpointTie ||
                            std::fabs(static_cast<double>(s.nu) - fb) <= kEndpointTie;
        term.c = at_end ? 0.5 : 1.0;
        const double amp = p.amplitude ? p.amplitude(s.x) : 1.0;
        const double curv = std::fabs(p.phase_d2(s.x));
        term.w = rot * (amp / std::sqrt(curv)) *
                 unit_phase(p.phase(s.x) - static_cast<double>(s.nu) * s.x);
        rhs += term.c * term.w;
        out.saddle_terms.push_back(term);
    }
    out.rhs_main = rhs;
    out.lhs_direct = direct_sum(p);

    auto t_mu = [&](double fmu) {
        const double dist = nearest_int_dist(fmu);
        if (dist <= kEndpointTie) return 0.0;
        return std::min(1.0 / dist, std::sqrt(p.A));
    };
    out.r_bound = p.H * (p.A / (p.b - p.a) + t_mu(fa) + t_mu(fb) +
                         std::log(std::fabs(fb - fa) + 2.0));
    return out;
}

PhaseProblem make_gram_block_problem(int m, double M) {
    require(m >= 2, "make_gram_block_problem: m >= 2");
    require(M >= 0.25 * m * m - 1e-9, "make_gram_block_problem: M below M_0 = m^2/4");
    const double log_m = std::log(static_cast<double>(m));
    auto h = [](double y) { return gram::gram_inverse(kTwoPi * y) / 2.0; };

    PhaseProblem p;
    p.a = h(M);
    p.b = h(32.0 * M);
    const auto& w = weight::shared();
    // amplitude and phase callables hit g(2x) at the same x back to back;
    // a one-entry memo halves the solver work.  A PhaseProblem instance is
    // therefore not safe for concurrent use (independent instances are).
    auto memo = std::make_shared<std::pair<double, double>>(
        std::numeric_limits<double>::quiet_NaN(), 0.0);
    auto g2x = [memo](double x) {
        if (memo->first == x) return memo->second;
        const double t = gram::gram_point(2.0 * x).t;
        *memo = {x, t};
        return t;
    };
    p.amplitude = [g2x, m, &w](double x) {
        return w.rho_fast(static_cast<double>(m) * std::sqrt(kTwoPi / g2x(x)));
    };
    p.amplitude_d1 = [p_amp = p.amplitude](double x) {
        const double h0 = 1e-4;
        return (p_amp(x + h0) - p_amp(x - h0)) / (2.0 * h0);
    };
    p.phase = [g2x, log_m](double x) { return g2x(x) * log_m / kTwoPi; };
    p.phase_d1 = [g2x, log_m](double x) {
        return log_m / hardyz::theta::theta_prime(g2x(x)).value;
    };
    p.phase_d2 = [g2x, log_m](double x) {
        const double t = g2x(x);
        const double d1 = hardyz::theta::theta_prime(t).value;
        const double d2 = hardyz::theta::theta_double_prime(t).value;
        return -kTwoPi * log_m * d2 / (d1 * d1 * d1);
    };
    p.H = 1.0;
    p.U = p.b - p.a;
    const double logM = std::log(std::max(M, M_E));
    p.A = M * logM * logM * logM / log_m;
    return p;
}

double gram_block_delta(int m, double M_j_prev) {
    return 2.0 * std::log(static_cast<double>(m)) / std::log(8.0 * M_j_prev);
}

double gram_block_delta1(int m, double M_j) {
    return 2.0 * std::log(static_cast<double>(m)) / std::log(32.0 * M_j);
}

W1Trace proof_trace_w1(int m) {
    require(m >= 3, "proof_trace_w1: m >= 3");
    const double M0 = 0.25 * m * m;
    const PhaseProblem p = make_gram_block_problem(m, M0);
    const auto transform = vdc_transform(p);

    W1Trace trace;
    trace.m = m;
    trace.saddle_count = transform.saddle_terms.size();
    bool found = false;
    for (const auto& s : transform.saddle_terms) {
        if (s.nu == 1) {
            trace.x1 = s.x;
            trace.numeric = s.w;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("proof_trace_w1: no nu=1 saddle");
    trace.fx1_minus_x1 = p.phase(trace.x1) - trace.x1;
    const double mag = M_SQRT1_2 * m * std::log(static_cast<double>(m));
    const double par = (m % 2 == 0) ? 1.0 : -1.0;
    trace.closed_form = par * mag *
                        std::complex<double>(std::cos(kPi / 8.0), -std::sin(kPi / 8.0));
    trace.rel_err = std::abs(trace.numeric - trace.closed_form) / std::abs(trace.closed_form);
    return trace;
}

AlternatingU alternating_sum_u(long L, bool odd_variant) {
    require(L >= 1, "alternating_sum_u: L >= 1");
    const long terms = odd_variant ? 2 * L + 1 : 2 * L;
    NeumaierSum acc;
    for (long m = 1; m <= terms; ++m) {
        const double v = std::sqrt(static_cast<double>(m)) * std::log(static_cast<double>(m));
        acc.add((m % 2 == 0) ? v : -v);
    }
    AlternatingU out;
    out.u = acc.value();
    const double sign = (terms % 2 == 0) ? 1.0 : -1.0;
    out.asym = sign * 0.5 * std::sqrt(static_cast<double>(terms)) *
               std::log(static_cast<double>(terms));
    out.diff = out.u - out.asym;
    return out;
}

}  // namespace hardyz::expsum
