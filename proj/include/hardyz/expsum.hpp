// expsum.hpp
//
// The exponential-sum lemmas as executable objects:
//
//   * sum-vs-integral comparison and the first-derivative-test bound for
//     sum_{a<n<=b} phi(n) e^{2pi i f(n)} when |f'| <= delta < 1;
//   * the stationary-phase transform to sum_{nu} c(nu) W(nu) + R over the
//     integers nu in the range of f', with
//       W(nu) = (1+i)/sqrt2 * phi(x_nu)/sqrt(f''(x_nu)) e^{2pi i(f(x_nu)-nu x_nu)}
//     and the (1-i)/sqrt2, |f''| variant when the curvature is negative;
//   * numeric traces of the S_m(M_0) proof quantities: the saddle x_1,
//     W_m(1) against its closed form, and the alternating sum U.
//
// Scale conditions on amplitude/phase derivatives are checked by dense
// sampling (the problem holds arbitrary callables).

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hardyz::expsum {

struct PhaseProblem {
    double a = 0, b = 0;
    std::function<double(double)> amplitude;
    std::function<double(double)> amplitude_d1;  // optional, for scale checks
    std::function<double(double)> phase;
    std::function<double(double)> phase_d1;
    std::function<double(double)> phase_d2;
    double H = 1, U = 1, A = 1;
    double scale_slack = 16.0;  // the "c" in the sampled <<-checks
};

// sampled verification of the lemma scale conditions; returns the worst
// violation factor (<= 1 means all conditions hold within scale_slack)
double check_scales(const PhaseProblem& p, int samples = 1024);

// sum over integers n in (a, b]; compensated; b-a <= 1e8
std::complex<double> direct_sum(const PhaseProblem& p);

struct FdtResult {
    std::complex<double> sum, integral;
    double diff = 0;   // |sum - integral|
    double bound = 0;  // H/(1-delta)
};
// requires |f'| <= delta < 1 on [a,b] (sampled)
FdtResult fdt_compare(const PhaseProblem& p, double delta, double quad_tol = 1e-10);

// envelope H/delta1 + H/(1-delta); requires delta1 <= f' <= delta sampled
double fdt_bound(const PhaseProblem& p, double delta1, double delta);

struct Saddle {
    long nu = 0;
    double x = 0;
};
// f'(x_nu) = nu for every integer nu in the closed range of f'; f' must be
// strictly monotone (sampled); |f'(x_nu) - nu| <= 1e-12
std::vector<Saddle> stationary_points(const PhaseProblem& p);

struct SaddleTerm {
    long nu = 0;
    double x = 0;
    double c = 1;  // 1 interior, 1/2 when nu equals an endpoint derivative
    std::complex<double> w;
};

struct TransformOutput {
    std::vector<SaddleTerm> saddle_terms;
    double r_bound = 0;
    std::complex<double> lhs_direct, rhs_main;
};
TransformOutput vdc_transform(const PhaseProblem& p);

// endpoint weight tie rule: f'(mu) counts as an integer when within 1e-9
inline constexpr double kEndpointTie = 1e-9;
// distance to the nearest integer
double nearest_int_dist(double x);

// S_m(M) block sum_{M <= g(2n)/2pi < 32M} rho(m sqrt(2pi/g(2n))) e^{2pi i f_m(n)}
// with f_m(x) = g(2x) log m / 2pi, as a PhaseProblem on [h(M), h(32M)]
PhaseProblem make_gram_block_problem(int m, double M);
// the paper's parameter choices A = M log^3 M/log m, U = b-a, M_j = 32^j m^2/4
double gram_block_delta(int m, double M_j_prev);   // 2 log m / log(8 M_{j-1})
double gram_block_delta1(int m, double M_j);       // 2 log m / log(32 M_j)

struct W1Trace {
    int m = 0;
    double x1 = 0;                  // saddle with f_m'(x1) = 1
    double fx1_minus_x1 = 0;        // ~ m^2/2 + 1/16
    std::complex<double> numeric;   // W from the transform machinery
    std::complex<double> closed_form;  // (1/sqrt2) e^{-i pi/8} (-1)^m m log m
    double rel_err = 0;
    std::size_t saddle_count = 0;
};
W1Trace proof_trace_w1(int m);

struct AlternatingU {
    double u = 0;     // sum_{m<=terms} (-1)^m sqrt(m) log m
    double asym = 0;  // (+-1/2) sqrt(terms) log(terms)
    double diff = 0;
};
// terms = 2L, or 2L+1 with odd_variant
AlternatingU alternating_sum_u(long L, bool odd_variant = false);

}  // namespace hardyz::expsum
