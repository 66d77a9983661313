// special.hpp
//
// Shared special-function primitives: Bernoulli numbers, Stirling-type
// log Gamma and digamma with explicit remainder radii, and an
// Euler-Maclaurin zeta(1/2+it) reference oracle.
//
// The remainder radii come from the Euler-Maclaurin remainder written as an
// integral against the periodized Bernoulli polynomial P_{2n+1}, using
// |P_m(x)| <= 4/(2pi)^m and, for z = sigma+it with sigma >= 0,
// |x+z|^2 >= x^2+|z|^2:
//
//   log Gamma tail:  (2n)!  * 4/(2pi)^{2n+1} * (2n-2)!!/(2n-1)!!          * |z|^{-2n}
//   digamma  tail:   (2n+1)!* 4/(2pi)^{2n+1} * (pi/2) (2n-1)!!/(2n)!!     * |z|^{-2n-1}
//
// At n=1 the digamma radius is exactly (3/(4 pi^2)) |z|^{-3}.  For real
// positive z the alternating-series envelope |B_{2n+2}|/((2n+1)(2n+2)) z^{-2n-1}
// is used instead.

#pragma once

#include <complex>
#include <vector>

#include "hardyz/bounded.hpp"

namespace hardyz::special {

// B_2, B_4, ..., B_{2*pairs}; generated once by the power-series recurrence
// on B_n/n! carried in long double, then rounded.
class BernoulliTable {
public:
    explicit BernoulliTable(int pairs = 30);
    int pairs() const { return static_cast<int>(even_.size()); }
    // B_{2r}, 1 <= r <= pairs()
    double b2r(int r) const;
    const std::vector<double>& values() const { return even_; }

private:
    std::vector<double> even_;
};

const BernoulliTable& bernoulli() noexcept;
double bernoulli_2r(int r);

// Stirling series through B_{2 n_terms}; |z| >= 1 required after the
// recurrence shifting budget (64 steps).  Throws std::domain_error on the
// negative real axis.
BoundedComplex log_gamma(std::complex<double> z, int n_terms = 12);

// psi(z) with the section-2 remainder bound; shifting via psi(z+1)=psi(z)+1/z.
BoundedComplex digamma(std::complex<double> z, int n_terms = 8);

// zeta(1/2 + it) by Euler-Maclaurin with cutoff M and the Bernoulli tail.
// Requires M >= max(20, 2*ceil(|t|)) and |t| <= 5e4.  Empirical absolute
// error <= 1e-10 in that range (see tests).
std::complex<double> zeta_euler_maclaurin(double t, long M, int tail_terms = 12);

// zeta(1/2+it) with the default cutoff choice.
std::complex<double> zeta_half(double t);

inline constexpr double kZetaCeiling = 5e4;

}  // namespace hardyz::special
