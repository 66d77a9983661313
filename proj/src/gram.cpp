// gram.cpp

#include "hardyz/gram.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "hardyz/summation.hpp"
#include "hardyz/theta.hpp"

namespace hardyz::gram {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBracketLo = 7.0;  // paper's convention g(n) > 7
constexpr int kWarmBlock = 1024;

// first Gram points, used to seed the solver below x = 2
constexpr std::array<double, 4> kSeedT = {
    9.6669080561301921,   // x = -1
    17.845599540410861,   // x =  0
    23.170282701246309,   // x =  1
    27.670182217816338,   // x =  2
};

double theta_prime_value(double t) {
    return 0.5 * std::log(t / (2.0 * kPi)) - 1.0 / (48.0 * t * t);
}

// Newton with a bisection safeguard from an explicit seed.
GramPoint solve_from(double x, double seed, double tol) {
    double lo = kBracketLo;
    double hi = std::max(seed * 1.5, 24.0);
    // theta(lo) - pi x must be negative: theta(7) ~ -3.53 < -pi <= pi x
    while (phase::theta_minus_pix(hi, x) < 0.0) {
        hi *= 2.0;
        if (hi > 1e18) throw std::runtime_error("gram_point: bracket expansion failed");
    }
    double t = std::min(std::max(seed, lo + 1e-6), hi);
    double r = static_cast<double>(phase::theta_minus_pix(t, x));
    for (int iter = 0; iter < 100; ++iter) {
        if (std::fabs(r) <= tol) return {x, t, std::fabs(r)};
        if (r > 0.0) hi = t; else lo = t;
        double step = r / theta_prime_value(std::max(t, 7.0));
        double t_next = t - step;
        if (!(t_next > lo && t_next < hi)) t_next = 0.5 * (lo + hi);
        t = t_next;
        r = static_cast<double>(phase::theta_minus_pix(t, x));
    }
    throw std::runtime_error("gram_point: no convergence after 100 iterations");
}

}  // namespace

double initial_guess(double x) {
    if (x < 2.0) {
        // clamp + linear interpolation over the seed table
        double xc = std::max(x, -1.0);
        double pos = xc + 1.0;  // in [0, 3]
        int i = std::min(static_cast<int>(pos), 2);
        double frac = pos - i;
        return kSeedT[i] + frac * (kSeedT[i + 1] - kSeedT[i]);
    }
    const double lx = std::log(x);
    double y = (x / lx) * (1.0 + (1.0 + std::log(lx)) / lx);  // two-term asymptotic, /2pi
    // sharpen: solve y (log y - 1) = x + 1/8
    const double target = x + 0.125;
    for (int i = 0; i < 4; ++i) {
        double ly = std::log(y);
        y -= (y * (ly - 1.0) - target) / ly;
    }
    return 2.0 * kPi * y;
}

GramPoint gram_point(double x, double tol) {
    if (!(x >= -1.0)) throw std::domain_error("gram_point: requires x >= -1");
    if (!(tol > 0.0)) throw std::invalid_argument("gram_point: tol must be positive");
    return solve_from(x, initial_guess(x), tol);
}

double gram_inverse(double t) {
    if (!(t >= 7.0)) throw std::domain_error("gram_inverse: requires t >= 7");
    return static_cast<double>(phase::theta_ld(t) / 3.141592653589793238462643383279502884L);
}

BoundedValue derivative(double x, int order) {
    if (order < 1 || order > 4) throw std::invalid_argument("gram::derivative: order in 1..4");
    const double t = gram_point(x).t;
    const BoundedValue pi_b{kPi, 0.0};
    const BoundedValue th1 = theta::theta_prime(t);
    if (order == 1) return pi_b / th1;
    const BoundedValue th2 = theta::theta_double_prime(t);
    const BoundedValue pi2{kPi * kPi, 0.0};
    if (order == 2) return -(pi2 * th2) / (th1 * th1 * th1);
    // leading sizes of theta''' and theta'''' with the documented envelopes
    // as coarse uncertainties
    const BoundedValue th3{-1.0 / (2.0 * t * t), theta::theta_higher_bound(t, 3)};
    const BoundedValue th1_5 = th1 * th1 * th1 * th1 * th1;
    if (order == 3) {
        const BoundedValue pi3{kPi * kPi * kPi, 0.0};
        const BoundedValue num = th3 * th1 - BoundedValue{3.0, 0.0} * th2 * th2;
        return -(pi3 * num) / th1_5;
    }
    const BoundedValue th4{1.0 / (t * t * t), theta::theta_higher_bound(t, 4)};
    const BoundedValue pi4{kPi * kPi * kPi * kPi, 0.0};
    const BoundedValue num = th4 * th1 * th1 -
                             BoundedValue{10.0, 0.0} * th3 * th2 * th1 +
                             BoundedValue{15.0, 0.0} * th2 * th2 * th2;
    return -(pi4 * num) / (th1_5 * th1 * th1);
}

double GramCache::t_for(double x) const {
    const double pos = (x - x_lo) / stride;
    const auto i = static_cast<std::ptrdiff_t>(std::llround(pos));
    if (i < 0 || static_cast<std::size_t>(i) >= abscissas.size() ||
        std::fabs(pos - static_cast<double>(i)) > 1e-9)
        throw std::out_of_range("GramCache::t_for: index not on the cached grid");
    return abscissas[static_cast<std::size_t>(i)];
}

bool GramCache::covers(double x) const {
    if (abscissas.empty()) return false;
    const double pos = (x - x_lo) / stride;
    const auto i = static_cast<std::ptrdiff_t>(std::llround(pos));
    return i >= 0 && static_cast<std::size_t>(i) < abscissas.size() &&
           std::fabs(pos - static_cast<double>(i)) <= 1e-9;
}

GramCache gram_range(double x_lo, double x_hi, double stride, double tol, int threads) {
    if (!(stride > 0.0)) throw std::invalid_argument("gram_range: stride must be positive");
    if (!(x_hi >= x_lo)) throw std::invalid_argument("gram_range: empty range");
    if (!(x_lo >= -1.0)) throw std::domain_error("gram_range: requires x_lo >= -1");
    const auto count = static_cast<std::size_t>(std::floor((x_hi - x_lo) / stride + 1e-9)) + 1;

    GramCache cache;
    cache.x_lo = x_lo;
    cache.stride = stride;
    cache.tolerance = tol;
    cache.abscissas.assign(count, 0.0);

    parallel_chunks(
        count, threads,
        [&](std::size_t, std::size_t lo, std::size_t hi) {
            double prev_t = 0.0;
            for (std::size_t i = lo; i < hi; ++i) {
                const double x = x_lo + stride * static_cast<double>(i);
                double seed;
                if (i == lo) {
                    seed = initial_guess(x);
                } else {
                    // warm start: advance the predecessor by stride * g'(x)
                    seed = prev_t + kPi * stride / theta_prime_value(prev_t);
                }
                GramPoint p = solve_from(x, seed, tol);
                cache.abscissas[i] = p.t;
                prev_t = p.t;
            }
        },
        kWarmBlock);
    return cache;
}

namespace {
constexpr char kMagic[9] = {'G', 'R', 'A', 'M', 'C', 'A', 'C', 'H', 'E'};
constexpr std::uint8_t kVersion = 0x01;

template <class T>
void write_raw(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <class T>
void read_raw(std::istream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
}
}  // namespace

void cache_save(const GramCache& cache, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cache_save: cannot open " + path.string());
    os.write(kMagic, sizeof(kMagic));
    write_raw(os, kVersion);
    write_raw(os, cache.stride);
    write_raw(os, cache.x_lo);
    const std::uint64_t count = cache.abscissas.size();
    write_raw(os, count);
    os.write(reinterpret_cast<const char*>(cache.abscissas.data()),
             static_cast<std::streamsize>(count * sizeof(double)));
    if (!os) throw std::runtime_error("cache_save: write failed for " + path.string());
}

GramCache cache_load(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cache_load: cannot open " + path.string());
    char magic[9];
    is.read(magic, sizeof(magic));
    std::uint8_t version = 0;
    read_raw(is, version);
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("cache_load: " + path.string() + " is not a gram cache");
    if (version != kVersion)
        throw std::runtime_error("cache_load: version mismatch in " + path.string());
    GramCache cache;
    read_raw(is, cache.stride);
    read_raw(is, cache.x_lo);
    std::uint64_t count = 0;
    read_raw(is, count);
    if (!is) throw std::runtime_error("cache_load: truncated header in " + path.string());
    cache.abscissas.resize(count);
    is.read(reinterpret_cast<char*>(cache.abscissas.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (!is) throw std::runtime_error("cache_load: truncated data in " + path.string());
    return cache;
}

void cache_export_csv(const GramCache& cache, std::ostream& os) {
    os << "x,t,residual\n";
    char buf[128];
    for (std::size_t i = 0; i < cache.size(); ++i) {
        const double x = cache.x_at(i);
        const double t = cache.abscissas[i];
        const double r = std::fabs(static_cast<double>(phase::theta_minus_pix(t, x)));
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", x, t, r);
        os << buf;
    }
}

}  // namespace hardyz::gram
