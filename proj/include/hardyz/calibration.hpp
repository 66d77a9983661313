// calibration.hpp
//
// Empirical constants that turn the big-O statements into assertable
// inequalities: evaluator error envelopes, exponential-sum lemma constants,
// and the acceptance caps for the headline sums.  The committed record lives
// in data/calibration.kv; `hardyz calibrate` regenerates it (measured maxima
// with x2 headroom) and the test suite checks the file against the compiled
// values, so the two cannot drift silently.

#pragma once

#include <iosfwd>
#include <string>

namespace hardyz::calibration {

struct Record {
    // evaluator envelopes: |Z_method - Z_ref| <= c * t^(-exponent)
    double c_rs = 0.0;      // main sum, t^{-1/4}
    double c_afe = 0.0;     // smooth AFE, t^{-5/6}
    double c_corr0 = 0.0;   // corrected order 0, t^{-3/4}
    double c_corr1 = 0.0;   // corrected order 1, t^{-5/4}
    double c_corr2 = 0.0;   // corrected order 2, t^{-7/4}

    // exponential-sum lemma constants
    double k_fdt = 0.0;     // |sum - integral| <= k_fdt * H/(1-delta)
    double k_fdt_bound = 0.0;  // |sum| <= k * (H/delta1 + H/(1-delta))
    double k_vdc = 0.0;     // |direct - transformed| <= k_vdc * R_bound
    double k_u = 0.0;       // |U - asym| <= k_u
    double k_w = 0.0;       // W_m(1) closed-form residual, |num-cf|/(m log m) <= k_w/m^2

    // acceptance caps for the headline sums
    double cap_norm_new_even = 0.0;
    double cap_norm_new_odd = 0.0;
    double cap_cosine_norm = 0.0;
    double moser_stat_1e4 = 0.0;  // regression pin, +-20%
};

// the committed record (compiled in; data/calibration.kv mirrors it)
const Record& current();

void save(const Record& rec, std::ostream& os);
Record load(std::istream& is);
Record load_file(const std::string& path);

}  // namespace hardyz::calibration
