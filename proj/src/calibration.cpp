// calibration.cpp

#include "hardyz/calibration.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hardyz::calibration {

// Values from the committed calibration run (`hardyz calibrate`): measured
// maxima with x2 headroom.  Regenerate with the CLI and refresh both this
// table and data/calibration.kv together.
const Record& current() {
    static const Record rec = [] {
        Record r;
        r.c_rs = 1.32;
        r.c_afe = 6.3;
        r.c_corr0 = 0.055;
        r.c_corr1 = 0.11;
        r.c_corr2 = 0.33;
        r.k_fdt = 1.26;
        r.k_fdt_bound = 0.88;
        r.k_vdc = 0.82;
        r.k_u = 0.77;
        r.k_w = 1.78;
        r.cap_norm_new_even = 0.61;
        r.cap_norm_new_odd = 0.56;
        r.cap_cosine_norm = 0.79;
        r.moser_stat_1e4 = 0.702;
        return r;
    }();
    return rec;
}

namespace {

struct Field {
    const char* key;
    double Record::*member;
};

constexpr Field kFields[] = {
    {"c_rs", &Record::c_rs},
    {"c_afe", &Record::c_afe},
    {"c_corr0", &Record::c_corr0},
    {"c_corr1", &Record::c_corr1},
    {"c_corr2", &Record::c_corr2},
    {"k_fdt", &Record::k_fdt},
    {"k_fdt_bound", &Record::k_fdt_bound},
    {"k_vdc", &Record::k_vdc},
    {"k_u", &Record::k_u},
    {"k_w", &Record::k_w},
    {"cap_norm_new_even", &Record::cap_norm_new_even},
    {"cap_norm_new_odd", &Record::cap_norm_new_odd},
    {"cap_cosine_norm", &Record::cap_cosine_norm},
    {"moser_stat_1e4", &Record::moser_stat_1e4},
};

}  // namespace

void save(const Record& rec, std::ostream& os) {
    os << "# calibration record: measured maxima with x2 headroom\n"
       << "# regenerate with `hardyz calibrate`\n";
    char buf[64];
    for (const auto& f : kFields) {
        std::snprintf(buf, sizeof(buf), "%.6g", rec.*(f.member));
        os << f.key << " = " << buf << "\n";
    }
}

Record load(std::istream& is) {
    std::map<std::string, double> kv;
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        kv[key] = std::stod(line.substr(eq + 1));
    }
    Record rec;
    for (const auto& f : kFields) {
        auto it = kv.find(f.key);
        if (it == kv.end())
            throw std::runtime_error(std::string("calibration: missing key ") + f.key);
        rec.*(f.member) = it->second;
    }
    return rec;
}

Record load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("calibration: cannot open " + path);
    return load(is);
}

}  // namespace hardyz::calibration
