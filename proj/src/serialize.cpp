#include "projlab/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace projlab {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Json measure_to_json(const SpectralMeasure& m) {
    Json atoms = Json::array();
    for (const auto& a : m.atoms) atoms.push_back({a.location, a.mass});
    return Json{{"atoms", atoms}, {"cloud", m.cloud}, {"cloud_mass", m.cloud_mass}};
}

SpectralMeasure measure_from_json(const Json& j) {
    SpectralMeasure m;
    for (const auto& a : j.at("atoms"))
        m.atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
    m.cloud = j.at("cloud").get<std::vector<double>>();
    std::sort(m.cloud.begin(), m.cloud.end());
    m.cloud_mass = j.at("cloud_mass").get<double>();
    return m;
}

Json state_to_json(const TracialState& tau) {
    return Json{{"a11", tau.a11}, {"a10", tau.a10}, {"a01", tau.a01},
                {"a00", tau.a00}, {"mu", measure_to_json(tau.mu)}};
}

TracialState state_from_json(const Json& j) {
    TracialState tau;
    tau.a11 = j.at("a11").get<double>();
    tau.a10 = j.at("a10").get<double>();
    tau.a01 = j.at("a01").get<double>();
    tau.a00 = j.at("a00").get<double>();
    tau.mu = measure_from_json(j.at("mu"));
    return tau;
}

Json law_to_json(const LimitLaw& law, int grid_points) {
    if (grid_points < 2) throw parameter_error("law_to_json: need at least 2 grid points");
    Json atoms = Json::array();
    for (const auto& a : law.atoms) atoms.push_back({a.location, a.mass});
    Json support = Json::array();
    double total_len = 0.0;
    for (const auto& iv : law.support) {
        support.push_back({iv.lo, iv.hi});
        total_len += iv.hi - iv.lo;
    }
    std::vector<double> grid, values;
    if (total_len > 0.0) {
        for (const auto& iv : law.support) {
            const int pts = std::max(
                2, static_cast<int>(std::lround(grid_points * (iv.hi - iv.lo) / total_len)));
            for (int i = 0; i < pts; ++i) {
                // open-interval grid; densities may blow up at the endpoints
                const double x = iv.lo + (iv.hi - iv.lo) * (i + 0.5) / pts;
                grid.push_back(x);
                values.push_back(law.density(x));
            }
        }
    }
    return Json{{"atoms", atoms},
                {"support", support},
                {"grid", grid},
                {"density_values", values},
                {"continuous_mass", law.continuous_mass},
                {"circular", law.circular}};
}

Json report_to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"statistic", c.statistic},
                              {"threshold", c.threshold},
                              {"samples", c.samples},
                              {"seed", c.seed},
                              {"pass", c.pass}});
    }
    return Json{{"suite", r.suite},
                {"pass", r.pass},
                {"duration_seconds", r.duration_seconds},
                {"checks", checks}};
}

Json ext_real_to_json(const ExtReal& v) {
    if (v.is_pos_inf()) return "+inf";
    if (v.is_neg_inf()) return "-inf";
    return v.value();
}

}  // namespace projlab
