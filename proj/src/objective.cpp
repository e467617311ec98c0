#include "synergid/objective.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <set>

#include <json.hpp>

namespace synergid {

void CostSpec::validate() const {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw InvalidConfigError("alpha", "must lie strictly inside (0, 1)");
    }
    if (!std::isfinite(target_trunk_m) || !std::isfinite(target_shoulder_m)) {
        throw InvalidConfigError("target", "targets must be finite");
    }
}

double evaluate_cost(const CostSpec& spec, const ReachOutcome& outcome) {
    const double rt = spec.target_trunk_m - outcome.trunk_disp_m;
    const double rs = spec.target_shoulder_m - outcome.shoulder_disp_m;
    return spec.alpha * rt * rt + (1.0 - spec.alpha) * rs * rs;
}

SynergyCostMap fit_cost_map(std::span<const CostSample> samples) {
    if (samples.size() < 3) {
        throw InsufficientDataError("quadratic fit needs at least 3 samples");
    }
    std::set<double> distinct;
    for (const CostSample& s : samples) distinct.insert(s.theta);
    if (distinct.size() < 3) {
        throw DegenerateDesignError("quadratic fit needs at least 3 distinct synergy values");
    }

    // Normal equations of the quadratic design, accumulated in long double.
    // Centering theta keeps the 3x3 system well conditioned on narrow grids.
    long double mean = 0.0L;
    for (const CostSample& s : samples) mean += s.theta;
    mean /= static_cast<long double>(samples.size());

    long double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    long double y0 = 0, y1 = 0, y2 = 0;
    for (const CostSample& s : samples) {
        const long double x = s.theta - mean;
        const long double x2 = x * x;
        const long double y = s.cost_m2;
        s0 += 1;
        s1 += x;
        s2 += x2;
        s3 += x2 * x;
        s4 += x2 * x2;
        y0 += y;
        y1 += x * y;
        y2 += x2 * y;
    }

    // Solve [s0 s1 s2; s1 s2 s3; s2 s3 s4] * [c0 c1 c2]' = [y0 y1 y2]'.
    const long double d = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s3 * s2) +
                          s2 * (s1 * s3 - s2 * s2);
    if (std::fabs(static_cast<double>(d)) < 1e-30) {
        throw DegenerateDesignError("singular design matrix in quadratic fit");
    }
    const long double c0 = (y0 * (s2 * s4 - s3 * s3) - s1 * (y1 * s4 - s3 * y2) +
                            s2 * (y1 * s3 - s2 * y2)) / d;
    const long double c1 = (s0 * (y1 * s4 - y2 * s3) - y0 * (s1 * s4 - s3 * s2) +
                            s2 * (s1 * y2 - s2 * y1)) / d;
    const long double c2 = (s0 * (s2 * y2 - s3 * y1) - s1 * (s1 * y2 - s3 * y0) +
                            y0 * (s1 * s3 - s2 * s2)) / d;

    SynergyCostMap map;
    // Un-center: J = c2*(t-m)^2 + c1*(t-m) + c0
    map.a2 = static_cast<double>(c2);
    map.a1 = static_cast<double>(c1 - 2.0L * c2 * mean);
    map.a0 = static_cast<double>(c0 - c1 * mean + c2 * mean * mean);

    const auto [lo, hi] = std::minmax_element(
        samples.begin(), samples.end(),
        [](const CostSample& a, const CostSample& b) { return a.theta < b.theta; });
    map.theta_min = lo->theta;
    map.theta_max = hi->theta;

    long double sq = 0.0L;
    for (const CostSample& s : samples) {
        const long double x = s.theta - mean;
        const long double r = s.cost_m2 - (c2 * x * x + c1 * x + c0);
        sq += r * r;
    }
    map.fit_rmse = static_cast<double>(std::sqrt(static_cast<double>(sq / s0)));

    if (map.a2 > 0.0) {
        const double ts = -map.a1 / (2.0 * map.a2);
        if (ts >= map.theta_min && ts <= map.theta_max) {
            map.theta_star = ts;
        }
    }
    return map;
}

ConvexityReport convexity_screen(const SynergyCostMap& map, std::span<const CostSample> samples) {
    ConvexityReport report;
    report.convex = map.a2 > 0.0;
    report.interior_minimum = map.theta_star.has_value();
    report.noise_sd = map.fit_rmse;

    if (!report.convex) {
        report.flat_halfwidth = std::numeric_limits<double>::quiet_NaN();
        report.flat_lo = report.flat_hi = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    const double center = map.theta_star ? *map.theta_star : -map.a1 / (2.0 * map.a2);
    report.flat_halfwidth = std::sqrt(report.noise_sd / map.a2);
    report.flat_lo = center - report.flat_halfwidth;
    report.flat_hi = center + report.flat_halfwidth;
    (void)samples;
    return report;
}

void write_cost_map_csv(std::ostream& out, std::span<const CostSample> samples) {
    out << "theta,cost\n";
    char buf[80];
    for (const CostSample& s : samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.theta, s.cost_m2);
        out << buf;
    }
}

void write_cost_map_json(std::ostream& out, const SynergyCostMap& map) {
    nlohmann::json j;
    j["a2"] = map.a2;
    j["a1"] = map.a1;
    j["a0"] = map.a0;
    if (map.theta_star) {
        j["theta_star"] = *map.theta_star;
    } else {
        j["theta_star"] = nullptr;
    }
    j["fit_rmse"] = map.fit_rmse;
    out << j.dump(2) << '\n';
}

}  // namespace synergid
