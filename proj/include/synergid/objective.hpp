#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "synergid/errors.hpp"
#include "synergid/imu_pipeline.hpp"

namespace synergid {

/// Weights and targets of the compensation cost:
///   J = alpha*(target_trunk - x_t)^2 + (1-alpha)*(target_shoulder - x_s)^2
struct CostSpec {
    double alpha = 0.5;
    double target_trunk_m = 0.0;
    double target_shoulder_m = 0.0;

    void validate() const;  // throws InvalidConfigError
};

/// One (synergy, cost) observation.
struct CostSample {
    double theta = 0.0;
    double cost_m2 = 0.0;
    int iteration_index = 0;
};

/// Quadratic synergy-cost map J(theta) ~= a2*theta^2 + a1*theta + a0.
/// theta_star is set only when the fit is convex with an interior minimum.
struct SynergyCostMap {
    double a2 = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;
    std::optional<double> theta_star;
    double fit_rmse = 0.0;
    double theta_min = 0.0;
    double theta_max = 0.0;
};

struct ConvexityReport {
    bool convex = false;            // a2 > 0
    bool interior_minimum = false;  // theta_star inside the sampled range
    double noise_sd = 0.0;          // residual standard deviation of the fit
    double flat_halfwidth = 0.0;    // sqrt(noise_sd / a2); NaN when not convex
    double flat_lo = 0.0;
    double flat_hi = 0.0;
};

/// Exact compensation cost of one outcome.
double evaluate_cost(const CostSpec& spec, const ReachOutcome& outcome);

/// Ordinary least-squares quadratic fit over all samples.
/// Throws InsufficientDataError (< 3 samples) or DegenerateDesignError
/// (< 3 distinct synergy values).
SynergyCostMap fit_cost_map(std::span<const CostSample> samples);

/// Convexity and flat-region report: the synergy interval whose fitted cost
/// stays within one noise standard deviation of the minimum.
ConvexityReport convexity_screen(const SynergyCostMap& map, std::span<const CostSample> samples);

/// Cost-map export: theta,cost CSV plus the JSON sidecar
/// {a2,a1,a0,theta_star,fit_rmse}.
void write_cost_map_csv(std::ostream& out, std::span<const CostSample> samples);
void write_cost_map_json(std::ostream& out, const SynergyCostMap& map);

}  // namespace synergid
