#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "synergid/body_kinematics.hpp"
#include "synergid/errors.hpp"

namespace synergid {

enum class ImuSite { C7, SA, UA, LA };

const char* site_name(ImuSite site);
ImuSite site_from_name(const std::string& name);  // throws Error on unknown name

/// One orientation sample from a body-mounted IMU.
struct ImuSample {
    double timestamp_s = 0.0;
    ImuSite site = ImuSite::C7;
    double pitch_rad = 0.0;
    double roll_rad = 0.0;
    double yaw_rad = 0.0;
};

/// All samples of one reach repetition, tagged with the commanded synergy.
struct ReachTrial {
    int iteration_index = 0;
    double synergy_value = 0.0;
    std::vector<ImuSample> samples;  // time-ordered
};

/// Per-iteration displacement features consumed by the personaliser.
struct ReachOutcome {
    int iteration_index = 0;
    double trunk_disp_m = 0.0;     // x_t
    double shoulder_disp_m = 0.0;  // x_s
};

struct ElbowTrajectory {
    std::vector<double> flexion_rad;   // one value per input sample
    std::size_t clamp_count = 0;       // samples limited by the joint range
    bool theta_in_range = true;        // synergy within [0.8, 2.7]
};

/// Time-domain synergy controller: integrates the shoulder rate and scales it
/// by the synergy value, clamped to the prosthetic joint range.
/// elbow(t) = initial + theta * integral(rate), trapezoidal on a uniform grid.
/// Throws EmptySeriesError when the rate series is empty.
ElbowTrajectory synergy_elbow_trajectory(double theta, std::span<const double> shoulder_rate_rad_s,
                                         double dt_s, double initial_elbow_rad,
                                         double clamp_min_rad = 0.0,
                                         double clamp_max_rad = 3.14159265358979323846);

struct PipelineOptions {
    double resample_hz = 50.0;
};

/// Posture at each point of the common resampling grid. Angles are referenced
/// to the trial's first grid sample (per-trial zeroing removes mounting offset
/// and drift), so series report change from the start posture.
struct PostureSeries {
    std::vector<double> time_s;
    std::vector<Posture> postures;
};

/// Joint angles from a trial: trunk pitch from C7, protraction from the
/// SA-relative pitch mapped through the scapular link, shoulder flexion from
/// UA, elbow flexion from LA-UA when LA is present.
/// Throws SiteMissingError / DegenerateTrialError.
PostureSeries joint_angles_from_trial(const ReachTrial& trial, const BodyModel& body,
                                      const PipelineOptions& options = {});

/// Peak forward displacement of trunk and shoulder over the trial.
ReachOutcome extract_outcome(const ReachTrial& trial, const BodyModel& body,
                             const PipelineOptions& options = {});

/// Parses the trial-log CSV (header: iteration,timestamp_s,site,pitch_rad,
/// roll_rad,yaw_rad,theta). Trials are grouped by iteration index; per-site
/// timestamps must be strictly increasing. Throws FormatError / EmptyFileError.
std::vector<ReachTrial> parse_trial_log(std::istream& in);
std::vector<ReachTrial> parse_trial_log_file(const std::string& path);

/// Writes trials in the same CSV format (lossless for doubles).
void write_trial_log(std::ostream& out, std::span<const ReachTrial> trials);
void write_trial_log_file(const std::string& path, std::span<const ReachTrial> trials);

}  // namespace synergid
