#include "synergid/imu_pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace synergid {

namespace {

constexpr double kMinTrialSpanS = 0.1;
constexpr double kThetaMin = 0.8;
constexpr double kThetaMax = 2.7;

struct SiteSeries {
    std::vector<double> t;
    std::vector<double> pitch;
};

double interpolate(const SiteSeries& s, double t) {
    if (t <= s.t.front()) return s.pitch.front();
    if (t >= s.t.back()) return s.pitch.back();
    const auto it = std::upper_bound(s.t.begin(), s.t.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - s.t.begin());
    const double t0 = s.t[i - 1], t1 = s.t[i];
    const double w = (t - t0) / (t1 - t0);
    return s.pitch[i - 1] + w * (s.pitch[i] - s.pitch[i - 1]);
}

void format_double(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

const char* site_name(ImuSite site) {
    switch (site) {
        case ImuSite::C7: return "C7";
        case ImuSite::SA: return "SA";
        case ImuSite::UA: return "UA";
        case ImuSite::LA: return "LA";
    }
    return "?";
}

ImuSite site_from_name(const std::string& name) {
    if (name == "C7") return ImuSite::C7;
    if (name == "SA") return ImuSite::SA;
    if (name == "UA") return ImuSite::UA;
    if (name == "LA") return ImuSite::LA;
    throw Error("unknown IMU site: " + name);
}

ElbowTrajectory synergy_elbow_trajectory(double theta, std::span<const double> shoulder_rate_rad_s,
                                         double dt_s, double initial_elbow_rad,
                                         double clamp_min_rad, double clamp_max_rad) {
    if (shoulder_rate_rad_s.empty()) {
        throw EmptySeriesError("shoulder rate series is empty");
    }
    ElbowTrajectory traj;
    traj.theta_in_range = theta >= kThetaMin && theta <= kThetaMax;
    traj.flexion_rad.reserve(shoulder_rate_rad_s.size());

    double integral = 0.0;
    for (std::size_t i = 0; i < shoulder_rate_rad_s.size(); ++i) {
        if (i > 0) {
            integral += 0.5 * dt_s * (shoulder_rate_rad_s[i - 1] + shoulder_rate_rad_s[i]);
        }
        double elbow = initial_elbow_rad + theta * integral;
        if (elbow < clamp_min_rad) {
            elbow = clamp_min_rad;
            ++traj.clamp_count;
        } else if (elbow > clamp_max_rad) {
            elbow = clamp_max_rad;
            ++traj.clamp_count;
        }
        traj.flexion_rad.push_back(elbow);
    }
    return traj;
}

PostureSeries joint_angles_from_trial(const ReachTrial& trial, const BodyModel& body,
                                      const PipelineOptions& options) {
    std::map<ImuSite, SiteSeries> sites;
    for (const ImuSample& s : trial.samples) {
        auto& series = sites[s.site];
        series.t.push_back(s.timestamp_s);
        series.pitch.push_back(s.pitch_rad);
    }

    for (ImuSite required : {ImuSite::C7, ImuSite::SA, ImuSite::UA}) {
        if (!sites.count(required)) {
            throw SiteMissingError(site_name(required));
        }
    }
    const bool has_la = sites.count(ImuSite::LA) > 0;

    double t_start = -1e300;
    double t_end = 1e300;
    for (const auto& [site, series] : sites) {
        t_start = std::max(t_start, series.t.front());
        t_end = std::min(t_end, series.t.back());
    }
    if (!(t_end - t_start >= kMinTrialSpanS)) {
        throw DegenerateTrialError("trial span below 0.1 s across shared sites");
    }

    const double dt = 1.0 / options.resample_hz;
    const std::size_t n = static_cast<std::size_t>(std::floor((t_end - t_start) / dt + 1e-9)) + 1;

    const SiteSeries& c7 = sites.at(ImuSite::C7);
    const SiteSeries& sa = sites.at(ImuSite::SA);
    const SiteSeries& ua = sites.at(ImuSite::UA);

    const double c7_0 = interpolate(c7, t_start);
    const double sa_0 = interpolate(sa, t_start);
    const double ua_0 = interpolate(ua, t_start);
    const double la_0 = has_la ? interpolate(sites.at(ImuSite::LA), t_start) : 0.0;

    PostureSeries out;
    out.time_s.reserve(n);
    out.postures.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = t_start + static_cast<double>(k) * dt;
        const double c7_rel = interpolate(c7, t) - c7_0;
        const double sa_rel = interpolate(sa, t) - sa_0;
        const double ua_rel = interpolate(ua, t) - ua_0;

        Posture p;
        p.trunk_pitch_rad = c7_rel;
        p.shoulder_protraction_m = body.c7_to_acromion_m * std::sin(sa_rel - c7_rel);
        p.shoulder_flexion_rad = ua_rel;
        if (has_la) {
            const double la_rel = interpolate(sites.at(ImuSite::LA), t) - la_0;
            p.elbow_flexion_rad = la_rel - ua_rel;
        }
        out.time_s.push_back(t);
        out.postures.push_back(p);
    }
    return out;
}

ReachOutcome extract_outcome(const ReachTrial& trial, const BodyModel& body,
                             const PipelineOptions& options) {
    const PostureSeries series = joint_angles_from_trial(trial, body, options);

    ReachOutcome outcome;
    outcome.iteration_index = trial.iteration_index;
    double trunk_peak = 0.0;
    double shoulder_peak = 0.0;
    for (const Posture& p : series.postures) {
        trunk_peak = std::max(trunk_peak, trunk_displacement(body, p));
        shoulder_peak = std::max(shoulder_peak, shoulder_displacement(body, p));
    }
    outcome.trunk_disp_m = trunk_peak;
    outcome.shoulder_disp_m = shoulder_peak;
    return outcome;
}

std::vector<ReachTrial> parse_trial_log(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw EmptyFileError("trial log is empty");
    }
    ++line_no;  // header consumed

    // iteration -> trial, preserving per-site arrival order for the
    // monotonicity check before sorting.
    std::map<int, ReachTrial> trials;
    std::map<std::pair<int, ImuSite>, double> last_time;
    std::size_t data_rows = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;

        std::istringstream row(line);
        std::string field;
        std::array<std::string, 7> fields;
        std::size_t nf = 0;
        while (std::getline(row, field, ',')) {
            if (nf < fields.size()) fields[nf] = field;
            ++nf;
        }
        if (nf != fields.size()) {
            throw FormatError(line_no, "expected 7 comma-separated fields, got " + std::to_string(nf));
        }

        ReachTrial* trial = nullptr;
        ImuSample sample;
        int iteration = 0;
        double theta = 0.0;
        try {
            std::size_t pos = 0;
            iteration = std::stoi(fields[0], &pos);
            if (pos != fields[0].size()) throw std::invalid_argument("iteration");
            sample.timestamp_s = std::stod(fields[1]);
            sample.site = site_from_name(fields[2]);
            sample.pitch_rad = std::stod(fields[3]);
            sample.roll_rad = std::stod(fields[4]);
            sample.yaw_rad = std::stod(fields[5]);
            theta = std::stod(fields[6]);
        } catch (const Error& e) {
            throw FormatError(line_no, e.what());
        } catch (const std::exception&) {
            throw FormatError(line_no, "unparseable numeric field");
        }
        if (iteration < 0) {
            throw FormatError(line_no, "negative iteration index");
        }
        if (!std::isfinite(sample.pitch_rad) || std::fabs(sample.pitch_rad) > 3.14159265358979323846) {
            throw FormatError(line_no, "pitch outside [-pi, pi]");
        }

        auto [it, inserted] = trials.try_emplace(iteration);
        trial = &it->second;
        if (inserted) {
            trial->iteration_index = iteration;
            trial->synergy_value = theta;
        } else if (trial->synergy_value != theta) {
            throw FormatError(line_no, "synergy value changed within one iteration");
        }

        const auto key = std::make_pair(iteration, sample.site);
        auto lt = last_time.find(key);
        if (lt != last_time.end() && !(sample.timestamp_s > lt->second)) {
            throw FormatError(line_no, "timestamps not strictly increasing for site " +
                                           std::string(site_name(sample.site)));
        }
        last_time[key] = sample.timestamp_s;

        trial->samples.push_back(sample);
        ++data_rows;
    }

    if (data_rows == 0) {
        throw EmptyFileError("trial log has no data rows");
    }

    std::vector<ReachTrial> out;
    out.reserve(trials.size());
    for (auto& [iteration, trial] : trials) {
        std::stable_sort(trial.samples.begin(), trial.samples.end(),
                         [](const ImuSample& a, const ImuSample& b) {
                             return a.timestamp_s < b.timestamp_s;
                         });
        out.push_back(std::move(trial));
    }
    return out;
}

std::vector<ReachTrial> parse_trial_log_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open trial log: " + path);
    }
    return parse_trial_log(in);
}

void write_trial_log(std::ostream& out, std::span<const ReachTrial> trials) {
    std::string buf = "iteration,timestamp_s,site,pitch_rad,roll_rad,yaw_rad,theta\n";
    for (const ReachTrial& trial : trials) {
        for (const ImuSample& s : trial.samples) {
            buf += std::to_string(trial.iteration_index);
            buf += ',';
            format_double(buf, s.timestamp_s);
            buf += ',';
            buf += site_name(s.site);
            buf += ',';
            format_double(buf, s.pitch_rad);
            buf += ',';
            format_double(buf, s.roll_rad);
            buf += ',';
            format_double(buf, s.yaw_rad);
            buf += ',';
            format_double(buf, trial.synergy_value);
            buf += '\n';
        }
    }
    out << buf;
}

void write_trial_log_file(const std::string& path, std::span<const ReachTrial> trials) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write trial log: " + path);
    }
    write_trial_log(out, trials);
}

}  // namespace synergid
