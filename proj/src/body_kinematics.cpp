#include "synergid/body_kinematics.hpp"

#include <cmath>

namespace synergid {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kPitchTol = 1e-6;  // metres, gap-closure tolerance
}  // namespace

void BodyModel::validate() const {
    auto check = [](double v, const char* name) {
        if (!(v > 0.0) || !(v < 2.0)) {
            throw InvalidConfigError(name, "segment length must be in (0, 2) m");
        }
    };
    check(trunk_length_m, "trunk_length_m");
    check(c7_to_acromion_m, "c7_to_acromion_m");
    check(upper_arm_length_m, "upper_arm_length_m");
    check(forearm_hand_length_m, "forearm_hand_length_m");
    if (!(upper_arm_length_m + forearm_hand_length_m > 0.3)) {
        throw InvalidConfigError("upper_arm_length_m", "arm span must exceed 0.3 m");
    }
}

void Posture::validate() const {
    if (!std::isfinite(trunk_pitch_rad) || trunk_pitch_rad < -kPi / 4 || trunk_pitch_rad > kPi / 2) {
        throw InvalidConfigError("trunk_pitch_rad", "must lie in [-pi/4, pi/2]");
    }
    if (!std::isfinite(elbow_flexion_rad) || elbow_flexion_rad < 0.0 || elbow_flexion_rad > kPi) {
        throw InvalidConfigError("elbow_flexion_rad", "must lie in [0, pi]");
    }
    if (!std::isfinite(shoulder_protraction_m) || shoulder_protraction_m < -0.05 ||
        shoulder_protraction_m > 0.20) {
        throw InvalidConfigError("shoulder_protraction_m", "must lie in [-0.05, 0.20] m");
    }
    if (!std::isfinite(shoulder_flexion_rad)) {
        throw InvalidConfigError("shoulder_flexion_rad", "must be finite");
    }
}

double trunk_displacement(const BodyModel& body, const Posture& posture) {
    return body.trunk_length_m * std::sin(posture.trunk_pitch_rad);
}

double shoulder_displacement(const BodyModel& body, const Posture& posture) {
    return trunk_displacement(body, posture) + posture.shoulder_protraction_m;
}

PlanarPoint fingertip_position(const BodyModel& body, const Posture& posture) {
    // Segment directions measured from the downward vertical, positive forward.
    // A segment of length L at direction angle xi spans L*(sin xi, -cos xi).
    const double phi = posture.trunk_pitch_rad;
    const double xi_ua = phi + posture.shoulder_flexion_rad;
    const double xi_fa = xi_ua + posture.elbow_flexion_rad;

    // Shoulder sits at C7 height; protraction is a forward prismatic offset.
    const double shoulder_fwd = body.trunk_length_m * std::sin(phi) + posture.shoulder_protraction_m;
    const double shoulder_up = body.trunk_length_m * std::cos(phi);

    PlanarPoint tip;
    tip.forward_m = shoulder_fwd + body.upper_arm_length_m * std::sin(xi_ua) +
                    body.forearm_hand_length_m * std::sin(xi_fa);
    tip.height_m = shoulder_up - body.upper_arm_length_m * std::cos(xi_ua) -
                   body.forearm_hand_length_m * std::cos(xi_fa);
    return tip;
}

ScreenTarget screen_for_subject(const BodyModel& body, double hand_margin_m) {
    ScreenTarget target;
    target.forward_m = body.upper_arm_length_m + body.forearm_hand_length_m - hand_margin_m;
    target.height_m = body.trunk_length_m;
    return target;
}

double required_trunk_pitch(const BodyModel& body, const ScreenTarget& target,
                            double elbow_flexion_rad, double shoulder_flexion_rad,
                            double protraction_m) {
    auto gap = [&](double pitch) {
        Posture p;
        p.trunk_pitch_rad = pitch;
        p.shoulder_protraction_m = protraction_m;
        p.shoulder_flexion_rad = shoulder_flexion_rad;
        p.elbow_flexion_rad = elbow_flexion_rad;
        return fingertip_position(body, p).forward_m - target.forward_m;
    };

    if (gap(0.0) >= 0.0) {
        return 0.0;
    }

    // Scan for the first sign change, then bisect inside that bracket so the
    // smallest root is found even if the gap is not monotone in pitch.
    constexpr int kScanSteps = 96;
    double lo = 0.0;
    double hi = 0.0;
    bool bracketed = false;
    for (int k = 1; k <= kScanSteps; ++k) {
        const double pitch = (kPi / 2) * static_cast<double>(k) / kScanSteps;
        if (gap(pitch) >= 0.0) {
            lo = (kPi / 2) * static_cast<double>(k - 1) / kScanSteps;
            hi = pitch;
            bracketed = true;
            break;
        }
    }
    if (!bracketed) {
        throw UnreachableError("no trunk pitch <= pi/2 closes the reach gap");
    }

    for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double g = gap(mid);
        if (std::fabs(g) < kPitchTol) {
            return mid;
        }
        if (g < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace synergid
