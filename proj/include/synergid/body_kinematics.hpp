#pragma once

#include "synergid/errors.hpp"

namespace synergid {

/// Rigid-link segment lengths of the sagittal upper-body model.
/// The chain runs seat pivot -> C7 -> shoulder (acromion) -> elbow -> fingertip.
struct BodyModel {
    double trunk_length_m = 0.50;        // seat/hip pivot to C7
    double c7_to_acromion_m = 0.17;      // scapular link, maps relative pitch to protraction
    double upper_arm_length_m = 0.30;    // shoulder to elbow
    double forearm_hand_length_m = 0.40; // elbow to fingertip

    void validate() const;  // throws InvalidConfigError
};

/// Planar joint configuration. Angles in radians, protraction in metres.
/// trunk_pitch: 0 = upright, positive = forward lean.
/// shoulder_flexion: 0 = arm hanging, pi/2 = arm horizontal forward.
/// elbow_flexion: 0 = straight arm; flexion curls the forearm up/forward.
struct Posture {
    double trunk_pitch_rad = 0.0;
    double shoulder_protraction_m = 0.0;
    double shoulder_flexion_rad = 0.0;
    double elbow_flexion_rad = 0.0;

    void validate() const;  // throws InvalidConfigError
};

/// Reach target in the sagittal plane, relative to the seat pivot.
struct ScreenTarget {
    double forward_m = 0.0;
    double height_m = 0.0;
};

struct PlanarPoint {
    double forward_m = 0.0;
    double height_m = 0.0;
};

/// Fingertip-to-wrist offset used when placing the screen at the wrist of a
/// straight arm. Configurable per rig.
inline constexpr double kDefaultHandMarginM = 0.08;

/// Forward translation of C7 relative to the upright posture.
double trunk_displacement(const BodyModel& body, const Posture& posture);

/// Forward translation of the acromion: trunk contribution plus protraction.
double shoulder_displacement(const BodyModel& body, const Posture& posture);

/// Fingertip coordinates from the full planar chain.
PlanarPoint fingertip_position(const BodyModel& body, const Posture& posture);

/// Screen placement for a subject: wrist position of the straight horizontal arm.
ScreenTarget screen_for_subject(const BodyModel& body, double hand_margin_m = kDefaultHandMarginM);

/// Smallest nonnegative trunk pitch that closes the forward gap between the
/// fingertip and the target, holding the arm joints fixed. Returns 0 when the
/// fingertip already reaches or passes the target. Gap closed to 1e-6 m.
/// Throws UnreachableError when no pitch <= pi/2 closes the gap.
double required_trunk_pitch(const BodyModel& body, const ScreenTarget& target,
                            double elbow_flexion_rad, double shoulder_flexion_rad,
                            double protraction_m);

}  // namespace synergid
