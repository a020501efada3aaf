#ifndef TAFFY_ORBIT_HPP
#define TAFFY_ORBIT_HPP

#include <array>
#include <string>
#include <vector>

#include "taffy/braid.hpp"
#include "taffy/rational.hpp"

namespace taffy {

/// One rotating arm of an epicyclic rod trajectory. Frequency is in signed
/// turns per full device period and must be an integer so every orbit closes;
/// it is stored as an exact rational to keep spec files faithful.
struct Arm {
    double radius = 0.0;
    Rat frequency;  // turns per device period
    double phase = 0.0;  // radians
};

struct RodTrajectory {
    std::array<double, 2> center{0.0, 0.0};
    std::vector<Arm> arms;  // empty = fixed rod

    bool is_fixed() const;
    std::array<double, 2> position(double t) const;
};

struct RodMotionSpec {
    std::string name;
    std::vector<RodTrajectory> rods;
    Rat period_fraction{1};  // fraction of the period after which the rod set returns
    std::string notes;

    /// Checks closure (integer turns), distinctness at t = 0, and p > 0.
    void validate() const;
};

/// Positions of every rod at time t (one full device period is t in [0,1]).
std::vector<std::array<double, 2>> positions(const RodMotionSpec& spec, double t);

/// Compiles the rod motion over [0, duration] into a braid word by projecting
/// onto a generic axis and recording adjacent transpositions of the projected
/// order. Simultaneous disjoint swaps commute and are emitted left to right;
/// entangled clusters are resolved by bubble decomposition at the event.
/// Throws CoincidentRods / ProjectionDegenerate when ties survive refinement
/// and axis rotation.
BraidWord compile_braid(const RodMotionSpec& spec, const Rat& duration, int samples = 512);

/// Moves the device into a frame rotating uniformly at delta_turns per
/// period: every arm frequency shifts by -delta_turns, and off-center rods
/// gain an arm for their now-rotating centers. The rod-set return fraction
/// generally changes, so the result's period_fraction is reset to 1; full
/// period compiles of the two frames differ only by central full twists.
RodMotionSpec corotating_frame(RodMotionSpec spec, long delta_turns);

/// Built-in devices: firchau, standard-3-rod, nitz, standard-4-rod, six-rod,
/// mixograph.
std::vector<RodMotionSpec> catalog();
RodMotionSpec catalog_spec(const std::string& name);  // throws UnknownDevice

/// JSON spec-file round trip.
std::string spec_to_json(const RodMotionSpec& spec);
RodMotionSpec spec_from_json(const std::string& text);
RodMotionSpec load_spec_file(const std::string& path);

}  // namespace taffy

#endif
