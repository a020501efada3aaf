#ifndef TAFFY_CATALOG_HPP
#define TAFFY_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taffy/braid.hpp"
#include "taffy/loop.hpp"
#include "taffy/orbit.hpp"

namespace taffy {

/// Per-device analysis result; one table row.
struct PullerAnalysis {
    std::string name;
    int rods_total = 0;
    int rods_fixed = 0;
    std::optional<BraidWord> braid;
    std::optional<IntPolynomial> char_poly;  // certified quadratic factor only
    double dilatation = 1.0;                 // per period fraction p
    Rat period_fraction{1};
    double efficiency = 0.0;  // log(dilatation) / p
    EntropyEstimate entropy;
    std::vector<std::string> flags;
    std::string error;  // nonempty when the device could not be analyzed

    bool ok() const { return error.empty(); }
};

struct AnalyzeOptions {
    double tol = 1e-4;
    int max_iter = 60;
    int samples = 512;
};

/// Static registry of known devices, bundled rod motions plus appendix
/// fixtures that only carry expected values and need a user-supplied braid.
struct DeviceInfo {
    std::string name;
    int rods = 0;
    int fixed = 0;
    Rat p{1};
    bool has_motion = false;    // member of catalog()
    bool torus_cover = false;   // quadratic dilatation certified through Burau
    std::optional<IntPolynomial> reference_poly;  // known polynomial, if any
};

const std::vector<DeviceInfo>& device_registry();
const DeviceInfo* find_device(const std::string& name);

PullerAnalysis analyze(const std::string& name, const AnalyzeOptions& opt = {});
PullerAnalysis analyze(const RodMotionSpec& spec, const AnalyzeOptions& opt = {});
PullerAnalysis analyze_braid(const std::string& name, const BraidWord& braid, const Rat& p,
                             const AnalyzeOptions& opt = {});

/// One row per bundled device; appendix fixtures only when extra_braids
/// supplies a word for them. Per-row failures are captured in the row.
std::vector<PullerAnalysis> table(const AnalyzeOptions& opt = {},
                                  const std::map<std::string, BraidWord>& extra_braids = {});

std::string to_csv(const std::vector<PullerAnalysis>& rows);
std::string to_json(const std::vector<PullerAnalysis>& rows);
std::string to_json(const PullerAnalysis& row);
std::string to_text(const PullerAnalysis& row);

/// Parses an --extra-braids file: {"device": {"strands": N, "word": "1 -2"}}.
std::map<std::string, BraidWord> parse_extra_braids(const std::string& json_text);

}  // namespace taffy

#endif
