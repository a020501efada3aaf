#include "taffy/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "taffy/errors.hpp"
#include "taffy/polynomial.hpp"

namespace taffy {

namespace {

// Growth below this after an unconverged run is reported as "no exponential
// growth" (dilatation 1) rather than as a tiny positive entropy.
constexpr double kNoGrowthCutoff = 0.02;

IntPolynomial make_poly(std::vector<long> constant_first) {
    std::vector<Int> c;
    for (long v : constant_first) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

}  // namespace

const std::vector<DeviceInfo>& device_registry() {
    static const std::vector<DeviceInfo> reg = [] {
        std::vector<DeviceInfo> r;
        r.push_back({"firchau", 2, 0, Rat(1), true, false, std::nullopt});
        r.push_back({"standard-3-rod", 3, 1, Rat(1), true, true, make_poly({1, -6, 1})});
        r.push_back({"nitz", 3, 0, Rat(1, 3), true, true, make_poly({1, -3, 1})});
        r.push_back({"standard-4-rod", 4, 0, Rat(1), true, true, make_poly({1, -6, 1})});
        r.push_back({"six-rod", 6, 2, Rat(1, 2), true, true, make_poly({1, -4, 1})});
        r.push_back({"mixograph", 7, 0, Rat(1, 6), true, false,
                     make_poly({1, -4, -1, 0, 4, 0, -1, -4, 1})});
        // Appendix fixtures: expected values only, braid words must be supplied.
        r.push_back({"thibodeau-1904", 4, 0, Rat(1, 3), false, true, make_poly({1, -3, 1})});
        r.push_back({"mccarthy-1916a", 4, 3, Rat(1), false, true, make_poly({1, -18, 1})});
        r.push_back({"mccarthy-1916b", 4, 3, Rat(1), false, false,
                     make_poly({1, -36, 54, -36, 1})});
        r.push_back({"jenner-1905", 5, 3, Rat(1), false, false, make_poly({1, -8, -2, -8, 1})});
        r.push_back({"shean-1914", 6, 0, Rat(1, 2), false, true, make_poly({1, -4, 1})});
        r.push_back({"mccarthy-1915", 5, 2, Rat(1), false, false,
                     make_poly({1, -20, -26, -20, 1})});
        return r;
    }();
    return reg;
}

const DeviceInfo* find_device(const std::string& name) {
    for (const DeviceInfo& d : device_registry())
        if (d.name == name) return &d;
    return nullptr;
}

namespace {

// Entropy of a braid, padding 2-strand words with a sentinel strand since the
// loop engine needs three punctures.
EntropyEstimate braid_entropy(const BraidWord& b, const AnalyzeOptions& opt) {
    if (b.n_strands() >= 3) return entropy(b, opt.tol, opt.max_iter);
    BraidWord padded(3, b.letters());
    return entropy(padded, opt.tol, opt.max_iter);
}

void finish_from_braid(PullerAnalysis& out, const DeviceInfo* info, const AnalyzeOptions& opt) {
    const BraidWord& braid = *out.braid;
    out.entropy = braid_entropy(braid, opt);

    std::optional<IntPolynomial> quad;
    if (braid.n_strands() >= 3) quad = essential_quadratic(braid);

    const bool expect_quadratic = info && info->torus_cover;
    if (expect_quadratic && quad) {
        double lambda = largest_root(*quad, 1e-12);
        // Certify: the loop engine must agree with the Burau factor.
        if (std::abs(out.entropy.value - std::log(lambda)) < std::max(10 * opt.tol, 1e-3)) {
            out.char_poly = quad;
            out.dilatation = lambda;
        } else {
            out.flags.push_back("burau factor " + quad->str() +
                                " disagrees with loop growth; reporting measured growth");
            out.dilatation = std::exp(out.entropy.value);
        }
    } else if (info && info->reference_poly) {
        double lambda = largest_root(*info->reference_poly, 1e-12);
        if (std::abs(out.entropy.value - std::log(lambda)) < std::max(10 * opt.tol, 1e-3)) {
            out.dilatation = lambda;
            out.flags.push_back("dilatation verified against reference polynomial");
        } else {
            out.dilatation = std::exp(out.entropy.value);
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "kinematic gap: loop growth %.6f differs from reference log-root %.6f",
                          out.entropy.value, std::log(lambda));
            out.flags.push_back(buf);
        }
    } else if (!out.entropy.converged && out.entropy.value < kNoGrowthCutoff) {
        out.dilatation = 1.0;
        out.flags.push_back("not pseudo-Anosov: no exponential growth detected");
    } else {
        out.dilatation = std::exp(out.entropy.value);
        if (quad && std::abs(out.entropy.value - std::log(largest_root(*quad, 1e-12))) < 1e-3) {
            out.char_poly = quad;
            out.dilatation = largest_root(*quad, 1e-12);
        }
    }

    double p = mpq_get_d(out.period_fraction.get_mpq_t());
    out.efficiency = std::log(out.dilatation) / p;
}

}  // namespace

PullerAnalysis analyze(const RodMotionSpec& spec, const AnalyzeOptions& opt) {
    PullerAnalysis out;
    out.name = spec.name;
    out.rods_total = static_cast<int>(spec.rods.size());
    out.rods_fixed = static_cast<int>(
        std::count_if(spec.rods.begin(), spec.rods.end(),
                      [](const RodTrajectory& r) { return r.is_fixed(); }));
    out.period_fraction = spec.period_fraction;
    const DeviceInfo* info = find_device(spec.name);
    try {
        out.braid = compile_braid(spec, spec.period_fraction, opt.samples);
        finish_from_braid(out, info, opt);
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

PullerAnalysis analyze(const std::string& name, const AnalyzeOptions& opt) {
    const DeviceInfo* info = find_device(name);
    if (info && !info->has_motion)
        throw UnknownDevice("device '" + name + "' is an appendix fixture; supply a braid word");
    return analyze(catalog_spec(name), opt);
}

PullerAnalysis analyze_braid(const std::string& name, const BraidWord& braid, const Rat& p,
                             const AnalyzeOptions& opt) {
    PullerAnalysis out;
    out.name = name;
    const DeviceInfo* info = find_device(name);
    out.rods_total = info ? info->rods : braid.n_strands();
    out.rods_fixed = info ? info->fixed : 0;
    out.period_fraction = p;
    out.braid = braid;
    try {
        finish_from_braid(out, info, opt);
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

std::vector<PullerAnalysis> table(const AnalyzeOptions& opt,
                                  const std::map<std::string, BraidWord>& extra_braids) {
    std::vector<PullerAnalysis> rows;
    for (const DeviceInfo& d : device_registry()) {
        auto extra = extra_braids.find(d.name);
        if (d.has_motion && extra == extra_braids.end()) {
            try {
                rows.push_back(analyze(d.name, opt));
            } catch (const Error& e) {
                PullerAnalysis row;
                row.name = d.name;
                row.rods_total = d.rods;
                row.rods_fixed = d.fixed;
                row.period_fraction = d.p;
                row.error = e.what();
                rows.push_back(std::move(row));
            }
        } else if (extra != extra_braids.end()) {
            rows.push_back(analyze_braid(d.name, extra->second, d.p, opt));
        }
    }
    return rows;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string to_csv(const std::vector<PullerAnalysis>& rows) {
    std::string out = "name,rods,fixed,polynomial,dilatation,p,entropy_per_period\n";
    for (const PullerAnalysis& r : rows) {
        out += r.name + ',' + std::to_string(r.rods_total) + ',' + std::to_string(r.rods_fixed) + ',';
        if (r.char_poly) out += r.char_poly->str();
        out += ',';
        if (r.ok()) {
            out += fmt_double(r.dilatation) + ',' + format_fraction(r.period_fraction) + ',' +
                   fmt_double(r.efficiency);
        } else {
            out += ",," ;
        }
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::ordered_json row_json(const PullerAnalysis& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["rods"] = r.rods_total;
    j["fixed"] = r.rods_fixed;
    if (!r.ok()) {
        j["error"] = r.error;
        return j;
    }
    if (r.braid) {
        j["braid"] = r.braid->str();
        j["strands"] = r.braid->n_strands();
    }
    if (r.char_poly) j["polynomial"] = r.char_poly->str();
    j["dilatation"] = r.dilatation;
    j["p"] = format_fraction(r.period_fraction);
    j["entropy_per_period"] = r.efficiency;
    j["entropy"] = nlohmann::ordered_json{{"value", r.entropy.value},
                                          {"iterations", r.entropy.iterations},
                                          {"converged", r.entropy.converged},
                                          {"residual", r.entropy.residual}};
    if (!r.flags.empty()) j["flags"] = r.flags;
    return j;
}

}  // namespace

std::string to_json(const std::vector<PullerAnalysis>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const PullerAnalysis& r : rows) arr.push_back(row_json(r));
    return arr.dump(2) + "\n";
}

std::string to_json(const PullerAnalysis& row) { return row_json(row).dump(2) + "\n"; }

// Closed form of the dominant root of x^2 - Tx + 1, when one is well known.
std::string quadratic_closed_form(const IntPolynomial& q) {
    if (q.degree() != 2 || q[2] != 1 || q[0] != 1) return "";
    Int t = -q[1];
    if (t == 3) return "phi^2";
    if (t == 6) return "chi^2";
    if (t == 4) return "2+sqrt(3)";
    if (t == 18) return "phi^6";
    if (t > 2) return "(" + t.get_str() + "+sqrt(" + Int(t * t - 4).get_str() + "))/2";
    return "";
}

std::string to_text(const PullerAnalysis& r) {
    std::string out = r.name + ": ";
    if (!r.ok()) return out + "error: " + r.error + "\n";
    out += std::to_string(r.rods_total) + " rods";
    if (r.rods_fixed) out += " (" + std::to_string(r.rods_fixed) + " fixed)";
    out += "\n";
    if (r.braid) out += "  braid   : " + (r.braid->length() ? r.braid->str() : std::string("(empty)")) + "\n";
    if (r.char_poly) out += "  polynomial: " + r.char_poly->str() + "\n";
    out += "  dilatation: " + fmt_double(r.dilatation);
    if (r.char_poly) {
        std::string cf = quadratic_closed_form(*r.char_poly);
        if (!cf.empty()) out += " = " + cf;
    }
    out += "\n";
    out += "  p         : " + format_fraction(r.period_fraction) + "\n";
    out += "  entropy/period: " + fmt_double(r.efficiency) + "\n";
    char ebuf[128];
    std::snprintf(ebuf, sizeof ebuf, "  loop growth: %.8f (%s after %d iterations)\n",
                  r.entropy.value, r.entropy.converged ? "converged" : "not converged",
                  r.entropy.iterations);
    out += ebuf;
    for (const std::string& f : r.flags) out += "  note: " + f + "\n";
    return out;
}

std::map<std::string, BraidWord> parse_extra_braids(const std::string& json_text) {
    std::map<std::string, BraidWord> out;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
        for (auto it = j.begin(); it != j.end(); ++it) {
            int strands = it.value().at("strands").get<int>();
            std::string word = it.value().at("word").get<std::string>();
            out.emplace(it.key(), BraidWord::parse(strands, word));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad extra-braids file: ") + e.what());
    }
    return out;
}

}  // namespace taffy
