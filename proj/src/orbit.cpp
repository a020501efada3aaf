#include "taffy/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "taffy/errors.hpp"

namespace taffy {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

// Default projection axis angle; any generic direction works, this one keeps
// the t=0 ordering equal to the x-axis ordering for all bundled devices.
constexpr double kDefaultAxis = 0.0618;
constexpr double kAxisRetryStep = 0.2871;
constexpr int kAxisRetries = 5;

}  // namespace

bool RodTrajectory::is_fixed() const {
    return std::all_of(arms.begin(), arms.end(), [](const Arm& a) { return a.radius == 0.0; });
}

std::array<double, 2> RodTrajectory::position(double t) const {
    double x = center[0], y = center[1];
    for (const Arm& a : arms) {
        double ang = kTau * mpq_get_d(a.frequency.get_mpq_t()) * t + a.phase;
        x += a.radius * std::cos(ang);
        y += a.radius * std::sin(ang);
    }
    return {x, y};
}

void RodMotionSpec::validate() const {
    if (rods.size() < 2) throw Error("spec '" + name + "' needs at least 2 rods");
    if (period_fraction <= 0 || period_fraction > 1)
        throw Error("spec '" + name + "': period fraction must lie in (0, 1]");
    for (const RodTrajectory& r : rods)
        for (const Arm& a : r.arms)
            if (a.frequency.get_den() != 1)
                throw Error("spec '" + name + "': arm frequency " + format_fraction(a.frequency) +
                            " is not an integer number of turns per period");
    for (std::size_t i = 0; i < rods.size(); ++i)
        for (std::size_t j = i + 1; j < rods.size(); ++j) {
            auto p = rods[i].position(0.0), q = rods[j].position(0.0);
            if (std::hypot(p[0] - q[0], p[1] - q[1]) < 1e-9)
                throw CoincidentRods("spec '" + name + "': rods coincide at t=0");
        }
}

std::vector<std::array<double, 2>> positions(const RodMotionSpec& spec, double t) {
    std::vector<std::array<double, 2>> out;
    out.reserve(spec.rods.size());
    for (const RodTrajectory& r : spec.rods) out.push_back(r.position(t));
    return out;
}

namespace {

struct Projector {
    const RodMotionSpec* spec;
    double ux, uy;  // projection axis
    double vx, vy;  // perpendicular

    explicit Projector(const RodMotionSpec& s, double angle) : spec(&s) {
        ux = std::cos(angle);
        uy = std::sin(angle);
        vx = -uy;
        vy = ux;
    }
    // (along-axis, perpendicular) coordinates of every rod at time t
    void eval(double t, std::vector<double>& along, std::vector<double>& perp) const {
        const std::size_t n = spec->rods.size();
        along.resize(n);
        perp.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto p = spec->rods[i].position(t);
            along[i] = p[0] * ux + p[1] * uy;
            perp[i] = p[0] * vx + p[1] * vy;
        }
    }
    std::vector<int> order(double t) const {
        std::vector<double> along, perp;
        eval(t, along, perp);
        std::vector<int> o(along.size());
        for (std::size_t i = 0; i < o.size(); ++i) o[i] = static_cast<int>(i);
        std::sort(o.begin(), o.end(), [&](int a, int b) { return along[static_cast<std::size_t>(a)] < along[static_cast<std::size_t>(b)]; });
        return o;
    }
};

class Compiler {
  public:
    Compiler(const RodMotionSpec& spec, double duration, int samples, double axis)
        : proj_(spec, axis), n_(static_cast<int>(spec.rods.size())),
          duration_(duration), samples_(samples) {}

    std::vector<int> run() {
        double t_prev = 0.0;
        std::vector<int> o_prev = proj_.order(0.0);
        for (int s = 1; s <= samples_; ++s) {
            double t = duration_ * s / samples_;
            std::vector<int> o = proj_.order(t);
            if (o != o_prev) process(t_prev, t, o_prev, o, 0);
            t_prev = t;
            o_prev = std::move(o);
        }
        return word_;
    }

  private:
    // True when o1 differs from o0 by disjoint adjacent swaps; fills ks.
    bool disjoint_swaps(const std::vector<int>& o0, const std::vector<int>& o1,
                        std::vector<int>& ks) const {
        ks.clear();
        int i = 0;
        while (i < n_) {
            if (o0[static_cast<std::size_t>(i)] == o1[static_cast<std::size_t>(i)]) {
                ++i;
                continue;
            }
            if (i + 1 < n_ && o0[static_cast<std::size_t>(i)] == o1[static_cast<std::size_t>(i + 1)] &&
                o0[static_cast<std::size_t>(i + 1)] == o1[static_cast<std::size_t>(i)]) {
                ks.push_back(i);
                i += 2;
                continue;
            }
            return false;
        }
        return true;
    }

    void emit_crossing(int k, int rod_left, int rod_right, double t0, double t1) {
        // Locate the crossing time by bisection on the projected difference.
        std::vector<double> along, perp;
        double a = t0, b = t1;
        proj_.eval(a, along, perp);
        double fa = along[static_cast<std::size_t>(rod_left)] - along[static_cast<std::size_t>(rod_right)];
        for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (a + b);
            proj_.eval(mid, along, perp);
            double fm = along[static_cast<std::size_t>(rod_left)] - along[static_cast<std::size_t>(rod_right)];
            if ((fa < 0) == (fm < 0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        proj_.eval(0.5 * (a + b), along, perp);
        double d = perp[static_cast<std::size_t>(rod_left)] - perp[static_cast<std::size_t>(rod_right)];
        if (std::abs(d) < 1e-9)
            throw CoincidentRods("rods " + std::to_string(rod_left) + " and " +
                                 std::to_string(rod_right) + " coincide near t=" +
                                 std::to_string(0.5 * (a + b)));
        word_.push_back(d > 0 ? (k + 1) : -(k + 1));
    }

    void process(double t0, double t1, const std::vector<int>& o0, const std::vector<int>& o1,
                 int depth) {
        if (o0 == o1) return;
        std::vector<int> ks;
        if (disjoint_swaps(o0, o1, ks)) {
            for (int k : ks)
                emit_crossing(k, o0[static_cast<std::size_t>(k)], o0[static_cast<std::size_t>(k + 1)], t0, t1);
            return;
        }
        if (depth > 48 || (t1 - t0) < duration_ / 1048576.0 / 4096.0) {
            cluster(t0, t1, o0, o1);
            return;
        }
        double tm = 0.5 * (t0 + t1);
        std::vector<int> om = proj_.order(tm);
        process(t0, tm, o0, om, depth + 1);
        process(tm, t1, om, o1, depth + 1);
    }

    // Several rods meet the same projected point at one instant (symmetric
    // devices do this at every quarter turn). Decompose by bubble sort,
    // leftmost inverted pair first; each pair crosses exactly once.
    void cluster(double t0, double t1, const std::vector<int>& o0, const std::vector<int>& o1) {
        std::vector<double> along, perp;
        double tm = 0.5 * (t0 + t1);
        proj_.eval(tm, along, perp);
        std::vector<int> rank(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p) rank[static_cast<std::size_t>(o1[static_cast<std::size_t>(p)])] = p;
        std::vector<int> cur = o0;
        int guard = 0;
        while (cur != o1) {
            if (++guard > n_ * n_ + 4)
                throw ProjectionDegenerate("cannot decompose crossing cluster");
            for (int k = 0; k + 1 < n_; ++k) {
                int i = cur[static_cast<std::size_t>(k)], j = cur[static_cast<std::size_t>(k + 1)];
                if (rank[static_cast<std::size_t>(i)] > rank[static_cast<std::size_t>(j)]) {
                    double d = perp[static_cast<std::size_t>(i)] - perp[static_cast<std::size_t>(j)];
                    if (std::abs(d) < 1e-9)
                        throw CoincidentRods("coincident rods inside crossing cluster");
                    word_.push_back(d > 0 ? (k + 1) : -(k + 1));
                    std::swap(cur[static_cast<std::size_t>(k)], cur[static_cast<std::size_t>(k + 1)]);
                    break;
                }
            }
        }
    }

    Projector proj_;
    int n_;
    double duration_;
    int samples_;
    std::vector<int> word_;
};

}  // namespace

BraidWord compile_braid(const RodMotionSpec& spec, const Rat& duration, int samples) {
    spec.validate();
    if (duration <= 0 || duration > 1) throw Error("compile duration must lie in (0, 1]");
    if (samples < 16) samples = 16;
    // Sampling must out-resolve the fastest arm, or a pair of rods could
    // cross twice inside one step and leave the projected order unchanged.
    long max_freq = 1;
    for (const RodTrajectory& r : spec.rods)
        for (const Arm& a : r.arms)
            max_freq = std::max(max_freq, Int(abs(a.frequency.get_num())).get_si());
    samples = std::max(samples, static_cast<int>(96 * max_freq));
    double dur = mpq_get_d(duration.get_mpq_t());
    std::string last_error;
    bool all_coincident = true;
    for (int attempt = 0; attempt <= kAxisRetries; ++attempt) {
        double axis = kDefaultAxis + attempt * kAxisRetryStep;
        try {
            Compiler c(spec, dur, samples, axis);
            return BraidWord(static_cast<int>(spec.rods.size()), c.run());
        } catch (const CoincidentRods& e) {
            last_error = e.what();
        } catch (const ProjectionDegenerate& e) {
            last_error = e.what();
            all_coincident = false;
        }
    }
    // A coincidence reported from every axis is a genuine rod collision, not a
    // projection artifact.
    if (all_coincident)
        throw CoincidentRods("spec '" + spec.name + "': " + last_error);
    throw ProjectionDegenerate("spec '" + spec.name + "': ties persist after axis rotations (" +
                               last_error + ")");
}

RodMotionSpec corotating_frame(RodMotionSpec spec, long delta_turns) {
    for (RodTrajectory& r : spec.rods) {
        std::vector<Arm> arms = std::move(r.arms);
        r.arms.clear();
        double cx = r.center[0], cy = r.center[1];
        if (cx != 0.0 || cy != 0.0) {
            r.arms.push_back(Arm{std::hypot(cx, cy), Rat(-delta_turns), std::atan2(cy, cx)});
            r.center = {0.0, 0.0};
        }
        for (Arm a : arms) {
            a.frequency -= delta_turns;
            if (a.frequency != 0)
                r.arms.push_back(a);
            else  // arm frozen by the frame: fold into the center
                r.center = {r.center[0] + a.radius * std::cos(a.phase),
                            r.center[1] + a.radius * std::sin(a.phase)};
        }
    }
    spec.period_fraction = Rat(1);
    spec.notes += " (shifted rotating frame)";
    return spec;
}

namespace {

RodTrajectory fixed_rod(double x, double y) {
    RodTrajectory r;
    r.center = {x, y};
    return r;
}

RodTrajectory orbit_rod(double cx, double cy, double radius, long freq, double phase) {
    RodTrajectory r;
    r.center = {cx, cy};
    r.arms.push_back(Arm{radius, Rat(freq), phase});
    return r;
}

RodMotionSpec make_firchau() {
    RodMotionSpec s;
    s.name = "firchau";
    s.rods = {orbit_rod(0, 0, 0.5, 1, 0.0), orbit_rod(0, 0, 1.0, -1, kPi / 2)};
    s.period_fraction = Rat(1);
    s.notes = "two rods on concentric counter-rotating circles; no exponential growth";
    return s;
}

RodMotionSpec make_standard_3rod() {
    // Phases put the three rods on a common line at t = 0.
    RodMotionSpec s;
    s.name = "standard-3-rod";
    s.rods = {fixed_rod(0, 0),
              orbit_rod(-0.3, 0, 1.0, 1, 3 * kPi / 4),
              orbit_rod(0.3, 0, 1.0, -1, -kPi / 4)};
    s.period_fraction = Rat(1);
    s.notes = "two rods in counter-rotating orbits around a fixed center rod";
    return s;
}

RodMotionSpec make_nitz() {
    // Three rods sharing a figure-eight track, phased a third of a period
    // apart. The track is a Gerono lemniscate written as four rotating arms.
    RodMotionSpec s;
    s.name = "nitz";
    const double A = 1.0, B = 0.6;
    for (int i = 0; i < 3; ++i) {
        double ph = kTau * i / 3.0;
        RodTrajectory r;
        r.center = {0, 0};
        r.arms = {
            Arm{A / 2, Rat(2), -kPi / 2 + 2 * ph},
            Arm{A / 2, Rat(-2), kPi / 2 - 2 * ph},
            Arm{B / 2, Rat(1), ph},
            Arm{B / 2, Rat(-1), kPi - ph},
        };
        s.rods.push_back(std::move(r));
    }
    s.period_fraction = Rat(1, 3);
    s.notes = "figure-eight rod motion; rod set returns after a third of a period";
    return s;
}

RodMotionSpec make_standard_4rod() {
    RodMotionSpec s;
    s.name = "standard-4-rod";
    const double psi = 2.2;
    s.rods = {orbit_rod(-1, 0, 1.3, 1, 0.0), orbit_rod(-1, 0, 0.5, 1, kPi),
              orbit_rod(1, 0, 1.3, 1, psi), orbit_rod(1, 0, 0.5, 1, psi + kPi)};
    s.period_fraction = Rat(1);
    s.notes = "two co-rotating axles, a long and a short arm each; "
              "the short-arm orbits are not intertwined";
    return s;
}

RodMotionSpec make_six_rod() {
    RodMotionSpec s;
    s.name = "six-rod";
    const double psi = 0.9;
    s.rods = {fixed_rod(-1, 0), fixed_rod(1, 0),
              orbit_rod(-1, 0, 1.3, 1, 0.0), orbit_rod(-1, 0, 1.3, 1, kPi),
              orbit_rod(1, 0, 1.3, 1, psi), orbit_rod(1, 0, 1.3, 1, psi + kPi)};
    s.period_fraction = Rat(1, 2);
    s.notes = "equal-arm variant of the 4-rod design with the axles extended "
              "into fixed rods";
    return s;
}

RodMotionSpec make_mixograph() {
    // Co-rotating frame of the planetary pin mixer: the three bowl pins turn
    // together (+2/3 turn per sixth of a period) while each planet pin pair
    // spins about its fixed gear center (-1/2 turn per sixth). Gear ratios
    // are a modeling choice; these reproduce the co-rotating pattern whose
    // growth matches the known dilatation.
    RodMotionSpec s;
    s.name = "mixograph";
    const double rho = 0.55, R = 0.5, r = 0.4, psi = 2.2;
    for (int k = 0; k < 3; ++k)
        s.rods.push_back(orbit_rod(0, 0, rho, 4, kPi / 2 + kTau * k / 3.0));
    s.rods.push_back(orbit_rod(-R, 0, r, -3, 0.0));
    s.rods.push_back(orbit_rod(-R, 0, r, -3, kPi));
    s.rods.push_back(orbit_rod(R, 0, r, -3, psi));
    s.rods.push_back(orbit_rod(R, 0, r, -3, psi + kPi));
    s.period_fraction = Rat(1, 6);
    s.notes = "planetary pin mixer in the co-rotating frame; bowl pins rotate "
              "as a set, planet pin pairs spin about fixed centers";
    return s;
}

}  // namespace

std::vector<RodMotionSpec> catalog() {
    return {make_firchau(), make_standard_3rod(), make_nitz(),
            make_standard_4rod(), make_six_rod(), make_mixograph()};
}

RodMotionSpec catalog_spec(const std::string& name) {
    for (RodMotionSpec& s : catalog())
        if (s.name == name) return s;
    throw UnknownDevice("no bundled device named '" + name + "'");
}

std::string spec_to_json(const RodMotionSpec& spec) {
    nlohmann::ordered_json j;
    j["name"] = spec.name;
    j["rods"] = nlohmann::ordered_json::array();
    for (const RodTrajectory& r : spec.rods) {
        nlohmann::ordered_json jr;
        jr["center"] = {r.center[0], r.center[1]};
        jr["arms"] = nlohmann::ordered_json::array();
        for (const Arm& a : r.arms) {
            nlohmann::ordered_json ja;
            ja["radius"] = a.radius;
            ja["frequency"] = format_fraction(a.frequency);
            ja["phase"] = a.phase;
            jr["arms"].push_back(ja);
        }
        j["rods"].push_back(jr);
    }
    j["period_fraction"] = format_fraction(spec.period_fraction);
    j["notes"] = spec.notes;
    return j.dump(2) + "\n";
}

RodMotionSpec spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad device spec JSON: ") + e.what());
    }
    try {
        RodMotionSpec spec;
        spec.name = j.at("name").get<std::string>();
        for (const auto& jr : j.at("rods")) {
            RodTrajectory r;
            r.center = {jr.at("center").at(0).get<double>(), jr.at("center").at(1).get<double>()};
            if (jr.contains("arms"))
                for (const auto& ja : jr.at("arms")) {
                    Arm a;
                    a.radius = ja.at("radius").get<double>();
                    a.frequency = parse_fraction(ja.at("frequency").get<std::string>());
                    a.phase = ja.at("phase").get<double>();
                    r.arms.push_back(a);
                }
            spec.rods.push_back(std::move(r));
        }
        spec.period_fraction = parse_fraction(j.at("period_fraction").get<std::string>());
        spec.notes = j.value("notes", std::string());
        spec.validate();
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad device spec JSON: ") + e.what());
    }
}

RodMotionSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return spec_from_json(buf.str());
}

}  // namespace taffy
