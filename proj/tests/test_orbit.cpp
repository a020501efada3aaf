#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "taffy/errors.hpp"
#include "taffy/loop.hpp"
#include "taffy/orbit.hpp"

using namespace taffy;

namespace {

double padded_entropy(const BraidWord& b, double tol = 1e-6, int iters = 240) {
    BraidWord w = b.n_strands() >= 3 ? b : BraidWord(3, b.letters());
    return entropy(w, tol, iters).value;
}

std::string quad_of(const BraidWord& b) {
    auto q = essential_quadratic(b);
    return q ? q->str() : "";
}

// Rotating the whole device by an angle is the same as compiling against a
// rotated projection axis.
RodMotionSpec rotated(RodMotionSpec spec, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    for (RodTrajectory& r : spec.rods) {
        double x = r.center[0], y = r.center[1];
        r.center = {c * x - s * y, s * x + c * y};
        for (Arm& a : r.arms) a.phase += angle;
    }
    return spec;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
    std::vector<int> lens;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

}  // namespace

TEST_CASE("catalog shape") {
    auto specs = catalog();
    CHECK(specs.size() >= 6);
    auto find = [&](const std::string& n) -> const RodMotionSpec& {
        for (const auto& s : specs)
            if (s.name == n) return s;
        throw std::runtime_error("missing " + n);
    };
    auto fixed_count = [](const RodMotionSpec& s) {
        return std::count_if(s.rods.begin(), s.rods.end(),
                             [](const RodTrajectory& r) { return r.is_fixed(); });
    };
    CHECK(find("standard-4-rod").rods.size() == 4);
    CHECK(fixed_count(find("standard-4-rod")) == 0);
    CHECK(find("six-rod").rods.size() == 6);
    CHECK(fixed_count(find("six-rod")) == 2);
    CHECK(find("mixograph").rods.size() == 7);
    CHECK(find("firchau").rods.size() == 2);
    CHECK(find("standard-3-rod").rods.size() == 3);
    CHECK(fixed_count(find("standard-3-rod")) == 1);
    CHECK(find("nitz").period_fraction == Rat(1, 3));
    CHECK_THROWS_AS(catalog_spec("no-such-device"), UnknownDevice);
}

TEST_CASE("standard 3-rod starts from three collinear distinct points") {
    auto pts = positions(catalog_spec("standard-3-rod"), 0.0);
    REQUIRE(pts.size() == 3);
    double cross = (pts[1][0] - pts[0][0]) * (pts[2][1] - pts[0][1]) -
                   (pts[2][0] - pts[0][0]) * (pts[1][1] - pts[0][1]);
    CHECK(std::abs(cross) < 1e-9);
    CHECK(std::hypot(pts[1][0] - pts[2][0], pts[1][1] - pts[2][1]) > 0.1);
}

TEST_CASE("rod positions return after one full period") {
    for (const RodMotionSpec& spec : catalog()) {
        auto p0 = positions(spec, 0.0);
        auto p1 = positions(spec, 1.0);
        for (std::size_t i = 0; i < p0.size(); ++i) {
            CHECK(p0[i][0] == doctest::Approx(p1[i][0]).epsilon(1e-12));
            CHECK(p0[i][1] == doctest::Approx(p1[i][1]).epsilon(1e-12));
        }
    }
}

TEST_CASE("six-rod half period exchanges rods 1<->4 and 3<->6") {
    RodMotionSpec six = catalog_spec("six-rod");
    auto p0 = positions(six, 0.0);
    auto ph = positions(six, 0.5);
    auto close = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
        return std::hypot(a[0] - b[0], a[1] - b[1]) < 1e-9;
    };
    // Ranked along x at t=0: [pin, axle, pin, pin, axle, pin].
    std::vector<int> byx(6);
    for (int i = 0; i < 6; ++i) byx[static_cast<std::size_t>(i)] = i;
    std::sort(byx.begin(), byx.end(), [&](int a, int b) { return p0[static_cast<std::size_t>(a)][0] < p0[static_cast<std::size_t>(b)][0]; });
    std::array<int, 6> expect{3, 1, 5, 0, 4, 2};  // image position (0-based) of rank i
    for (int rank = 0; rank < 6; ++rank) {
        int rod = byx[static_cast<std::size_t>(rank)];
        // Where did this rod land at half period, measured in t=0 ranks?
        int target = -1;
        for (int r2 = 0; r2 < 6; ++r2)
            if (close(ph[static_cast<std::size_t>(rod)], p0[static_cast<std::size_t>(byx[static_cast<std::size_t>(r2)])])) target = r2;
        REQUIRE(target >= 0);
        CHECK(target == expect[static_cast<std::size_t>(rank)]);
    }
}

TEST_CASE("firchau compiles to a zero-entropy braid") {
    BraidWord w = compile_braid(catalog_spec("firchau"), Rat(1));
    CHECK(padded_entropy(w) < 0.01);
}

TEST_CASE("nitz third-period braid carries the golden-ratio polynomial") {
    BraidWord w = compile_braid(catalog_spec("nitz"), Rat(1, 3));
    CHECK(char_poly(burau_minus_one(w)).str() == "x^2-3x+1");
}

TEST_CASE("standard 3-rod full-period braid carries the silver-ratio polynomial") {
    BraidWord w = compile_braid(catalog_spec("standard-3-rod"), Rat(1));
    CHECK(char_poly(burau_minus_one(w)).str() == "x^2-6x+1");
}

TEST_CASE("standard 4-rod matches the 3-rod polynomial") {
    BraidWord w = compile_braid(catalog_spec("standard-4-rod"), Rat(1));
    CHECK(quad_of(w) == "x^2-6x+1");
    CHECK(permutation(w) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("six-rod half-period braid: permutation and growth") {
    BraidWord w = compile_braid(catalog_spec("six-rod"), Rat(1, 2));
    CHECK(permutation(w) == std::vector<int>{3, 1, 5, 0, 4, 2});
    CHECK(quad_of(w) == "x^2-4x+1");
    CHECK(std::abs(padded_entropy(w) - std::log(2.0 + std::sqrt(3.0))) < 1e-3);
}

TEST_CASE("sampling density does not change the compiled braid type") {
    for (const RodMotionSpec& spec : catalog()) {
        BraidWord w1 = compile_braid(spec, spec.period_fraction, 512);
        BraidWord w2 = compile_braid(spec, spec.period_fraction, 1024);
        BraidWord w3 = compile_braid(spec, spec.period_fraction, 2048);
        CHECK(char_poly(burau_minus_one(w1.n_strands() >= 3 ? w1 : BraidWord(3, w1.letters()))) ==
              char_poly(burau_minus_one(w2.n_strands() >= 3 ? w2 : BraidWord(3, w2.letters()))));
        CHECK(permutation(w1) == permutation(w2));
        CHECK(permutation(w2) == permutation(w3));
    }
}

TEST_CASE("rotated projection yields a conjugate braid") {
    for (const RodMotionSpec& spec : catalog()) {
        BraidWord w1 = compile_braid(spec, spec.period_fraction, 1024);
        BraidWord w2 = compile_braid(rotated(spec, 0.83), spec.period_fraction, 1024);
        CHECK(cycle_type(permutation(w1)) == cycle_type(permutation(w2)));
        double tol = 1e-5;
        CHECK(std::abs(padded_entropy(w1, tol) - padded_entropy(w2, tol)) < 3 * tol);
    }
}

TEST_CASE("segment closure: full-period entropy is (1/p) times the segment entropy") {
    for (const std::string& name : {"nitz", "six-rod", "mixograph"}) {
        RodMotionSpec spec = catalog_spec(name);
        BraidWord seg = compile_braid(spec, spec.period_fraction, 1024);
        BraidWord full = compile_braid(spec, Rat(1), 4096);
        double tol = 1e-5;
        double invp = mpq_get_d(Rat(1 / spec.period_fraction).get_mpq_t());
        CHECK(std::abs(padded_entropy(full, tol) - invp * padded_entropy(seg, tol)) < 3e-4);
    }
}

TEST_CASE("a uniformly rotating frame does not change full-period growth") {
    for (long delta : {1L, -2L}) {
        RodMotionSpec mix = catalog_spec("mixograph");
        BraidWord base = compile_braid(mix, Rat(1), 4096);
        BraidWord shifted = compile_braid(corotating_frame(mix, delta), Rat(1), 4096);
        double tol = 1e-5;
        CHECK(std::abs(padded_entropy(base, tol) - padded_entropy(shifted, tol)) < 3 * tol);
    }
    // Frame shifts compose the braid with central full twists, which flip the
    // sign of the Burau matrix; the sign-normalized quadratic factor is the
    // invariant that survives.
    RodMotionSpec nitz = catalog_spec("nitz");
    BraidWord base = compile_braid(nitz, Rat(1), 2048);
    BraidWord shifted = compile_braid(corotating_frame(nitz, 1), Rat(1), 2048);
    auto q1 = essential_quadratic(base), q2 = essential_quadratic(shifted);
    REQUIRE(q1.has_value());
    REQUIRE(q2.has_value());
    CHECK(*q1 == *q2);
}

TEST_CASE("spec validation") {
    RodMotionSpec bad;
    bad.name = "bad";
    RodTrajectory r;
    r.center = {0, 0};
    bad.rods = {r, r};
    bad.period_fraction = Rat(1);
    CHECK_THROWS_AS(bad.validate(), CoincidentRods);

    RodMotionSpec frac = catalog_spec("nitz");
    frac.rods[0].arms[0].frequency = Rat(1, 2);
    CHECK_THROWS_AS(frac.validate(), Error);
}

TEST_CASE("rods that truly collide are reported as coincident") {
    // Counter-rotating rods on the same circle meet at t = 1/8 regardless of
    // the projection axis.
    RodMotionSpec s;
    s.name = "collider";
    RodTrajectory a, b;
    a.center = {0, 0};
    a.arms = {Arm{1.0, Rat(1), 0.0}};
    b.center = {0, 0};
    b.arms = {Arm{1.0, Rat(-1), std::numbers::pi / 2}};
    s.rods = {a, b};
    s.period_fraction = Rat(1);
    CHECK_THROWS_AS(compile_braid(s, Rat(1)), CoincidentRods);
}

TEST_CASE("device spec files round-trip through JSON") {
    for (const RodMotionSpec& spec : catalog()) {
        RodMotionSpec back = spec_from_json(spec_to_json(spec));
        CHECK(back.name == spec.name);
        CHECK(back.period_fraction == spec.period_fraction);
        REQUIRE(back.rods.size() == spec.rods.size());
        for (std::size_t i = 0; i < spec.rods.size(); ++i) {
            CHECK(back.rods[i].center == spec.rods[i].center);
            REQUIRE(back.rods[i].arms.size() == spec.rods[i].arms.size());
            for (std::size_t j = 0; j < spec.rods[i].arms.size(); ++j) {
                CHECK(back.rods[i].arms[j].radius == spec.rods[i].arms[j].radius);
                CHECK(back.rods[i].arms[j].frequency == spec.rods[i].arms[j].frequency);
                CHECK(back.rods[i].arms[j].phase == spec.rods[i].arms[j].phase);
            }
        }
    }
    CHECK_THROWS_AS(spec_from_json("{"), Error);
    CHECK_THROWS_AS(spec_from_json("{\"name\":\"x\"}"), Error);
}

TEST_CASE("bundled spec files match the built-in catalog") {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(TAFFY_DATA_DIR) / "devices";
    REQUIRE(fs::exists(dir));
    int seen = 0;
    for (const RodMotionSpec& spec : catalog()) {
        fs::path f = dir / (spec.name + ".json");
        REQUIRE(fs::exists(f));
        std::ifstream in(f);
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == spec_to_json(spec));
        ++seen;
    }
    CHECK(seen >= 6);
}
