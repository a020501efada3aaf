#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "taffy/braid.hpp"
#include "taffy/errors.hpp"

using namespace taffy;

namespace {

std::mt19937 rng(777);

BraidWord random_word(int n, int len) {
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return BraidWord(n, std::move(letters));
}

IntMatrix lit2(long a, long b, long c, long d) {
    IntMatrix m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("word validation") {
    CHECK_THROWS_AS(BraidWord(1, {}), TooFewStrands);
    CHECK_THROWS_AS(BraidWord(3, {3}), IndexOutOfRange);
    CHECK_THROWS_AS(BraidWord(3, {0}), IndexOutOfRange);
    CHECK_NOTHROW(BraidWord(3, {1, -2, 2, -1}));
    CHECK_NOTHROW(BraidWord(2, {1, 1}));
}

TEST_CASE("parse and print") {
    BraidWord w = BraidWord::parse(3, " 1  -2\t1 ");
    CHECK(w.letters() == std::vector<int>{1, -2, 1});
    CHECK(w.str() == "1 -2 1");
    CHECK(BraidWord::parse(4, "").length() == 0);
    CHECK_THROWS_AS(BraidWord::parse(3, "1 x"), Error);
    CHECK_THROWS_AS(BraidWord::parse(3, "1 5"), IndexOutOfRange);
}

TEST_CASE("permutation examples") {
    // sigma_1 sigma_2^-1 on three strands: direct composition of the two
    // adjacent transpositions moves 1->3->2->1.
    auto p = permutation(BraidWord(3, {1, -2}));
    CHECK(p == std::vector<int>{2, 0, 1});
    CHECK(permutation(BraidWord(5, {})) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("permutation composition law") {
    for (int trial = 0; trial < 200; ++trial) {
        BraidWord b1 = random_word(5, 6), b2 = random_word(5, 6);
        auto p1 = permutation(b1), p2 = permutation(b2), p12 = permutation(b1 * b2);
        for (int i = 0; i < 5; ++i)
            CHECK(p12[static_cast<std::size_t>(i)] ==
                  p2[static_cast<std::size_t>(p1[static_cast<std::size_t>(i)])]);
    }
}

TEST_CASE("burau at -1: worked examples") {
    CHECK(burau_minus_one(BraidWord(3, {1, -2})) == lit2(2, 1, 1, 1));
    CHECK(burau_minus_one(BraidWord(3, {1, 1, -2, -2})) == lit2(5, 2, 2, 1));
    CHECK(burau_minus_one(BraidWord(3, {})) == IntMatrix::identity(2));
    CHECK_THROWS_AS(burau_minus_one(BraidWord(2, {1})), TooFewStrands);
}

TEST_CASE("burau homomorphism and inverse laws") {
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + trial % 4;
        BraidWord b1 = random_word(n, 5), b2 = random_word(n, 5);
        CHECK(burau_minus_one(b1 * b2) == burau_minus_one(b1) * burau_minus_one(b2));
        CHECK(burau_minus_one(b1 * b1.inverse()) ==
              IntMatrix::identity(static_cast<std::size_t>(n - 1)));
    }
}

TEST_CASE("burau images are unimodular") {
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + trial % 5;
        Int det = burau_minus_one(random_word(n, 8)).determinant();
        CHECK(abs(det) == 1);
    }
}

TEST_CASE("characteristic polynomial examples") {
    CHECK(char_poly(lit2(2, 1, 1, 1)).str() == "x^2-3x+1");
    CHECK(char_poly(lit2(5, 2, 2, 1)).str() == "x^2-6x+1");
    CHECK(char_poly(IntMatrix::identity(2)).str() == "x^2-2x+1");
}

TEST_CASE("characteristic polynomial is a conjugacy invariant") {
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + trial % 4;
        BraidWord b = random_word(n, 6), g = random_word(n, 4);
        IntMatrix m = burau_minus_one(b);
        IntMatrix conj = burau_minus_one(g) * m * burau_minus_one(g.inverse());
        CHECK(char_poly(m) == char_poly(conj));
    }
}

TEST_CASE("spectral radius bound examples") {
    CHECK(spectral_radius_bound(BraidWord(3, {1, -2})) ==
          doctest::Approx(2.618033989).epsilon(1e-9));
    CHECK(spectral_radius_bound(BraidWord(3, {1, 1, -2, -2})) ==
          doctest::Approx(5.828427125).epsilon(1e-9));
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> twist(static_cast<std::size_t>(k), 1);
        CHECK(spectral_radius_bound(BraidWord(3, twist)) == 1.0);
    }
}

TEST_CASE("spectral radius handles negative dominant eigenvalues") {
    // sigma_1^3 sigma_2^3 has Burau trace -7; the magnitude of the dominant
    // eigenvalue is the largest root of the reflected polynomial x^2-7x+1.
    BraidWord w(3, {1, 1, 1, 2, 2, 2});
    double expect = (7.0 + std::sqrt(45.0)) / 2.0;
    CHECK(spectral_radius_bound(w) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("essential quadratic factor") {
    auto q = essential_quadratic(BraidWord(3, {1, 1, -2, -2}));
    REQUIRE(q.has_value());
    CHECK(q->str() == "x^2-6x+1");
    CHECK(!essential_quadratic(BraidWord(3, {1, 1, 1})).has_value());
    // Negative-trace representative still reports the positive-trace form.
    auto qn = essential_quadratic(BraidWord(3, {1, 1, 1, 2, 2, 2}));
    REQUIRE(qn.has_value());
    CHECK(qn->str() == "x^2-7x+1");
}

TEST_CASE("inverse and power") {
    BraidWord w(4, {1, -2, 3});
    CHECK(w.inverse().letters() == std::vector<int>{-3, 2, -1});
    CHECK(w.power(2).length() == 6);
    CHECK(w.power(-1) == w.inverse());
    CHECK(w.power(0).length() == 0);
}
