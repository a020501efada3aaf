#ifndef TAFFY_TORUS_HPP
#define TAFFY_TORUS_HPP

#include <array>
#include <compare>
#include <vector>

#include "taffy/rational.hpp"

namespace taffy {

/// Point on the unit torus; coordinates kept canonical in [0, 1).
struct TorusPoint {
    Rat x, y;

    TorusPoint() : x(0), y(0) {}
    TorusPoint(const Rat& px, const Rat& py) : x(mod1(px)), y(mod1(py)) {}

    bool operator==(const TorusPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const TorusPoint& o) const { return x < o.x || (x == o.x && y < o.y); }

    std::string str() const;
};

/// Linear torus map x -> M x mod 1 with M = [a b; c d] in SL(2,Z).
class TorusMap {
  public:
    TorusMap(Int a, Int b, Int c, Int d);  // throws NotUnimodular unless det == 1

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }
    Int trace() const { return a_ + d_; }

    TorusPoint apply(const TorusPoint& p) const;
    TorusMap operator*(const TorusMap& rhs) const;  // composition (matrix product)
    TorusMap inverse() const;
    TorusMap pow(unsigned n) const;

    bool operator==(const TorusMap& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }

  private:
    Int a_, b_, c_, d_;
};

/// The hyperelliptic involution x -> -x mod 1.
TorusPoint involution(const TorusPoint& p);

/// The four fixed points of the involution: (0,0), (1/2,0), (1/2,1/2), (0,1/2).
const std::array<TorusPoint, 4>& half_points();

/// Spectral radius of an Anosov map plus the exact quadratic data behind it:
/// value = (|trace| + sqrt(trace^2 - 4)) / 2.
struct Dilatation {
    double value;
    Int trace;         // signed trace of the matrix
    Int discriminant;  // trace^2 - 4
};

Dilatation dilatation(const TorusMap& m);  // throws NotAnosov when |trace| <= 2

/// Induced permutation of the half-integer points; perm[i] = j means w_i -> w_j.
/// w_0 is always fixed.
std::array<int, 4> half_point_permutation(const TorusMap& m);

/// |det(M^n - I)|: the number of points whose period divides n.
Int periodic_point_count(const TorusMap& m, unsigned n);  // throws NotAnosov

struct PeriodicOrbit {
    unsigned period = 0;
    std::vector<TorusPoint> points;  // cyclically ordered under the map
};

/// All orbits of exact period n, exact rational points. The solution group of
/// (M^n - I)x = 0 mod 1 is enumerated through a Smith-normal-form reduction.
std::vector<PeriodicOrbit> periodic_orbits(const TorusMap& m, unsigned n);

/// g M g^{-1}.
TorusMap conjugate(const TorusMap& m, const TorusMap& g);

}  // namespace taffy

#endif
