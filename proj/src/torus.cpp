#include "taffy/torus.hpp"

#include <cmath>
#include <map>
#include <set>

#include "taffy/errors.hpp"

namespace taffy {

std::string TorusPoint::str() const {
    return "(" + format_fraction(x) + "," + format_fraction(y) + ")";
}

TorusMap::TorusMap(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1)
        throw NotUnimodular("matrix [" + a_.get_str() + " " + b_.get_str() + "; " +
                            c_.get_str() + " " + d_.get_str() + "] has determinant != 1");
}

TorusPoint TorusMap::apply(const TorusPoint& p) const {
    return TorusPoint(Rat(a_) * p.x + Rat(b_) * p.y, Rat(c_) * p.x + Rat(d_) * p.y);
}

TorusMap TorusMap::operator*(const TorusMap& r) const {
    return TorusMap(a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_,
                    c_ * r.a_ + d_ * r.c_, c_ * r.b_ + d_ * r.d_);
}

TorusMap TorusMap::inverse() const { return TorusMap(d_, -b_, -c_, a_); }

TorusMap TorusMap::pow(unsigned n) const {
    TorusMap acc(1, 0, 0, 1);
    TorusMap base = *this;
    while (n) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

TorusPoint involution(const TorusPoint& p) { return TorusPoint(-p.x, -p.y); }

const std::array<TorusPoint, 4>& half_points() {
    static const std::array<TorusPoint, 4> w = {
        TorusPoint(Rat(0), Rat(0)),
        TorusPoint(Rat(1, 2), Rat(0)),
        TorusPoint(Rat(1, 2), Rat(1, 2)),
        TorusPoint(Rat(0), Rat(1, 2)),
    };
    return w;
}

Dilatation dilatation(const TorusMap& m) {
    Int tr = m.trace();
    Int atr = abs(tr);
    if (atr <= 2)
        throw NotAnosov("|trace| = " + atr.get_str() + " <= 2: no exponential stretching");
    Int disc = tr * tr - 4;
    double t = mpz_get_d(atr.get_mpz_t());
    double value = (t + std::sqrt(t * t - 4.0)) / 2.0;
    return Dilatation{value, tr, disc};
}

std::array<int, 4> half_point_permutation(const TorusMap& m) {
    const auto& w = half_points();
    std::array<int, 4> perm{};
    for (int i = 0; i < 4; ++i) {
        TorusPoint im = m.apply(w[static_cast<std::size_t>(i)]);
        int j = 0;
        while (!(im == w[static_cast<std::size_t>(j)])) ++j;  // image is always a half point
        perm[static_cast<std::size_t>(i)] = j;
    }
    return perm;
}

namespace {

struct Mat2 {
    Int a, b, c, d;
};

// Smith normal form of A: returns diag(s1, s2) and the right transform V with
// U A V = diag. Only V is needed to enumerate solutions of A x = 0 mod 1.
void smith2(Mat2 A, Int& s1, Int& s2, Mat2& V) {
    V = {1, 0, 0, 1};
    auto swap_cols = [&](Mat2& M) {
        std::swap(M.a, M.b);
        std::swap(M.c, M.d);
    };
    auto add_col = [&](Mat2& M, const Int& f) {  // col2 += f * col1
        M.b += f * M.a;
        M.d += f * M.c;
    };
    auto add_col0 = [&](Mat2& M, const Int& f) {  // col1 += f * col2
        M.a += f * M.b;
        M.c += f * M.d;
    };
    // Clear A.b with column ops (mirrored into V), A.c with row ops (untracked).
    for (int guard = 0; guard < 256; ++guard) {
        if (A.a == 0 && (A.b != 0 || A.c != 0)) {
            if (A.b != 0) {
                swap_cols(A);
                swap_cols(V);
            } else {
                std::swap(A.a, A.c);
                std::swap(A.b, A.d);
            }
            continue;
        }
        if (A.b != 0) {
            Int q = A.b / A.a;
            add_col(A, -q);
            add_col(V, -q);
            if (A.b != 0) {
                swap_cols(A);
                swap_cols(V);
            }
            continue;
        }
        if (A.c != 0) {
            Int q = A.c / A.a;
            A.c -= q * A.a;
            A.d -= q * A.b;
            if (A.c != 0) {
                std::swap(A.a, A.c);
                std::swap(A.b, A.d);
            }
            continue;
        }
        break;
    }
    // Divisibility s1 | s2 is irrelevant for enumeration; sizes are what matter.
    s1 = abs(A.a);
    s2 = abs(A.d);
    if (s1 == 0 || s2 == 0) throw Error("smith2: singular matrix");
    (void)add_col0;
}

}  // namespace

Int periodic_point_count(const TorusMap& m, unsigned n) {
    if (abs(m.trace()) <= 2) throw NotAnosov("periodic_point_count requires an Anosov map");
    TorusMap mn = m.pow(n);
    Int a = mn.a() - 1, b = mn.b(), c = mn.c(), d = mn.d() - 1;
    return abs(a * d - b * c);
}

std::vector<PeriodicOrbit> periodic_orbits(const TorusMap& m, unsigned n) {
    if (abs(m.trace()) <= 2) throw NotAnosov("periodic_orbits requires an Anosov map");
    if (n == 0) throw Error("periodic_orbits: period must be positive");
    TorusMap mn = m.pow(n);
    Mat2 A{mn.a() - 1, mn.b(), mn.c(), mn.d() - 1};
    Int s1, s2;
    Mat2 V{};
    smith2(A, s1, s2, V);

    // Points of period dividing n: x = V (i/s1, j/s2)^T mod 1.
    std::set<TorusPoint> pts;
    for (Int i(0); i < s1; ++i)
        for (Int j(0); j < s2; ++j) {
            Rat z1 = Rat(i) / Rat(s1);
            Rat z2 = Rat(j) / Rat(s2);
            pts.insert(TorusPoint(Rat(V.a) * z1 + Rat(V.b) * z2, Rat(V.c) * z1 + Rat(V.d) * z2));
        }

    std::vector<PeriodicOrbit> orbits;
    std::set<TorusPoint> seen;
    for (const TorusPoint& p : pts) {
        if (seen.count(p)) continue;
        std::vector<TorusPoint> cycle;
        TorusPoint q = p;
        unsigned k = 0;
        do {
            cycle.push_back(q);
            seen.insert(q);
            q = m.apply(q);
            ++k;
        } while (!(q == p) && k <= n);
        if (!(q == p)) continue;      // should not happen: p has period dividing n
        if (cycle.size() != n) continue;  // strictly smaller period
        orbits.push_back(PeriodicOrbit{n, std::move(cycle)});
    }
    return orbits;
}

TorusMap conjugate(const TorusMap& m, const TorusMap& g) { return g * m * g.inverse(); }

}  // namespace taffy
