#include "taffy/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "taffy/errors.hpp"

namespace taffy {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Int IntPolynomial::eval_int(const Int& x) const {
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<Int> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = abs(c);
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        bool unit = (a == 1);
        if (i == 0 || !unit) out += a.get_str();
        if (i >= 1) {
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return IntPolynomial();
    if (p.degree() < q.degree()) return std::nullopt;
    std::vector<Int> rem = p.coeffs();
    std::vector<Int> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1);
    const auto& qc = q.coeffs();
    for (int k = p.degree() - q.degree(); k >= 0; --k) {
        Int& lead = rem[static_cast<std::size_t>(k + q.degree())];
        if (!mpz_divisible_p(lead.get_mpz_t(), qc.back().get_mpz_t())) return std::nullopt;
        Int f = lead / qc.back();
        quot[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= q.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= f * qc[static_cast<std::size_t>(i)];
    }
    for (const Int& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

Rat cauchy_bound(const IntPolynomial& p) {
    Int mx(0);
    for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, Int(abs(p[i])));
    Rat b = Rat(mx) / Rat(abs(p.coeffs().back()));
    return Rat(1) + b;
}

namespace {

// Dense rational polynomials, constant first trailing-trimmed; just enough for
// Sturm chains.
using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
    RatPoly out;
    for (const Int& c : p.coeffs()) out.emplace_back(c);
    return out;
}

RatPoly deriv(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return d;
}

Rat eval(const RatPoly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Remainder of a by b (b nonzero).
RatPoly rem(RatPoly a, const RatPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();  // leading term cancels exactly
        trim(a);
    }
    return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

RatPoly divide(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a;
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (r.size() >= b.size() && !r.empty()) {
        Rat f = r.back() / b.back();
        std::size_t off = r.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[off + i] -= f * b[i];
        trim(r);
    }
    return q;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p, deriv(p)};
    trim(chain[1]);
    while (!chain.back().empty() && chain.back().size() > 1) {
        RatPoly r = rem(chain[chain.size() - 2], chain.back());
        for (Rat& c : r) c = -c;
        trim(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int count = 0;
    int prev = 0;
    for (const RatPoly& q : chain) {
        if (q.empty()) continue;
        int s = sgn(eval(q, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

double largest_root(const IntPolynomial& p, double tol) {
    if (p.degree() < 1) throw NoRootAboveOne("constant polynomial has no roots");
    if (tol <= 0) throw Error("largest_root: tol must be positive");

    // Squarefree part; same real roots, all simple.
    RatPoly rp = to_rat(p);
    RatPoly g = poly_gcd(rp, deriv(rp));
    RatPoly sf = (g.size() > 1) ? divide(rp, g) : rp;

    Rat lo(1);
    // Strip a root at exactly one so the open interval (1, hi] is clean.
    while (eval(sf, lo) == 0) {
        RatPoly linear{Rat(-1), Rat(1)};  // x - 1
        sf = divide(sf, linear);
        if (sf.size() <= 1) throw NoRootAboveOne("no real root above one");
    }

    Rat hi = cauchy_bound(p) + 1;
    auto chain = sturm_chain(sf);
    auto count = [&](const Rat& a, const Rat& b) {
        return sign_variations(chain, a) - sign_variations(chain, b);
    };
    if (count(lo, hi) < 1) throw NoRootAboveOne("no real root above one");

    Rat width(tol);
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (eval(sf, mid) == 0) {  // landed exactly on a root; it is the largest iff none above
            if (count(mid, hi) == 0) {
                return mpq_get_d(Rat(mid).get_mpq_t());
            }
            lo = mid;
            continue;
        }
        if (count(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    Rat r = (lo + hi) / 2;
    return mpq_get_d(r.get_mpq_t());
}

}  // namespace taffy
