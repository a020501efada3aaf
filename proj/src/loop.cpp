#include "taffy/loop.hpp"

#include <algorithm>
#include <cmath>

#include "taffy/errors.hpp"

namespace taffy {

namespace {

Int pos(const Int& x) { return x > 0 ? x : Int(0); }
Int neg(const Int& x) { return x < 0 ? x : Int(0); }

}  // namespace

LoopCoords::LoopCoords(int n_punctures, std::vector<Int> a, std::vector<Int> b)
    : n_(n_punctures), a_(std::move(a)), b_(std::move(b)) {
    if (n_ < 3) throw TooFewPunctures("loop coordinates need at least 3 punctures");
    const std::size_t want = static_cast<std::size_t>(n_ - 2);
    if (a_.size() != want || b_.size() != want)
        throw Error("coordinate vectors must each have n-2 entries");
    bool all_zero = std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; }) &&
                    std::all_of(b_.begin(), b_.end(), [](const Int& v) { return v == 0; });
    if (all_zero) throw Error("the zero vector encodes no loop");
}

LoopCoords LoopCoords::canonical(int n_punctures) {
    if (n_punctures < 3) throw TooFewPunctures("need at least 3 punctures");
    const std::size_t m = static_cast<std::size_t>(n_punctures - 2);
    return LoopCoords(n_punctures, std::vector<Int>(m, Int(0)), std::vector<Int>(m, Int(-1)));
}

void LoopCoords::apply_generator(int k) {
    const int i = std::abs(k);
    if (k == 0 || i > n_ - 1) throw IndexOutOfRange("generator " + std::to_string(k));
    const bool inv = k < 0;
    const std::size_t m = a_.size();

    // The inverse generator is the conjugate of the positive one by the
    // vertical mirror a -> -a; only touched entries need flipping.
    auto flip = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j <= hi && j < m; ++j) a_[j] = -a_[j];
    };

    if (i == 1) {
        if (inv) flip(0, 0);
        Int &x = a_[0], &y = b_[0];
        Int nx = neg(y) + std::min(x, pos(y));
        Int ny = pos(y) - x;
        x = nx;
        y = ny;
        if (inv) flip(0, 0);
        return;
    }
    if (i == n_ - 1) {
        if (inv) flip(m - 1, m - 1);
        Int &x = a_[m - 1], &y = b_[m - 1];
        Int nx = pos(y) + std::max(x, neg(y));
        Int ny = neg(y) - x;
        x = nx;
        y = ny;
        if (inv) flip(m - 1, m - 1);
        return;
    }

    const std::size_t j = static_cast<std::size_t>(i - 2);  // left pair index
    if (inv) flip(j, j + 1);
    const Int A = a_[j], B = b_[j], C = a_[j + 1], D = b_[j + 1];
    Int t = pos(A - C + pos(D) - neg(B));
    a_[j] = A + pos(B) + pos(C - A + neg(B));
    b_[j] = D - t;
    a_[j + 1] = C + neg(D) + neg(A - C + pos(D));
    b_[j + 1] = B + t;
    if (inv) flip(j, j + 1);
}

LoopCoords LoopCoords::applied(int k) const {
    LoopCoords out = *this;
    out.apply_generator(k);
    return out;
}

void LoopCoords::apply_braid(const BraidWord& b) {
    if (b.n_strands() != n_)
        throw Error("braid strand count does not match puncture count");
    for (int k : b.letters()) apply_generator(k);
}

Int LoopCoords::complexity() const {
    Int s(0);
    for (const Int& v : a_) s += abs(v);
    for (const Int& v : b_) s += abs(v);
    return s;
}

EntropyEstimate entropy(const BraidWord& b, double tol, int max_iter) {
    if (b.n_strands() < 3) throw TooFewStrands("entropy needs at least 3 strands");
    if (tol <= 0) throw Error("entropy: tol must be positive");
    EntropyEstimate out;
    if (b.length() == 0) {
        out.converged = true;
        return out;
    }
    LoopCoords loop = LoopCoords::canonical(b.n_strands());
    double log_prev = log_int(loop.complexity());
    std::vector<double> est;
    est.reserve(static_cast<std::size_t>(max_iter));
    double accel = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        loop.apply_braid(b);
        double log_now = log_int(loop.complexity());
        est.push_back(log_now - log_prev);
        log_prev = log_now;
        out.iterations = it;
        const std::size_t k = est.size();
        accel = est.back();
        if (k >= 3) {
            double d1 = est[k - 1] - est[k - 2];
            double d0 = est[k - 2] - est[k - 3];
            // Aitken delta-squared on the last three raw estimates.
            double denom = d1 - d0;
            if (std::abs(denom) > 1e-15) {
                double a2 = est[k - 1] - d1 * d1 / denom;
                if (std::isfinite(a2)) accel = a2;
            }
            out.residual = std::abs(d1);
            // Successive estimates must agree within tol, and a conservative
            // geometric tail bound must show the limit is within ~tol too;
            // plateau detection alone stops early when the error mode decays
            // slowly.
            if (std::abs(d1) < tol && std::abs(d0) < tol) {
                double r = 0.0;
                if (std::abs(d0) > 0.0) r = std::abs(d1) / std::abs(d0);
                if (std::abs(d1) > 0.0 && std::abs(d0) == 0.0) r = 0.97;
                if (k >= 4 && std::abs(d0) > 0.0) {
                    double dm = est[k - 3] - est[k - 4];
                    if (std::abs(dm) > 0.0) r = std::max(r, std::abs(d0) / std::abs(dm));
                }
                r = std::min(r, 0.97);
                double tail = std::abs(d1) * r / (1.0 - r);
                if (tail <= 1.4 * tol) {
                    out.converged = true;
                    if (std::abs(accel - est.back()) > tail + tol) accel = est.back();
                    out.value = std::max(0.0, accel);
                    return out;
                }
            }
        }
    }
    out.residual = est.size() >= 2 ? std::abs(est[est.size() - 1] - est[est.size() - 2]) : 0.0;
    out.value = std::max(0.0, accel);
    return out;
}

}  // namespace taffy
