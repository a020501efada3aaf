#ifndef TAFFY_LOOP_HPP
#define TAFFY_LOOP_HPP

#include <vector>

#include "taffy/braid.hpp"
#include "taffy/rational.hpp"

namespace taffy {

/// Dynnikov coordinates (a_1..a_{n-2}, b_1..b_{n-2}) of a multiloop on the
/// n-punctured disk. Generator updates are exact piecewise-linear maps on
/// arbitrary-precision integers.
class LoopCoords {
  public:
    LoopCoords(int n_punctures, std::vector<Int> a, std::vector<Int> b);

    /// The standard essential seed multiloop: a = 0, b = -1 entrywise.
    static LoopCoords canonical(int n_punctures);  // throws TooFewPunctures

    int n_punctures() const { return n_; }
    const std::vector<Int>& a() const { return a_; }
    const std::vector<Int>& b() const { return b_; }

    /// Acts by sigma_k (k > 0) or its inverse (k < 0), in place.
    void apply_generator(int k);  // throws IndexOutOfRange
    LoopCoords applied(int k) const;
    void apply_braid(const BraidWord& b);  // strand count must match

    /// L1 norm of the coordinate vector; monotone proxy for intersection count.
    Int complexity() const;

    bool operator==(const LoopCoords& o) const {
        return n_ == o.n_ && a_ == o.a_ && b_ == o.b_;
    }

  private:
    int n_;
    std::vector<Int> a_, b_;
};

struct EntropyEstimate {
    double value = 0.0;  // log of complexity growth per braid application
    int iterations = 0;
    bool converged = false;
    double residual = 0.0;
};

/// Growth exponent of loop complexity under repeated application of b, from
/// the canonical seed, with Aitken acceleration of the log-increment
/// sequence. Converged means three successive raw estimates agree within tol
/// and a geometric tail bound confirms the limit is that close too.
/// Coordinate magnitudes grow like lambda^k, so k iterations cost O(k^2) in
/// total bits.
EntropyEstimate entropy(const BraidWord& b, double tol = 1e-4, int max_iter = 60);

}  // namespace taffy

#endif
