#ifndef TAFFY_BRAID_HPP
#define TAFFY_BRAID_HPP

#include <optional>
#include <string>
#include <vector>

#include "taffy/int_matrix.hpp"

namespace taffy {

/// Braid word on n strands: letter k stands for the Artin generator sigma_k,
/// -k for its inverse, 1 <= |k| <= n-1. The empty word is the identity braid.
class BraidWord {
  public:
    BraidWord(int n_strands, std::vector<int> letters);

    /// Parses whitespace-separated signed generator indices: "1 -2 1".
    static BraidWord parse(int n_strands, const std::string& text);

    int n_strands() const { return n_strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    BraidWord inverse() const;
    BraidWord operator*(const BraidWord& rhs) const;  // concatenation: *this then rhs
    BraidWord power(int k) const;

    bool operator==(const BraidWord& o) const {
        return n_strands_ == o.n_strands_ && letters_ == o.letters_;
    }

    std::string str() const;

  private:
    int n_strands_;
    std::vector<int> letters_;
};

/// Net position permutation: perm[i] = final position of the strand that
/// starts at position i (0-based), letters applied left to right.
/// Composition law: permutation(b1 * b2) = permutation(b2) o permutation(b1).
std::vector<int> permutation(const BraidWord& b);

/// Reduced Burau representation specialized at -1: an (n-1)x(n-1) integer
/// matrix, product over letters left to right. Throws TooFewStrands for n < 3.
IntMatrix burau_minus_one(const BraidWord& b);

/// Largest-magnitude eigenvalue of the Burau matrix when it exceeds one,
/// else 1. A lower bound for the braid's dilatation; sharp on the quadratic
/// (torus-cover) devices. Negative dominant eigenvalues are handled through
/// the reflected polynomial.
double spectral_radius_bound(const BraidWord& b, double tol = 1e-12);

/// The certified quadratic factor x^2 - Tx + 1 of char_poly(burau_minus_one),
/// T >= 3, verified by exact division (either x^2 - Tx + 1 or its mirror
/// x^2 + Tx + 1 must divide). nullopt when no such factor exists.
std::optional<IntPolynomial> essential_quadratic(const BraidWord& b);

}  // namespace taffy

#endif
