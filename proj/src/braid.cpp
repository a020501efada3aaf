#include "taffy/braid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "taffy/errors.hpp"

namespace taffy {

BraidWord::BraidWord(int n_strands, std::vector<int> letters)
    : n_strands_(n_strands), letters_(std::move(letters)) {
    if (n_strands_ < 2) throw TooFewStrands("braid needs at least 2 strands");
    for (int k : letters_) {
        if (k == 0 || std::abs(k) > n_strands_ - 1)
            throw IndexOutOfRange("letter " + std::to_string(k) + " out of range for " +
                                  std::to_string(n_strands_) + " strands");
    }
}

BraidWord BraidWord::parse(int n_strands, const std::string& text) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int k = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            letters.push_back(k);
        } catch (const std::exception&) {
            throw Error("cannot parse braid letter '" + tok + "'");
        }
    }
    return BraidWord(n_strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> rev(letters_.rbegin(), letters_.rend());
    for (int& k : rev) k = -k;
    return BraidWord(n_strands_, std::move(rev));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    if (n_strands_ != rhs.n_strands_) throw Error("cannot concatenate braids on different strand counts");
    std::vector<int> w = letters_;
    w.insert(w.end(), rhs.letters_.begin(), rhs.letters_.end());
    return BraidWord(n_strands_, std::move(w));
}

BraidWord BraidWord::power(int k) const {
    BraidWord base = k >= 0 ? *this : inverse();
    int reps = std::abs(k);
    std::vector<int> w;
    w.reserve(base.letters_.size() * static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i) w.insert(w.end(), base.letters_.begin(), base.letters_.end());
    return BraidWord(n_strands_, std::move(w));
}

std::string BraidWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

std::vector<int> permutation(const BraidWord& b) {
    const int n = b.n_strands();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
    for (int k : b.letters()) {
        int p = std::abs(k) - 1;  // positions p, p+1 swap
        auto a = std::find(pos.begin(), pos.end(), p);
        auto c = std::find(pos.begin(), pos.end(), p + 1);
        std::iter_swap(a, c);
    }
    return pos;
}

IntMatrix burau_minus_one(const BraidWord& b) {
    const int n = b.n_strands();
    if (n < 3) throw TooFewStrands("Burau at -1 needs at least 3 strands");
    const std::size_t dim = static_cast<std::size_t>(n - 1);
    auto generator = [&](int i, bool inverse) {
        // Row i of sigma_i's image is (-1, 1, 1) at columns (i-1, i, i+1),
        // clipped at the boundary; the inverse flips the off-diagonal signs.
        IntMatrix g = IntMatrix::identity(dim);
        std::size_t r = static_cast<std::size_t>(i - 1);
        int off = inverse ? 1 : -1;
        if (r >= 1) g.at(r, r - 1) = off;
        if (r + 1 < dim) g.at(r, r + 1) = -off;
        return g;
    };
    IntMatrix m = IntMatrix::identity(dim);
    for (int k : b.letters()) m = m * generator(std::abs(k), k < 0);
    return m;
}

namespace {

IntPolynomial reflect(const IntPolynomial& p) {  // p(-x)
    std::vector<Int> c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i % 2 == 1) c[i] = -c[i];
    return IntPolynomial(std::move(c));
}

}  // namespace

double spectral_radius_bound(const BraidWord& b, double tol) {
    IntPolynomial p = char_poly(burau_minus_one(b));
    double best = 1.0;
    for (const IntPolynomial& q : {p, reflect(p)}) {
        try {
            best = std::max(best, largest_root(q, tol));
        } catch (const NoRootAboveOne&) {
        }
    }
    return best;
}

std::optional<IntPolynomial> essential_quadratic(const BraidWord& b) {
    IntPolynomial p = char_poly(burau_minus_one(b));
    double lambda;
    try {
        lambda = spectral_radius_bound(b, 1e-12);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (lambda <= 1.0 + 1e-9) return std::nullopt;
    double traced = lambda + 1.0 / lambda;
    Int t(static_cast<long>(std::llround(traced)));
    if (std::abs(traced - mpz_get_d(t.get_mpz_t())) > 1e-6) return std::nullopt;
    IntPolynomial plus(std::vector<Int>{1, -t, 1});
    IntPolynomial minus(std::vector<Int>{1, t, 1});
    if (divide_exact(p, plus) || divide_exact(p, minus)) return plus;  // positive-trace normal form
    return std::nullopt;
}

}  // namespace taffy
