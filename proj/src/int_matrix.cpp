#include "taffy/int_matrix.hpp"

namespace taffy {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    IntMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t k = 0; k < n_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < n_; ++c) out.at(r, c) += a * rhs.at(k, c);
        }
    return out;
}

Int IntMatrix::trace() const {
    Int t(0);
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Int IntMatrix::determinant() const {
    IntPolynomial p = char_poly(*this);
    // det(xI - M) at x = 0 is (-1)^n det(M).
    Int c0 = p.eval_int(0);
    return (n_ % 2 == 0) ? c0 : Int(-c0);
}

IntPolynomial char_poly(const IntMatrix& m) {
    const std::size_t n = m.size();
    // Coefficients of det(xI - M) = x^n + c_1 x^{n-1} + ... + c_n.
    std::vector<Int> c(n + 1);
    c[0] = 1;
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Int ck = -mk.trace();
        mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
        c[k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    std::vector<Int> coeffs(n + 1);  // constant term first
    for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = c[k];
    return IntPolynomial(std::move(coeffs));
}

}  // namespace taffy
