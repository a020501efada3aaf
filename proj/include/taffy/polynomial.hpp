#ifndef TAFFY_POLYNOMIAL_HPP
#define TAFFY_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "taffy/rational.hpp"

namespace taffy {

/// Integer polynomial, constant term first, leading coefficient nonzero.
/// The zero polynomial has no coefficients.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;
    IntPolynomial derivative() const;

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Human form, e.g. "x^2-6x+1".
    std::string str() const;

  private:
    std::vector<Int> coeffs_;
};

/// Exact division over Z; returns nullopt when q does not divide p exactly.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& q);

/// Cauchy bound: every real root has magnitude < 1 + max|c_i| / |c_lead|.
Rat cauchy_bound(const IntPolynomial& p);

/// Largest real root greater than one, to within tol. Root isolation uses a
/// Sturm chain of the squarefree part and bisection; every sign decision is
/// made in exact rational arithmetic. Throws NoRootAboveOne when p has no
/// real root in (1, cauchy_bound].
double largest_root(const IntPolynomial& p, double tol);

}  // namespace taffy

#endif
