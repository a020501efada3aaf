#ifndef TAFFY_INT_MATRIX_HPP
#define TAFFY_INT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "taffy/polynomial.hpp"
#include "taffy/rational.hpp"

namespace taffy {

/// Square matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    explicit IntMatrix(std::size_t n) : n_(n), v_(n * n, Int(0)) {}
    static IntMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Int& at(std::size_t r, std::size_t c) { return v_[r * n_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return v_[r * n_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && v_ == o.v_; }

    Int trace() const;
    Int determinant() const;

  private:
    std::size_t n_;
    std::vector<Int> v_;
};

/// det(xI - M), computed entirely in integer arithmetic
/// (Faddeev-LeVerrier recursion; every division is exact).
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace taffy

#endif
