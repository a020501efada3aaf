#ifndef TAFFY_ERRORS_HPP
#define TAFFY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace taffy {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotUnimodular : Error { using Error::Error; };
struct NotAnosov : Error { using Error::Error; };
struct TooFewStrands : Error { using Error::Error; };
struct TooFewPunctures : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NoRootAboveOne : Error { using Error::Error; };
struct CoincidentRods : Error { using Error::Error; };
struct ProjectionDegenerate : Error { using Error::Error; };
struct UnknownDevice : Error { using Error::Error; };

}  // namespace taffy

#endif
