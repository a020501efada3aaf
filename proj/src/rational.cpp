#include "taffy/rational.hpp"

#include <cmath>
#include <cstddef>

#include "taffy/errors.hpp"

namespace taffy {

Rat mod1(const Rat& x) {
    Int num = x.get_num();
    Int den = x.get_den();  // den > 0 in canonical mpq form
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());  // floor remainder, in [0, den)
    Rat out(r, den);
    out.canonicalize();
    return out;
}

Rat parse_fraction(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rat q(Int(text.c_str()));
            return q;
        }
        Int num(text.substr(0, slash).c_str());
        Int den(text.substr(slash + 1).c_str());
        if (den == 0) throw Error("fraction with zero denominator: " + text);
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("malformed fraction: '" + text + "'");
    }
}

std::string format_fraction(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double log_int(const Int& n) {
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace taffy
