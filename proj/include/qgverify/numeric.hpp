#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qgv {

using Int = mpz_class;
using Rational = mpq_class;

/// Thrown when a computation would exceed a configured size budget
/// (dense projection limit, symmetric-group averaging budget, ...).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Parses "n", "-n" or "p/q" into a canonical rational. Throws on q == 0
/// or malformed input.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    try {
        q = Rational(text, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in: '" + text + "'");
    q.canonicalize();
    return q;
}

/// "p/q" with q > 0, or plain "n" when the denominator is 1.
inline std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool fits_int64(const Int& z) {
    return z.fits_slong_p();  // LP64: long == int64_t
}

}  // namespace qgv
