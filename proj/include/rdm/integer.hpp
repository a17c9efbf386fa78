#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rdm {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs(const Integer& x) { return ::abs(x); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "p/q" or "p". Throws std::invalid_argument on bad syntax or q = 0.
Rational parse_rational(const std::string& text);

}  // namespace rdm
