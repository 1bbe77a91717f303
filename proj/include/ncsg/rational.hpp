#ifndef NCSG_RATIONAL_HPP
#define NCSG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ncsg/error.hpp"

namespace ncsg {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational literal '" + s + "'");
    if (s.find('/') != std::string::npos && r.get_den() == 0)
        throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace ncsg

#endif  // NCSG_RATIONAL_HPP
