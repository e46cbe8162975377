#pragma once

#include <gmpxx.h>

#include <string>

#include "filtcat/error.hpp"

namespace filtcat {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) as long as inputs are canonical, which rat_parse guarantees.
using Rat = mpq_class;

inline Rat rat_of(long n, long d = 1) {
    if (d == 0) throw ParseError("zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional sign, arbitrary precision.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

}  // namespace filtcat
