#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gradcon {

// Exact rational scalar. All arithmetic in the library is over Q; there is
// no floating point anywhere.
using Q = mpq_class;

inline Q q_of(long num, long den = 1) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q", with optional sign.
inline Q parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return q;
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_str(const Q& q) { return q.get_str(); }

}  // namespace gradcon
