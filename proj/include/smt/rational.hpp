#pragma once

#include <gmpxx.h>

#include <string>

#include "smt/errors.hpp"

namespace smt {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical "p/q" string; integers print without the "/q" part.
inline std::string rat_to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational literal: '" + s + "'");
    }
}

}  // namespace smt
