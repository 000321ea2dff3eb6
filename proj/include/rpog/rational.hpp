#pragma once

#include <boost/rational.hpp>
#include <string>

namespace rpog {

// Exact rational arithmetic; no floating point anywhere in the symbolic
// layer.
using Rat = boost::rational<long long>;

inline bool rat_is_integer(const Rat& q) { return q.denominator() == 1; }

inline Rat rat_abs(const Rat& q) { return q < Rat(0) ? -q : q; }

std::string rat_text(const Rat& q);     // "3", "-1/2"
Rat rat_parse(const std::string& s);    // "p/q" or "p"

}  // namespace rpog
