#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace torigid {

// All arithmetic in this library is exact. cpp_rational keeps values reduced
// with positive denominator, which downstream code relies on for entry-wise
// equality.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVector = std::vector<Rat>;

/// Floor division (C++ integer division truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int gcd_of(const std::vector<Int>& values) {
    Int g = 0;
    for (const Int& v : values) g = boost::multiprecision::gcd(g, v);
    return g;
}

/// gcd of entries is 1 (the zero vector is not primitive).
inline bool is_primitive(const std::vector<Int>& v) { return gcd_of(v) == 1; }

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num);
    r /= Rat(den);
    return r;
}

/// Parse "p" or "p/q" in canonical form: q > 0 and gcd(p, q) = 1.
/// Throws TorigidError(ParseError) on anything else.
Rat parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rat& value);

}  // namespace torigid
