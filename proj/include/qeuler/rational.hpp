#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qeuler {

// Exact arithmetic used by the oracle layer. cpp_rational keeps gcd(num,den)=1
// and den > 0 canonically, which is the invariant the oracles rely on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rpow(Rational base, long long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rpow: 0 cannot be raised to a negative power");
        base = Rational(denominator(base), numerator(base));
        e = -e;
    }
    Rational acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline BigInt ipow(BigInt base, unsigned e) {
    BigInt acc = 1;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

// Accepts "3", "-7", "3/10", "-9/10"; surrounding whitespace is ignored.
inline Rational parse_rational(const std::string& raw) {
    auto b = raw.find_first_not_of(" \t");
    auto e = raw.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::domain_error("parse_rational: empty input");
    std::string s = raw.substr(b, e - b + 1);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("parse_rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::domain_error("parse_rational: malformed rational '" + raw + "'");
    }
}

}  // namespace qeuler
