#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lmc {

// Exact arithmetic for all polyhedral computations. Facet verdicts are
// integer claims, so floating point is never used in rank computations.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p", "-p" and "p/q".
inline Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

} // namespace lmc
