#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "sftlab/errors.hpp"

namespace sft {

// All metric values are exact; no floating point anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational_pow(const Rational& base, long long k) {
    Rational acc = 1;
    Rational b = k >= 0 ? base : Rational(1) / base;
    long long n = k >= 0 ? k : -k;
    for (long long i = 0; i < n; ++i) acc *= b;
    return acc;
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in rational '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational '" + text + "'");
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace sft
