#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace caliber {

// Exact rational scalar used everywhere outside the floating-point optimizer.
using Rat = mpq_class;

// Parses "p", "-p", or "p/q" with a nonzero denominator. Throws
// std::invalid_argument on anything else.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("malformed rational literal: " + text);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal: " + text);
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rat& r) {
    return r.get_str();
}

// Every finite double is an exact binary rational; the conversion is lossless.
inline Rat rat_from_double(double x) {
    return Rat(x);
}

inline double rat_to_double(const Rat& r) {
    return r.get_d();
}

}  // namespace caliber
