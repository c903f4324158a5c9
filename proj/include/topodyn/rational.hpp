// Exact rational arithmetic used everywhere in the library.
//
// Backed by boost::multiprecision::cpp_rational: arbitrary precision,
// always stored in lowest terms with positive denominator.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace topodyn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct BadRational : std::runtime_error {
    explicit BadRational(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rat(long long n, long long d = 1) {
    if (d == 0) throw BadRational("zero denominator");
    return Rational(Int(n), Int(d));
}

inline Int rat_num(const Rational& q) { return numerator(q); }
inline Int rat_den(const Rational& q) { return denominator(q); }

inline Int floor_rat(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

inline Int ceil_rat(const Rational& q) { return -floor_rat(-q); }

// q reduced mod 1 into [0,1).
inline Rational mod1(const Rational& q) { return q - Rational(floor_rat(q)); }

inline Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Parses "p/q", "-p/q" or "p". Whole-line match only.
inline Rational parse_rational(std::string_view s) {
    auto bad = [&] { throw BadRational("bad rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    std::string num, den;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') num += s[i++];
    size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { num += s[i++]; ++digits; }
    if (digits == 0) bad();
    if (i < s.size()) {
        if (s[i] != '/') bad();
        ++i;
        if (i >= s.size()) bad();
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') den += s[i++];
        if (i != s.size() || den.empty()) bad();
        Int d(den);
        if (d == 0) throw BadRational("zero denominator: '" + std::string(s) + "'");
        return Rational(Int(num), d);
    }
    return Rational(Int(num));
}

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace topodyn
