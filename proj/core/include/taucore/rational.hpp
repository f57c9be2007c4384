#ifndef TAUCORE_RATIONAL_HPP
#define TAUCORE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tauv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero for k < 0 or k > n.
inline Integer binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

/// "p/q" for non-integers, plain "p" otherwise.
inline std::string rational_to_string(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Decimal expansion rounded half-up to `digits` places. Presentation only;
/// every stored value stays exact.
inline std::string rational_to_decimal(const Rational& r, int digits = 12) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer scaled = num * scale;
    Integer q = scaled / den;
    Integer rem = scaled % den;
    if (2 * rem >= den) ++q;
    Integer ip = q / scale;
    Integer fp = q % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string s = ip.str() + "." + frac;
    if (neg && q != 0) s = "-" + s;
    return s;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

}  // namespace tauv

#endif
