#include "wsets/rational.hpp"

namespace wsets {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // tolerate the unicode minus sign U+2212
    if (s.rfind("\xe2\x88\x92", 0) == 0) s = "-" + s.substr(3);
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

BigInt rational_ceil(const Rational& r) { return -rational_floor(-r); }

long floor_log2(const Rational& q) {
    if (q <= 0) throw std::invalid_argument("floor_log2: nonpositive argument");
    long m = 0;
    Rational v = q;
    while (v < 1) { v *= 2; --m; }
    while (v >= 2) { v /= 2; ++m; }
    return m;
}

Rational pow2(long m) {
    BigInt p = BigInt(1) << static_cast<unsigned>(m < 0 ? -m : m);
    return m >= 0 ? Rational(p) : Rational(1, p);
}

}  // namespace wsets
