#include "wsets/scalar.hpp"

namespace wsets {

namespace {

// pi to 241 fractional digits; enough slack for ~200 requested digits.
const char kPiDigits[] =
    "3"
    "1415926535897932384626433832795028841971693993751058209749445923078164"
    "0628620899862803482534211706798214808651328230664709384460955058223172"
    "5359408128481117450284102701938521105559644622948954930381964428810975"
    "6659334461284756482337867831653";

Rational pi_approx() {
    static const Rational value = [] {
        std::string digits(kPiDigits);
        BigInt num(digits);
        BigInt den = 1;
        for (size_t i = 1; i < digits.size(); ++i) den *= 10;
        return Rational(num, den);
    }();
    return value;
}

constexpr unsigned kPiFractionDigits = sizeof(kPiDigits) - 2;

}  // namespace

std::string to_decimal(const Scalar& x, const EpsBinding& b, unsigned digits) {
    if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
    if (digits > kPiFractionDigits - 20)
        throw std::invalid_argument("to_decimal: requested precision exceeds stored pi");
    Rational units = x.in_pi_units(b);
    Rational value = units * pi_approx();

    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Rational shifted = value * scale;
    BigInt rounded = rational_floor(shifted + Rational(1, 2));

    // The approximation error is |units| * 10^-kPiFractionDigits; the rounding is
    // correct unless shifted lies within that error of a half-integer boundary.
    if (units != 0) {
        Rational err = abs(units) * Rational(BigInt(scale), [&] {
            BigInt d = 1;
            for (unsigned i = 0; i < kPiFractionDigits; ++i) d *= 10;
            return d;
        }());
        Rational dist = abs(shifted + Rational(1, 2) - rounded);
        if (dist <= err || abs(1 - dist) <= err)
            throw std::runtime_error("to_decimal: value too close to a rounding boundary");
    }

    bool neg = rounded < 0;
    BigInt mag = neg ? BigInt(-rounded) : rounded;
    std::string s = mag.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

std::string format_scalar(const Scalar& x) {
    if (x.pi_coef == 0 && x.eps_coef == 0) return "0";
    std::string s;
    if (x.pi_coef != 0) s = format_rational(x.pi_coef) + "*pi";
    if (x.eps_coef != 0) {
        if (!s.empty() && x.eps_coef > 0) s += "+";
        s += format_rational(x.eps_coef) + "*eps";
    }
    return s;
}

Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (text == "0") return Scalar::zero();
    Scalar out = Scalar::zero();
    size_t pos = 0;
    while (pos < text.size()) {
        size_t start = pos;
        if (text[pos] == '+' || text[pos] == '-') ++pos;
        while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
        std::string term = text.substr(start, pos - start);
        if (term.empty() || term == "+" || term == "-")
            throw ParseError("malformed scalar term in '" + text + "'");
        bool is_eps = false;
        size_t star = term.find('*');
        if (star != std::string::npos) {
            std::string unit = term.substr(star + 1);
            if (unit == "eps") is_eps = true;
            else if (unit != "pi") throw ParseError("unknown unit '" + unit + "'");
            term = term.substr(0, star);
        }
        if (term[0] == '+') term.erase(0, 1);
        Rational coef = parse_rational(term);
        if (is_eps) out.eps_coef += coef; else out.pi_coef += coef;
    }
    return out;
}

}  // namespace wsets
