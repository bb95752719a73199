#include "quaderint/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace quaderint {

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ContractError("non-finite double has no rational value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [1/2, 1)
    // 53 doublings make the mantissa integral.
    Integer num = Integer(std::ldexp(m, 53));
    long e = exp - 53;
    Rational result(num);
    return result * pow2(e);
}

Integer floor_rat(const Rational& r) {
    Integer num = numerator(r), den = denominator(r);
    Integer q = num / den;  // truncation toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

Integer ceil_rat(const Rational& r) { return -floor_rat(-r); }

Rational pow2(long e) {
    Integer p = Integer(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational rat_pow(const Rational& base, unsigned e) {
    Rational acc(1), b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<Integer> parse_integer(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
    return Integer(std::string(s));
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view s) {
    s = trim(s);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_integer(s);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto num = parse_integer(s.substr(0, slash));
    auto den = parse_integer(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
}

Rational parse_rational_or_throw(std::string_view s) {
    auto r = parse_rational(s);
    if (!r) throw ParseError("bad rational: '" + std::string(s) + "'");
    return *r;
}

std::string format_rational(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

}  // namespace quaderint
