#include "cwave/rational.hpp"

namespace cwave {

Rational parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw ConfigError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("malformed rational: '" + s + "'");
    }
}

std::string format_rational(const Rational& r) {
    const BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt floor_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

BigInt ceil_rational(const Rational& r) {
    return -floor_rational(-r);
}

}  // namespace cwave
