#include "kesten/rational.hpp"

#include <cctype>
#include <ostream>

namespace kesten {

Rational Rational::fromString(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    auto valid = [](const std::string& part, bool sign_ok) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    if (!valid(num, true) || !valid(den, false))
        throw UsageError("malformed rational literal '" + s + "'");
    Integer n(num), d(den);
    if (d == 0) throw UsageError("zero denominator in rational literal '" + s + "'");
    return Rational(n, d);
}

std::string Rational::toString() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& a) {
    return a.sign() < 0 ? -a : a;
}

Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base.isZero()) throw DomainError("zero to a negative power");
        return Rational(1) / pow(base, -e);
    }
    Rational acc(1), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.toString();
}

} // namespace kesten
