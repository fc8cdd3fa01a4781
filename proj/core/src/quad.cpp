#include "kesten/quad.hpp"

namespace kesten {

const QuadAlgebraSpec& sqrt5Algebra() {
    static const QuadAlgebraSpec s{Rational(0), Rational(5), "sqrt5"};
    return s;
}

const QuadAlgebraSpec& zeta6Algebra() {
    static const QuadAlgebraSpec s{Rational(1), Rational(-1), "zeta6"};
    return s;
}

void QuadElement::requireSame(const QuadElement& x, const QuadElement& y, const char* op) {
    if (!sameAlgebra(*x.spec_, *y.spec_))
        throw UsageError(std::string("mixed quadratic algebras in '") + op + "'");
}

QuadElement operator*(const QuadElement& x, const QuadElement& y) {
    QuadElement::requireSame(x, y, "*");
    const QuadAlgebraSpec& s = *x.spec_;
    Rational bb = x.b_ * y.b_;
    return QuadElement(x.a_ * y.a_ + bb * s.q_coef,
                       x.a_ * y.b_ + x.b_ * y.a_ + bb * s.p_coef, s);
}

QuadElement quadMul(const QuadElement& x, const QuadElement& y) {
    return x * y;
}

QuadElement quadPow(const QuadElement& x, long n) {
    if (n < 0) throw UsageError("quadPow exponent must be nonnegative");
    QuadElement acc = x.oneLike(), base = x;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::pair<Rational, Rational> zeta6Parts(const QuadElement& x) {
    if (!sameAlgebra(x.spec(), zeta6Algebra()))
        throw UsageError("zeta6Parts requires an element of the zeta6 algebra");
    return {x.a() + x.b() / Rational(2), x.b()};
}

QuadElement goldenRatio() {
    return QuadElement(Rational(1, 2), Rational(1, 2), sqrt5Algebra());
}

QuadElement omega() {
    return QuadElement(0, 1, zeta6Algebra());
}

std::string QuadElement::toString() const {
    return a_.toString() + " + (" + b_.toString() + ")*theta[" + spec_->name + "]";
}

} // namespace kesten
