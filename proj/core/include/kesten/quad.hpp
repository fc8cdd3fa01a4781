#ifndef KESTEN_QUAD_HPP
#define KESTEN_QUAD_HPP

#include <string>
#include <utility>

#include "kesten/rational.hpp"

namespace kesten {

// Defining relation of a two-dimensional commutative algebra over the
// rationals: theta^2 = p_coef*theta + q_coef.
struct QuadAlgebraSpec {
    Rational p_coef;
    Rational q_coef;
    std::string name;
};

// theta = sqrt(5)
const QuadAlgebraSpec& sqrt5Algebra();
// theta = e^{i pi/3}, a primitive sixth root of unity (theta^2 = theta - 1)
const QuadAlgebraSpec& zeta6Algebra();

inline bool sameAlgebra(const QuadAlgebraSpec& x, const QuadAlgebraSpec& y) {
    return x.p_coef == y.p_coef && x.q_coef == y.q_coef;
}

// Value a + b*theta over a fixed QuadAlgebraSpec.
class QuadElement {
public:
    QuadElement(Rational a, Rational b, const QuadAlgebraSpec& spec)
        : a_(std::move(a)), b_(std::move(b)), spec_(&spec) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const QuadAlgebraSpec& spec() const { return *spec_; }

    bool isRational() const { return b_.isZero(); }
    QuadElement zeroLike() const { return QuadElement(0, 0, *spec_); }
    QuadElement oneLike() const { return QuadElement(1, 0, *spec_); }

    QuadElement operator-() const { return QuadElement(-a_, -b_, *spec_); }

    friend QuadElement operator+(const QuadElement& x, const QuadElement& y) {
        requireSame(x, y, "+");
        return QuadElement(x.a_ + y.a_, x.b_ + y.b_, *x.spec_);
    }
    friend QuadElement operator-(const QuadElement& x, const QuadElement& y) {
        requireSame(x, y, "-");
        return QuadElement(x.a_ - y.a_, x.b_ - y.b_, *x.spec_);
    }
    friend QuadElement operator*(const QuadElement& x, const QuadElement& y);
    friend QuadElement operator*(const QuadElement& x, const Rational& c) {
        return QuadElement(x.a_ * c, x.b_ * c, *x.spec_);
    }
    friend QuadElement operator*(const Rational& c, const QuadElement& x) { return x * c; }
    friend QuadElement operator+(const QuadElement& x, const Rational& c) {
        return QuadElement(x.a_ + c, x.b_, *x.spec_);
    }
    friend QuadElement operator-(const QuadElement& x, const Rational& c) {
        return QuadElement(x.a_ - c, x.b_, *x.spec_);
    }

    friend bool operator==(const QuadElement& x, const QuadElement& y) {
        requireSame(x, y, "==");
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadElement& x, const QuadElement& y) { return !(x == y); }

    std::string toString() const;

private:
    static void requireSame(const QuadElement& x, const QuadElement& y, const char* op);

    Rational a_, b_;
    const QuadAlgebraSpec* spec_;
};

QuadElement quadMul(const QuadElement& x, const QuadElement& y);
QuadElement quadPow(const QuadElement& x, long n);

// For a + b*omega over the zeta6 algebra, with omega = 1/2 + i sqrt(3)/2:
// re = a + b/2 and imCoef = b, the coefficient of sqrt(3)/2 in the imaginary part.
std::pair<Rational, Rational> zeta6Parts(const QuadElement& x);

// (1 + sqrt 5)/2 in the sqrt5 algebra.
QuadElement goldenRatio();
// omega = e^{i pi/3} in the zeta6 algebra.
QuadElement omega();

} // namespace kesten

#endif
