#ifndef KESTEN_POLYNOMIAL_HPP
#define KESTEN_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "kesten/quad.hpp"
#include "kesten/rational.hpp"

namespace kesten {

inline bool isZeroValue(const Rational& x) { return x.isZero(); }
inline bool isZeroValue(const QuadElement& x) { return x.a().isZero() && x.b().isZero(); }
inline Rational zeroLike(const Rational&) { return Rational(0); }
inline Rational oneLike(const Rational&) { return Rational(1); }
inline QuadElement zeroLike(const QuadElement& x) { return x.zeroLike(); }
inline QuadElement oneLike(const QuadElement& x) { return x.oneLike(); }

// Dense univariate polynomial; coefficient of x^i at index i. Trailing zeros
// are trimmed eagerly and the zero polynomial is the empty list, so equality
// is plain coefficient comparison.
template <typename R>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    const std::vector<R>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

private:
    void trim() {
        while (!c_.empty() && isZeroValue(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

template <typename R>
Polynomial<R> polyAdd(const Polynomial<R>& a, const Polynomial<R>& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    R zero = zeroLike(ca[0]);
    std::vector<R> out;
    std::size_t n = std::max(ca.size(), cb.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        R x = i < ca.size() ? ca[i] : zero;
        if (i < cb.size()) x = x + cb[i];
        out.push_back(std::move(x));
    }
    return Polynomial<R>(std::move(out));
}

template <typename R>
Polynomial<R> polyMul(const Polynomial<R>& a, const Polynomial<R>& b) {
    if (a.isZero() || b.isZero()) return Polynomial<R>();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<R> out(ca.size() + cb.size() - 1, zeroLike(ca[0]));
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j)
            out[i + j] = out[i + j] + ca[i] * cb[j];
    return Polynomial<R>(std::move(out));
}

template <typename R>
Polynomial<R> polyScale(const Polynomial<R>& a, const R& c) {
    if (a.isZero() || isZeroValue(c)) return Polynomial<R>();
    std::vector<R> out;
    out.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) out.push_back(x * c);
    return Polynomial<R>(std::move(out));
}

template <typename R>
Polynomial<R> polyPow(const Polynomial<R>& a, long n) {
    if (n < 0) throw UsageError("polyPow exponent must be nonnegative");
    if (n == 0) {
        if (!a.isZero()) return Polynomial<R>({oneLike(a.coeffs()[0])});
        if constexpr (std::is_same_v<R, Rational>)
            return Polynomial<R>({Rational(1)});
        else
            throw UsageError("zeroth power of the zero polynomial needs a coefficient ring sample");
    }
    Polynomial<R> acc, base = a;
    bool started = false;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1) {
            acc = started ? polyMul(acc, base) : base;
            started = true;
        }
        e >>= 1;
        if (e) base = polyMul(base, base);
    }
    return acc;
}

template <typename R>
R polyEval(const Polynomial<R>& a, const R& v) {
    R acc = zeroLike(v);
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
    return acc;
}

// Rational coefficients embed into any quadratic algebra.
inline QuadElement polyEval(const Polynomial<Rational>& a, const QuadElement& v) {
    QuadElement acc = v.zeroLike();
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
    return acc;
}

template <typename R>
bool polyEq(const Polynomial<R>& a, const Polynomial<R>& b) {
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i])) return false;
    return true;
}

} // namespace kesten

#endif
