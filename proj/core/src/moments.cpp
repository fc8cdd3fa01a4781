#include "kesten/moments.hpp"

#include "kesten/sequences.hpp"

namespace kesten {

std::string regimeName(Regime regime) {
    switch (regime) {
        case Regime::equal: return "equal";
        case Regime::seriesInterior: return "series-interior";
        case Regime::seriesBoundary: return "series-boundary";
        case Regime::outside: return "outside";
    }
    throw UsageError("bad regime");
}

KestenParams classifyParams(const Rational& p, const Rational& r) {
    if (p.sign() <= 0 || r.sign() <= 0)
        throw ParameterError("p and r must be positive");
    if (p > Rational(2) * r)
        throw ParameterError("distribution requires p <= 2r");
    Rational t = r / p;
    Regime regime;
    if (t == Rational(1)) {
        regime = Regime::equal;
    } else {
        Rational window = Rational(4) * abs(t - t * t);
        if (window < Rational(1)) regime = Regime::seriesInterior;
        else if (window == Rational(1)) regime = Regime::seriesBoundary;
        else regime = Regime::outside;
    }
    return KestenParams{p, r, t, regime};
}

std::string methodName(Method method) {
    switch (method) {
        case Method::closed: return "closed";
        case Method::series: return "series";
        case Method::sform: return "sform";
        case Method::tform: return "tform";
        case Method::bform: return "bform";
        case Method::comment1: return "comment1";
        case Method::quadrature: return "quadrature";
    }
    throw UsageError("bad method");
}

Method parseMethod(const std::string& name) {
    if (name == "closed") return Method::closed;
    if (name == "series") return Method::series;
    if (name == "sform") return Method::sform;
    if (name == "tform") return Method::tform;
    if (name == "bform") return Method::bform;
    if (name == "comment1") return Method::comment1;
    if (name == "quad" || name == "quadrature") return Method::quadrature;
    throw UsageError("unknown method '" + name + "'");
}

namespace {

void requireMoment(int m) {
    if (m < 0) throw UsageError("moment index must be nonnegative");
}

} // namespace

MomentValue momentClosed(int m, const KestenParams& params) {
    requireMoment(m);
    if (params.regime == Regime::outside)
        throw DomainError("closed form needs 4|t - t^2| <= 1, t = r/p");
    if (params.p == params.r)
        return {m, Method::closed, pow(params.r, m) * Rational(catalan(m)), 0};
    const Rational& t = params.t;
    Rational oneMinusT = Rational(1) - t;
    Rational sum(0);
    Rational term = t; // t^{k+1} (1-t)^k C_k at k = 0
    for (int k = 0; k < m; ++k) {
        sum += term * Rational(catalan(k));
        term *= t * oneMinusT;
    }
    Rational value = pow(params.p, m) / pow(oneMinusT, m) * (Rational(1) - sum);
    return {m, Method::closed, value, 0};
}

MomentValue momentSeries(int m, const KestenParams& params, const Rational& tol) {
    requireMoment(m);
    if (tol.sign() <= 0) throw UsageError("tolerance must be positive");
    switch (params.regime) {
        case Regime::outside:
            throw DomainError("series needs 4|t - t^2| <= 1, t = r/p");
        case Regime::seriesBoundary:
            throw BoundaryConvergenceError(
                "series converges too slowly at 4|t - t^2| = 1 for a certified "
                "truncation; use the closed form");
        case Regime::equal: {
            // t(1-t) = 0: the k = 0 term is everything
            Rational value = pow(params.r, m) * Rational(catalan(m));
            return {m, Method::series, value, 0};
        }
        case Regime::seriesInterior:
            break;
    }
    const Rational& t = params.t;
    Rational u = t * (Rational(1) - t);
    Rational ratio = Rational(4) * abs(u);        // < 1 in the interior
    Rational geo = ratio / (Rational(1) - ratio); // sum of ratio^j, j >= 1
    Rational term = t * pow(params.r, m) * Rational(catalan(m));
    Rational sum(0);
    long k = 0;
    for (;;) {
        sum += term;
        Rational bound = abs(term) * geo;
        if (bound <= tol) return {m, Method::series, sum, bound};
        // C_{n+1}/C_n = (4n+2)/(n+2) with n = k+m
        long n = k + m;
        term *= u * Rational(Integer(4 * n + 2), Integer(n + 2));
        ++k;
    }
}

MomentValue momentSForm(int m, const KestenParams& params) {
    requireMoment(m);
    const Rational& t = params.t;
    Rational oneMinusT = Rational(1) - t;
    Rational sum(0);
    for (long k = 0; k <= m; ++k)
        sum += pow(t, k) * pow(oneMinusT, m - k) * Rational(ballotS(m, k));
    return {m, Method::sform, pow(params.p, m) * sum, 0};
}

MomentValue momentTForm(int m, const KestenParams& params) {
    if (m < 1) throw UsageError("tform starts at m = 1");
    Rational sum(0);
    for (long j = 0; j < m; ++j)
        sum += pow(params.p, m - 1 - j) * pow(params.r, j) * Rational(triangleT(m - 1, j));
    return {m, Method::tform, params.p * sum, 0};
}

MomentValue momentBForm(int m, const KestenParams& params) {
    if (m < 1) throw UsageError("bform starts at m = 1");
    Rational diff = params.p - params.r;
    Rational sum(0);
    for (long j = 0; j < m; ++j)
        sum += pow(diff, j) * pow(params.r, m - 1 - j) * Rational(triangleB(m, j + 1));
    return {m, Method::bform, params.p * sum, 0};
}

MomentValue momentComment1(int m, const KestenParams& params) {
    if (m < 1) throw UsageError("comment1 starts at m = 1");
    if (params.p == params.r)
        throw DegenerateDenominatorError("comment1 divides by p - r; p = r given");
    const Rational& p = params.p;
    const Rational& q = params.r;
    Rational diff = p - q;
    Rational sum(0);
    for (long j = 1; j <= m; ++j) {
        Rational coeff(binomial(2 * j - 1, j), Integer(2 * j - 1));
        sum += coeff * pow(q, j) * pow(p, 2 * (m - j)) / pow(diff, m - j);
    }
    Rational value = p / diff * (pow(p, 2 * m - 1) / pow(diff, m - 1) - sum);
    return {m, Method::comment1, value, 0};
}

std::array<Polynomial<Rational>, 4> momentPolyForms(int m) {
    if (m < 1) throw UsageError("polynomial forms start at m = 1");
    using P = Polynomial<Rational>;
    P t(std::vector<Rational>{Rational(0), Rational(1)});
    P oneMinusT(std::vector<Rational>{Rational(1), Rational(-1)});
    P one(std::vector<Rational>{Rational(1)});

    P sumS, sumT, sumB, sumD;
    for (long k = 0; k <= m; ++k)
        sumS = polyAdd(sumS, polyScale(polyMul(polyPow(t, k), polyPow(oneMinusT, m - k)),
                                       Rational(ballotS(m, k))));
    for (long k = 0; k < m; ++k) {
        sumT = polyAdd(sumT, polyScale(polyPow(t, k), Rational(triangleT(m - 1, k))));
        sumB = polyAdd(sumB,
                       polyScale(polyMul(polyPow(oneMinusT, k), polyPow(t, m - 1 - k)),
                                 Rational(triangleB(m, k + 1))));
        sumD = polyAdd(sumD,
                       polyScale(polyMul(polyPow(t, k + 1), polyPow(oneMinusT, k)),
                                 Rational(catalan(k))));
    }
    P lead = polyPow(oneMinusT, m);
    return {polyMul(lead, sumS), polyMul(lead, sumT), polyMul(lead, sumB),
            polyAdd(one, polyScale(sumD, Rational(-1)))};
}

} // namespace kesten
