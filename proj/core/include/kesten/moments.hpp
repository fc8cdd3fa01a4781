#ifndef KESTEN_MOMENTS_HPP
#define KESTEN_MOMENTS_HPP

#include <array>
#include <string>

#include "kesten/polynomial.hpp"
#include "kesten/rational.hpp"

namespace kesten {

// Regime of the auxiliary variable t = r/p. The distribution needs
// 0 < p <= 2r, i.e. t >= 1/2; the series expansion additionally needs
// 4|t - t^2| <= 1, which for t > 1 means t <= (1 + sqrt 2)/2.
enum class Regime { equal, seriesInterior, seriesBoundary, outside };

std::string regimeName(Regime regime);

struct KestenParams {
    Rational p;
    Rational r;
    Rational t; // r/p
    Regime regime;
};

// Validates 0 < p <= 2r and derives the regime exactly.
KestenParams classifyParams(const Rational& p, const Rational& r);

enum class Method { closed, series, sform, tform, bform, comment1, quadrature };

std::string methodName(Method method);
Method parseMethod(const std::string& name);

struct MomentValue {
    int m;
    Method method;
    Rational value;
    // certified bound on the truncation error; zero for the exact methods
    Rational tailBound;
};

// M_{2m} by the closed form p^m/(1-t)^m (1 - sum_{k<m} t^{k+1}(1-t)^k C_k),
// specialized to r^m C_m when p = r. Rejects the outside regime.
MomentValue momentClosed(int m, const KestenParams& params);

// M_{2m} as a truncated power series with a certified geometric tail bound.
// Terms: t (t(1-t))^k r^m C_{k+m}. Boundary regime is rejected since the
// O(k^{-3/2}) decay there admits no geometric truncation certificate; use
// momentClosed instead.
MomentValue momentSeries(int m, const KestenParams& params, const Rational& tol);

// p^m sum_{k=0}^{m} t^k (1-t)^{m-k} S_{m,k}; defined for all p, r > 0.
MomentValue momentSForm(int m, const KestenParams& params);

// p sum_{j=0}^{m-1} p^{m-1-j} r^j T_{m-1,j}; m >= 1.
MomentValue momentTForm(int m, const KestenParams& params);

// p sum_{j=0}^{m-1} (p-r)^j r^{m-1-j} B_{m,j+1}; m >= 1.
MomentValue momentBForm(int m, const KestenParams& params);

// (p/(p-r)) (p^{2m-1}/(p-r)^{m-1}
//            - sum_{j=1}^{m} binom(2j-1,j)/(2j-1) r^j p^{2(m-j)}/(p-r)^{m-j});
// m >= 1, requires p != r.
MomentValue momentComment1(int m, const KestenParams& params);

// The four equivalent polynomial forms of (1-t)^m M_{2m}/p^m as exact
// polynomials in t:
//   [0] (1-t)^m sum_k S_{m,k} t^k (1-t)^{m-k}
//   [1] (1-t)^m sum_k T_{m-1,k} t^k
//   [2] (1-t)^m sum_k B_{m,k+1} (1-t)^k t^{m-1-k}
//   [3] 1 - sum_{k<m} C_k t^{k+1} (1-t)^k
std::array<Polynomial<Rational>, 4> momentPolyForms(int m);

} // namespace kesten

#endif
