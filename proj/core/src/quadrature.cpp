#include "kesten/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "kesten/errors.hpp"

namespace kesten {

long defaultEvalBudget() {
    static const long budget = [] {
        const char* env = std::getenv("KESTEN_EVAL_BUDGET");
        if (env) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return 10000000L;
    }();
    return budget;
}

namespace {

constexpr double PI = 3.14159265358979323846;
constexpr int PANEL_POINTS = 21;

struct GaussRule {
    std::vector<double> node;
    std::vector<double> weight;
};

// Gauss-Legendre abscissas and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
GaussRule makeGauss(int n) {
    GaussRule rule;
    rule.node.resize(n);
    rule.weight.resize(n);
    int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.node[i] = -x;
        rule.node[n - 1 - i] = x;
        rule.weight[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weight[n - 1 - i] = rule.weight[i];
    }
    return rule;
}

const GaussRule& panelRule() {
    static const GaussRule rule = makeGauss(PANEL_POINTS);
    return rule;
}

struct Budget {
    long remaining;
};

using Fn = std::function<double(double)>;

double panel(const Fn& f, double a, double b, Budget& budget) {
    budget.remaining -= PANEL_POINTS;
    if (budget.remaining < 0)
        throw BudgetExceededError("quadrature evaluation budget exhausted");
    const GaussRule& rule = panelRule();
    double mid = 0.5 * (a + b), halfWidth = 0.5 * (b - a);
    double sum = 0;
    for (int i = 0; i < PANEL_POINTS; ++i)
        sum += rule.weight[i] * f(mid + halfWidth * rule.node[i]);
    return sum * halfWidth;
}

double refine(const Fn& f, double a, double b, double whole, double tolAbs,
              double& errAcc, Budget& budget) {
    double mid = 0.5 * (a + b);
    double left = panel(f, a, mid, budget);
    double right = panel(f, mid, b, budget);
    double err = std::fabs(left + right - whole);
    if (err <= tolAbs) {
        errAcc += err;
        return left + right;
    }
    return refine(f, a, mid, left, 0.5 * tolAbs, errAcc, budget) +
           refine(f, mid, b, right, 0.5 * tolAbs, errAcc, budget);
}

QuadratureResult integrate(const Fn& f, double a, double b, double tol, long budget) {
    Budget state{budget < 0 ? defaultEvalBudget() : budget};
    double pilot = panel(f, a, b, state);
    double tolAbs = 0.5 * tol * std::max(1.0, std::fabs(pilot));
    double errAcc = 0;
    double value = refine(f, a, b, pilot, tolAbs, errAcc, state);
    long start = budget < 0 ? defaultEvalBudget() : budget;
    return {value, errAcc, start - state.remaining};
}

void requireDensityParams(double p, double r) {
    if (!(p > 0) || !(r > 0) || !(p <= 2 * r))
        throw ParameterError("density requires 0 < p <= 2r");
}

double ipow(double base, int e) {
    double acc = 1;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

} // namespace

double kestenDensityAt(double x, double p, double r) {
    requireDensityParams(p, r);
    double support = 4 * r - x * x;
    if (support <= 0) return 0;
    double denom = p * p - (p - r) * x * x;
    if (denom <= 0)
        throw KestenError("Internal", "density denominator not positive inside support");
    return p / (2 * PI) * std::sqrt(support) / denom;
}

QuadratureResult integrateKestenPower(int power, double p, double r, double tol,
                                      long budget) {
    if (power < 0) throw UsageError("power must be nonnegative");
    if (!(tol > 0)) throw UsageError("tolerance must be positive");
    requireDensityParams(p, r);
    double twoSqrtR = 2 * std::sqrt(r);
    double scale = p / (2 * PI) * ipow(twoSqrtR, power) * 4 * r;
    // after x = 2 sqrt(r) sin(theta) the denominator is evaluated in whichever
    // of its two algebraic rearrangements has no cancellation
    Fn f;
    if (p <= r) {
        double c0 = p * p, c1 = 4 * r * (r - p);
        f = [=](double theta) {
            double s = std::sin(theta), c = std::cos(theta);
            return scale * ipow(s, power) * c * c / (c0 + c1 * s * s);
        };
    } else {
        double c0 = (p - 2 * r) * (p - 2 * r), c1 = 4 * r * (p - r);
        f = [=](double theta) {
            double s = std::sin(theta), c = std::cos(theta);
            return scale * ipow(s, power) * c * c / (c0 + c1 * c * c);
        };
    }
    return integrate(f, -PI / 2, PI / 2, tol, budget);
}

QuadratureResult momentByQuadrature(int m, double p, double r, double tol, long budget) {
    if (m < 0) throw UsageError("moment index must be nonnegative");
    return integrateKestenPower(2 * m, p, r, tol, budget);
}

QuadratureResult semicircleMomentQuad(int n, double tol, long budget) {
    if (n < 0) throw UsageError("moment index must be nonnegative");
    return integrateKestenPower(2 * n, 1.0, 1.0, tol, budget);
}

std::pair<double, double> catalanGFCheck(double tVal, int N) {
    if (N < 1) throw UsageError("N must be positive");
    if (std::fabs(tVal) < 0.25) {
        double sum = 0, term = 1;
        for (int k = 0; k <= N; ++k) {
            sum += term;
            term *= tVal * (4.0 * k + 2.0) / (k + 2.0);
        }
        return {sum, 2.0 / (std::sqrt(1.0 - 4.0 * tVal) + 1.0)};
    }
    if (tVal > 0.5 && tVal < 1.2) {
        double u = tVal * (1.0 - tVal);
        double sum = 0, term = 1;
        for (int n = 0; n <= N; ++n) {
            sum += term;
            term *= u * (4.0 * n + 2.0) / (n + 2.0);
        }
        return {sum, 1.0 / tVal};
    }
    throw ParameterError("tVal must satisfy |tVal| < 1/4 or 1/2 < tVal < 1.2");
}

} // namespace kesten
