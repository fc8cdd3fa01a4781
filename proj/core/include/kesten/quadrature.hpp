#ifndef KESTEN_QUADRATURE_HPP
#define KESTEN_QUADRATURE_HPP

#include <utility>

namespace kesten {

struct QuadratureResult {
    double value;
    double estimatedError;
    long evaluations;
};

// Evaluation cap used when a call does not pass its own budget; reads
// KESTEN_EVAL_BUDGET once, defaulting to 10^7.
long defaultEvalBudget();

// Density value at x for parameters 0 < p <= 2r; zero outside |x| <= 2 sqrt r.
double kestenDensityAt(double x, double p, double r);

// integral of x^power times the density, via the substitution x = 2 sqrt(r) sin(theta)
// (which removes the square-root endpoint singularity) and adaptive composite
// Gauss-Legendre panels. Refines until the accumulated panel error estimate is
// at or below tol * max(1, |value|). budget < 0 means defaultEvalBudget().
QuadratureResult integrateKestenPower(int power, double p, double r, double tol,
                                      long budget = -1);

// Even moment M_{2m} by direct integration.
QuadratureResult momentByQuadrature(int m, double p, double r, double tol,
                                    long budget = -1);

// integral of x^{2n} against the semicircle density, which must match catalan(n).
QuadratureResult semicircleMomentQuad(int n, double tol, long budget = -1);

// Partial sums of two Catalan generating-function facts.
// |tVal| < 1/4: (sum_{k<=N} tVal^k C_k, 2/(sqrt(1-4 tVal)+1)).
// 1/2 < tVal < 1.2: (sum_{n<=N} tVal^n (1-tVal)^n C_n, 1/tVal).
std::pair<double, double> catalanGFCheck(double tVal, int N);

} // namespace kesten

#endif
