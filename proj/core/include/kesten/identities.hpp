#ifndef KESTEN_IDENTITIES_HPP
#define KESTEN_IDENTITIES_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kesten/moments.hpp"
#include "kesten/polynomial.hpp"
#include "kesten/rational.hpp"
#include "kesten/sequences.hpp"

namespace kesten {

struct Counterexample {
    std::string at;  // parameter point where the identity broke
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    std::string range;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

// Sequence accessors used by the identity builders. Tests substitute perturbed
// versions to prove the detectors are not vacuous; defaults are the library
// functions.
struct SequenceHooks {
    std::function<Integer(long)> catalan = &kesten::catalan;
    std::function<Integer(long, long)> triangleT = &kesten::triangleT;
    std::function<Integer(long, long)> triangleB = &kesten::triangleB;
    std::function<Integer(long, long)> ballotS = &kesten::ballotS;
    std::function<Integer(long)> fibonacci = &kesten::fibonacci;
    std::function<Integer(long)> lucas = &kesten::lucas;
    std::function<Rational(long)> fine = &kesten::fine;
};

using PolyFormsBuilder = std::function<std::array<Polynomial<Rational>, 4>(int)>;

// Four equivalent polynomials in t per m (the momentPolyForms shapes).
IdentityReport verifyProp1i(int mMax);
IdentityReport verifyProp1i(int mMax, const PolyFormsBuilder& forms);

// Four equivalent polynomials in x per m:
//   sum_k S_{m,k} x^k
//   (x+1) sum_k B_{m,k+1} x^{m-1-k}
//   sum_k T_{m-1,k} x^k (x+1)^{m-k}
//   (1+x)^{2m} - sum_k C_k x^{k+1} (x+1)^{2m-2k-1}
IdentityReport verifyProp1ii(int mMax);
IdentityReport verifyProp1ii(int mMax, const PolyFormsBuilder& forms);
std::array<Polynomial<Rational>, 4> xPolyForms(int m);
std::array<Polynomial<Rational>, 4> xPolyForms(int m, const SequenceHooks& h);

// Specialization t = 2: four equal integers per m.
IdentityReport verifyEx1a(int mMax);
IdentityReport verifyEx1a(int mMax, const SequenceHooks& h);

// Specialization t = e^{i pi/3}: raw equality in the zeta6 algebra plus the
// real/imaginary split sums with exact cosine values.
IdentityReport verifyEx1b(int mMax);
IdentityReport verifyEx1b(int mMax, const SequenceHooks& h);

// Specialization t = (1+sqrt 5)/2: raw equality in the sqrt5 algebra plus the
// Lucas and Fibonacci integer chains, cross-checked against the coordinates of
// the raw value.
IdentityReport verifyEx1c(int mMax);
IdentityReport verifyEx1c(int mMax, const SequenceHooks& h);

// Specialization x = 1.
IdentityReport verifyEx2a(int mMax);
IdentityReport verifyEx2a(int mMax, const SequenceHooks& h);

// Specialization x = -1/2 scaled by 2^m; common value is (-1)^{m-1} Phi_{m-1}.
IdentityReport verifyEx2b(int mMax);
IdentityReport verifyEx2b(int mMax, const SequenceHooks& h);

// Limit x -> -1: weighted alternating S-sum equals the alternating B-sum and
// (-1)^{m-1} C_{m-1}; includes the divisibility of the S-polynomial by x + 1.
IdentityReport verifyEx2c(int mMax);
IdentityReport verifyEx2c(int mMax, const SequenceHooks& h);

// Fine numbers from the B, T and S triangles.
IdentityReport verifyFine(int nMax);
IdentityReport verifyFine(int nMax, const SequenceHooks& h);

enum class HankelFamily { kestenEven, truncatedConvex };

HankelFamily parseHankelFamily(const std::string& name);
std::string hankelFamilyName(HankelFamily family);

// Stieltjes moment-sequence test: builds s_0..s_{2 size} (kestenEven: the
// even Kesten moments at p = 1, r = t, scaled by p^{-m}; truncatedConvex:
// 1 - d sum_{k<m} t^{k+1}(1-t)^k C_k) and checks every leading principal
// minor of the Hankel matrix s_{i+j} (orders 1..size+1) and of the shifted
// Hankel matrix s_{i+j+1} (orders 1..size) for nonnegativity, exactly.
// The first negative minor is reported as the counterexample.
IdentityReport hankelCheck(HankelFamily family, const Rational& t, const Rational& d,
                           int size);

// Exact determinant by fraction-free (Bareiss) elimination after clearing
// row denominators.
Rational detExact(const std::vector<std::vector<Rational>>& m);

struct IdentityEntry {
    std::string id;
    int defaultMax;
    std::function<IdentityReport(int)> run;
};

// All sweep identities, in a stable order, keyed by the ids accepted by the
// command line tool: prop1i, prop1ii, ex1a, ex1b, ex1c, ex2a, ex2b, ex2c, fine.
const std::vector<IdentityEntry>& identityRegistry();
IdentityReport runIdentity(const std::string& id, int maxParam);

} // namespace kesten

#endif
