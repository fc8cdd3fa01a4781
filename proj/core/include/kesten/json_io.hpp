#ifndef KESTEN_JSON_IO_HPP
#define KESTEN_JSON_IO_HPP

#include <string>

#include "kesten/identities.hpp"
#include "kesten/moments.hpp"
#include "kesten/polynomial.hpp"
#include "kesten/quad.hpp"
#include "kesten/quadrature.hpp"

namespace kesten {

// JSON text for the wire formats: Rational as the string "num/den",
// QuadElement as {"a","b","alg"}, Polynomial as an array of coefficient
// strings constant term first, MomentValue as {"m","method","value"},
// IdentityReport as {"id","range","passed","counterexample"},
// QuadratureResult as {"value","estimatedError","evaluations"}.
std::string toJson(const Rational& r);
std::string toJson(const QuadElement& e);
std::string toJson(const Polynomial<Rational>& p);
std::string toJson(const MomentValue& v);
std::string toJson(const IdentityReport& report);
std::string toJson(const QuadratureResult& result);
std::string errorJson(const std::string& code, const std::string& message);

} // namespace kesten

#endif
