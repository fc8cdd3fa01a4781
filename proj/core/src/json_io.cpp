#include "kesten/json_io.hpp"

#include <json.hpp>

namespace kesten {

namespace {

using nlohmann::json;

json counterexampleJson(const std::optional<Counterexample>& ce) {
    if (!ce) return nullptr;
    return json{{"at", ce->at}, {"lhs", ce->lhs}, {"rhs", ce->rhs}};
}

} // namespace

std::string toJson(const Rational& r) {
    return json(r.toString()).dump();
}

std::string toJson(const QuadElement& e) {
    json j{{"a", e.a().toString()},
           {"b", e.b().toString()},
           {"alg", e.spec().name}};
    return j.dump();
}

std::string toJson(const Polynomial<Rational>& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.toString());
    return arr.dump();
}

std::string toJson(const MomentValue& v) {
    json j{{"m", v.m},
           {"method", methodName(v.method)},
           {"value", v.value.toString()}};
    return j.dump();
}

std::string toJson(const IdentityReport& report) {
    json j{{"id", report.id},
           {"range", report.range},
           {"passed", report.passed},
           {"counterexample", counterexampleJson(report.counterexample)}};
    return j.dump();
}

std::string toJson(const QuadratureResult& result) {
    json j{{"value", result.value},
           {"estimatedError", result.estimatedError},
           {"evaluations", result.evaluations}};
    return j.dump();
}

std::string errorJson(const std::string& code, const std::string& message) {
    json j{{"error", code}, {"message", message}};
    return j.dump();
}

} // namespace kesten

