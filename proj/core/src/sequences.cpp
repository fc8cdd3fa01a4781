#include "kesten/sequences.hpp"

namespace kesten {

SequenceId parseSequenceId(const std::string& name) {
    if (name == "catalan") return SequenceId::catalan;
    if (name == "triangleT") return SequenceId::triangleT;
    if (name == "triangleB") return SequenceId::triangleB;
    if (name == "ballotS") return SequenceId::ballotS;
    if (name == "fibonacci") return SequenceId::fibonacci;
    if (name == "lucas") return SequenceId::lucas;
    if (name == "fine") return SequenceId::fine;
    throw UsageError("unknown sequence '" + name + "'");
}

std::string sequenceName(SequenceId id) {
    switch (id) {
        case SequenceId::catalan: return "catalan";
        case SequenceId::triangleT: return "triangleT";
        case SequenceId::triangleB: return "triangleB";
        case SequenceId::ballotS: return "ballotS";
        case SequenceId::fibonacci: return "fibonacci";
        case SequenceId::lucas: return "lucas";
        case SequenceId::fine: return "fine";
    }
    throw UsageError("bad sequence id");
}

bool sequenceIsTriangular(SequenceId id) {
    return id == SequenceId::triangleT || id == SequenceId::triangleB ||
           id == SequenceId::ballotS;
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("binomial requires 0 <= k <= n");
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

Integer catalan(long n) {
    if (n < 0) throw UsageError("catalan index must be nonnegative");
    return binomial(2 * n, n) / Integer(n + 1);
}

Integer triangleT(long m, long j) {
    if (j < 0 || m < j) throw UsageError("triangleT requires m >= j >= 0");
    return binomial(m + j, m) * Integer(m - j + 1) / Integer(m + 1);
}

Integer triangleB(long k, long j) {
    if (j < 1 || k < j) throw UsageError("triangleB requires k >= j >= 1");
    return binomial(2 * k, k - j) * Integer(j) / Integer(k);
}

Integer ballotS(long m, long k) {
    if (k < 0 || k > m) throw UsageError("ballotS requires 0 <= k <= m");
    Integer lower = (k >= 1) ? binomial(2 * m, k - 1) : Integer(0);
    return binomial(2 * m, k) - lower;
}

namespace {

Integer fibLucasForward(long n, Integer a, Integer b) {
    // a = value at 0, b = value at 1
    if (n == 0) return a;
    for (long i = 1; i < n; ++i) {
        Integer next = a + b;
        a = b;
        b = next;
    }
    return b;
}

} // namespace

Integer fibonacci(long n) {
    if (n >= 0) return fibLucasForward(n, Integer(0), Integer(1));
    long k = -n;
    Integer v = fibonacci(k);
    return (k % 2 == 0) ? Integer(-v) : v;
}

Integer lucas(long n) {
    if (n >= 0) return fibLucasForward(n, Integer(2), Integer(1));
    long k = -n;
    Integer v = lucas(k);
    return (k % 2 == 0) ? v : Integer(-v);
}

Rational fine(long n) {
    if (n < 0) throw UsageError("fine index must be nonnegative");
    Rational half(Integer(1), Integer(2));
    Rational phi(1);
    for (long i = 1; i <= n; ++i)
        phi = half * (Rational(catalan(i)) - phi);
    if (!phi.isInteger()) throw DomainError("fine recurrence produced a non-integer");
    return phi;
}

} // namespace kesten
