#ifndef KESTEN_SEQUENCES_HPP
#define KESTEN_SEQUENCES_HPP

#include <string>

#include "kesten/rational.hpp"

namespace kesten {

enum class SequenceId { catalan, triangleT, triangleB, ballotS, fibonacci, lucas, fine };

SequenceId parseSequenceId(const std::string& name);
std::string sequenceName(SequenceId id);
bool sequenceIsTriangular(SequenceId id);

// binom(n, k), exact; requires 0 <= k <= n.
Integer binomial(long n, long k);

// C_n = binom(2n, n)/(n+1)
Integer catalan(long n);

// T_{m,j} = ((m-j+1)/(m+1)) * binom(m+j, m), requires m >= j >= 0 (A009766)
Integer triangleT(long m, long j);

// B_{k,j} = (j/k) * binom(2k, k-j), requires k >= j >= 1 (A039598)
Integer triangleB(long k, long j);

// S_{m,k} = binom(2m, k) - binom(2m, k-1), with binom(2m, -1) = 0; 0 <= k <= m
Integer ballotS(long m, long k);

// F_n with F_{-k} = (-1)^{k-1} F_k
Integer fibonacci(long n);

// L_n with L_{-n} = (-1)^n L_n
Integer lucas(long n);

// Fine numbers by the recurrence Phi_n = -Phi_{n-1}/2 + C_n/2, Phi_0 = 1.
// Integrality of the result is asserted; returned as Rational.
Rational fine(long n);

} // namespace kesten

#endif
