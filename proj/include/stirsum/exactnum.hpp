#pragma once

#include <vector>

#include "stirsum/rational.hpp"

// Exact combinatorial number families. All generators are cached
// (append-only, index-stable) and safe to call from several threads.
namespace stirsum::exactnum {

// Signed Stirling number of the first kind S_k^(1)(l), the connection
// coefficients in (x)_k = (-1)^k sum_l (-1)^l S_k^(1)(l) x^l. Requires 0 <= l <= k.
BigInt stirling_first(long k, long l);

// Row k of the triangle, entries l = 0..k. The reference stays valid for the
// lifetime of the process.
const std::vector<BigInt>& stirling_row(long k);

// Bernoulli numbers with the x/(e^x - 1) convention (B_1 = -1/2).
Rational bernoulli(long k);

// Euler numbers of 2e^x/(e^{2x}+1) = sech x (E_2 = -1, E_4 = 5).
BigInt euler_number(long k);

// T_k = 2^{2k} (2^{2k} - 1) |B_{2k}| / (2k), k >= 1.
Rational tangent_number(long k);

// Gregory numbers C_k = (1/k!) sum_{l=0}^{k} S_k^(1)(l) / (l+1).
Rational gregory_number(long k);

// Coefficients a_k of the convergent Stirling formula for log n!,
// a_k = ((-1)^k / (2k)) sum_{l=1}^{k} (-1)^l l / ((l+1)(l+2)) S_k^(1)(l), k >= 1.
Rational stirling_a(long k);

// Double factorial for odd m. For m >= -1 the usual product with (-1)!! = 1;
// for m = -(2j+1), j >= 1, the continuation (-1)^j / (2j-1)!!.
Rational double_factorial_ext(long m);

BigInt factorial(long n);
BigInt binomial(long n, long k);

}  // namespace stirsum::exactnum
