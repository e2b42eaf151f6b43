#pragma once

#include <functional>
#include <vector>

#include "stirsum/bigreal.hpp"
#include "stirsum/rational.hpp"

// Hot loops, each with a plain serial reference and an OpenMP version. The
// parallel versions split work into fixed-size blocks and combine the block
// results in index order, so their output does not depend on the thread count.
namespace stirsum::kernels {

// Weniger images c_k for k_begin <= k <= k_end from inner[l-1] = a_l
// (inner.size() >= k_end). Element i of the result is c_{k_begin+i}.
std::vector<Rational> weniger_block_serial(const std::vector<Rational>& inner, long k_begin, long k_end);
std::vector<Rational> weniger_block_parallel(const std::vector<Rational>& inner, long k_begin, long k_end);

// f(k, out) stores the k-th summand in `out`, which arrives at the working precision.
using RealTerm = std::function<void(long, BigReal&)>;
using RationalTerm = std::function<Rational(long)>;

// sum_{k=first}^{last} f(k); an empty range gives zero.
BigReal sum_real_serial(long first, long last, const RealTerm& f, Precision p);
BigReal sum_real_parallel(long first, long last, const RealTerm& f, Precision p);
Rational sum_rational_serial(long first, long last, const RationalTerm& f);
Rational sum_rational_parallel(long first, long last, const RationalTerm& f);

int max_threads();
void set_threads(int n);

}  // namespace stirsum::kernels
