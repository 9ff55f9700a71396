#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace qhol {

// Exact integer used for all coefficients, matrix entries and group orders.
using Int = boost::multiprecision::cpp_int;

bool is_prime(const Int& n);

// Multiplicity of the prime p in n (n != 0).
int p_valuation(Int n, const Int& p);

// n choose k for n >= 0, k >= 0.
Int binomial(const Int& n, long k);

// Ascending list of odd primes in (2, bound].
std::vector<long> odd_primes_up_to(long bound);

}  // namespace qhol
