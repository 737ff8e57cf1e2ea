#pragma once

#include "ellcomb/exact_scalar.hpp"
#include "ellcomb/numeric.hpp"

namespace ellcomb {

// [z]_q = (1 - q^z) / (1 - q); defined for every integer z.
ExactScalar q_number(long z);

// [n]_q! = [1]_q [2]_q ... [n]_q. Throws DomainError for n < 0.
ExactScalar q_factorial(long n);

// Gaussian binomial [n choose k]_q. Throws DomainError unless 0 <= k <= n.
ExactScalar q_binomial(long n, long k);

// (s^i - t^i) / (s - t). Throws DegenerateParameters when s and t coincide
// within the numeric distinctness guard, DomainError for i < 0.
Complex st_number(long i, Complex s, Complex t);

BigInt binomial(long n, long k);
BigInt factorial(long n);

}  // namespace ellcomb
