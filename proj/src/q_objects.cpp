#include "ellcomb/q_objects.hpp"

#include <string>

#include "ellcomb/errors.hpp"
#include "ellcomb/scalar.hpp"

namespace ellcomb {

ExactScalar q_number(long z) {
  // For z >= 0 the geometric sum; for z < 0, [z]_q = -q^z [-z]_q.
  if (z == 0) return ExactScalar(0);
  const long m = z > 0 ? z : -z;
  LaurentPoly sum;
  for (long i = 0; i < m; ++i) sum += LaurentPoly::monomial(1, static_cast<int>(i));
  if (z > 0) return ExactScalar(sum);
  return ExactScalar(-sum.shifted(static_cast<int>(z)));
}

ExactScalar q_factorial(long n) {
  if (n < 0) throw DomainError("q_factorial: negative argument " + std::to_string(n));
  ExactScalar r(1);
  for (long i = 2; i <= n; ++i) r *= q_number(i);
  return r;
}

ExactScalar q_binomial(long n, long k) {
  if (k < 0 || k > n) {
    throw DomainError("q_binomial: (n,k) = (" + std::to_string(n) + "," + std::to_string(k) +
                      ") outside 0 <= k <= n");
  }
  ExactScalar r = q_factorial(n) / (q_factorial(k) * q_factorial(n - k));
  if (!r.is_polynomial()) throw Error("q_binomial: quotient is not a polynomial");
  return r;
}

Complex st_number(long i, Complex s, Complex t) {
  if (i < 0) throw DomainError("st_number: negative index");
  if (!ScalarTraits<Complex>::distinct(s, t)) throw DegenerateParameters("st_number: s and t coincide");
  return (ipow(s, i) - ipow(t, i)) / (s - t);
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace ellcomb
