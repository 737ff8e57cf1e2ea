#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ellcomb {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Laurent polynomial in one formal variable q with arbitrary-precision
// integer coefficients.
//
// Storage is dense: coeffs_[i] is the coefficient of q^(low_ + i). The
// first and last stored coefficients are nonzero, so every value has exactly
// one representation and equality is structural. The zero polynomial has no
// stored coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigInt& c);

  static LaurentPoly monomial(const BigInt& c, int exponent);
  static LaurentPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1 && low_ == 0; }
  bool is_one() const;

  // Lowest / highest exponent with a nonzero coefficient. Undefined (0) for
  // the zero polynomial.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_span() const { return coeffs_.size(); }

  // Coefficient of q^e (zero outside the stored range).
  BigInt coeff(int e) const;
  const BigInt& lowest_coeff() const { return coeffs_.front(); }
  const BigInt& highest_coeff() const { return coeffs_.back(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  LaurentPoly pow(unsigned e) const;

  // Multiplication by q^s.
  LaurentPoly shifted(int s) const;

  // The substitution q -> q^m for m >= 1.
  LaurentPoly substitute_power(int m) const;

  // gcd of all coefficients (nonnegative; 0 for the zero polynomial).
  BigInt content() const;

  // Divides every coefficient by d; d must divide each of them.
  LaurentPoly divided_by(const BigInt& d) const;

  std::complex<double> evaluate(std::complex<double> q) const;
  // Sum of coefficients, i.e. the value at q = 1.
  BigInt evaluate_at_one() const;

  // Canonical text: ascending exponents, e.g. "-q^-2 - q^-1", "1 + 2*q^3".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void trim();

  int low_ = 0;
  std::vector<BigInt> coeffs_;

  friend std::optional<LaurentPoly> divide_exact(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly primitive_gcd(const LaurentPoly&, const LaurentPoly&);
};

// Quotient a / b in Z[q, 1/q] if b divides a exactly, otherwise nullopt.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// gcd in Z[q] of the primitive parts of a and b, taken up to units of
// Z[q, 1/q]: lowest exponent 0, positive highest coefficient. Both inputs
// must be nonzero.
LaurentPoly primitive_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace ellcomb
