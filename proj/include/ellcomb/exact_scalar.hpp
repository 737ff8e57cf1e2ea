#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "ellcomb/laurent_poly.hpp"

namespace ellcomb {

// Rational function in q over the integers, kept in a unique normal form:
//  - the denominator has lowest exponent 0 and a positive constant term,
//  - numerator and denominator share no nonunit factor in Z[q, 1/q]
//    (integer content included),
//  - zero is 0/1.
// Equality is therefore structural.
class ExactScalar {
 public:
  ExactScalar() : den_(1) {}
  ExactScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit ExactScalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}
  ExactScalar(LaurentPoly num, LaurentPoly den);

  static ExactScalar q() { return ExactScalar(LaurentPoly::q()); }
  static ExactScalar q_power(int e) { return ExactScalar(LaurentPoly::monomial(1, e)); }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  // Throws DivisionByZero when o is zero.
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Integer power; negative exponents invert (and reject zero).
  ExactScalar pow(int e) const;

  // The substitution q -> q^m, m >= 1.
  ExactScalar substitute_power(int m) const;

  std::complex<double> evaluate(std::complex<double> q) const;
  // Value at q = 1; throws DomainError when the denominator vanishes there.
  BigRational evaluate_at_one() const;

  // "N" for polynomials, "(N)/(D)" otherwise, with N and D in the canonical
  // LaurentPoly grammar.
  std::string to_string() const;
  static ExactScalar parse(std::string_view text);

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace ellcomb
