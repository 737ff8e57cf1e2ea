#include "ellcomb/exact_scalar.hpp"

#include <cstdlib>

#include "ellcomb/errors.hpp"

namespace ellcomb {

ExactScalar::ExactScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("ExactScalar: zero denominator");
  normalize();
}

void ExactScalar::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Powers of q are units: move them into the numerator.
  if (den_.low_degree() != 0) {
    num_ = num_.shifted(-den_.low_degree());
    den_ = den_.shifted(-den_.low_degree());
  }
  if (den_.is_constant()) {
    BigInt g = num_.content();
    const BigInt d = den_.lowest_coeff();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (d < 0) g = -g;
    if (g != 1) {
      num_ = num_.divided_by(g);
      den_ = den_.divided_by(g);
    }
    return;
  }
  const BigInt cn = num_.content();
  const BigInt cd = den_.content();
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  LaurentPoly g = primitive_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
    // g has lowest exponent 0; the quotient keeps den_'s constant term nonzero.
    if (den_.low_degree() != 0) {
      num_ = num_.shifted(-den_.low_degree());
      den_ = den_.shifted(-den_.low_degree());
    }
  }
  if (den_.lowest_coeff() < 0) cg = -cg;
  if (cg != 1) {
    num_ = num_.divided_by(cg);
    den_ = den_.divided_by(cg);
  }
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_one()) return *this;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  num_ *= o.num_;
  if (o.den_.is_one()) {
    if (den_.is_one()) return *this;
  } else {
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw DivisionByZero("ExactScalar: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

ExactScalar ExactScalar::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw DivisionByZero("ExactScalar::pow: zero to a negative power");
    return ExactScalar(1) / pow(-e);
  }
  ExactScalar r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;  // powers of coprime normal forms stay normal
}

ExactScalar ExactScalar::substitute_power(int m) const {
  return ExactScalar(num_.substitute_power(m), den_.substitute_power(m));
}

std::complex<double> ExactScalar::evaluate(std::complex<double> q) const {
  return num_.evaluate(q) / den_.evaluate(q);
}

BigRational ExactScalar::evaluate_at_one() const {
  const BigInt d = den_.evaluate_at_one();
  if (d == 0) throw DomainError("ExactScalar: denominator vanishes at q = 1");
  BigRational r(num_.evaluate_at_one(), d);
  r.canonicalize();
  return r;
}

std::string ExactScalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ExactScalar ExactScalar::parse(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError("empty scalar text");
  text.remove_prefix(first);
  if (text.front() != '(') return ExactScalar(LaurentPoly::parse(text));
  const std::size_t close = text.find(')');
  const std::size_t slash = text.find('/', close == std::string_view::npos ? 0 : close);
  if (close == std::string_view::npos || slash == std::string_view::npos)
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string_view num = text.substr(1, close - 1);
  std::string_view rest = text.substr(slash + 1);
  const std::size_t r0 = rest.find('(');
  const std::size_t r1 = rest.rfind(')');
  if (r0 == std::string_view::npos || r1 == std::string_view::npos || r1 < r0)
    throw ParseError("malformed rational '" + std::string(text) + "'");
  return ExactScalar(LaurentPoly::parse(num), LaurentPoly::parse(rest.substr(r0 + 1, r1 - r0 - 1)));
}

}  // namespace ellcomb
