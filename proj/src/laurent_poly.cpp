#include "ellcomb/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ellcomb/errors.hpp"
#include "ellcomb/high_precision.hpp"

namespace ellcomb {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(BigInt(c)) {}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

bool LaurentPoly::is_one() const {
  return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

BigInt LaurentPoly::coeff(int e) const {
  if (is_zero() || e < low_ || e > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += s;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int m) const {
  if (m < 1) throw DomainError("substitute_power: exponent multiplier must be >= 1");
  if (m == 1 || is_zero()) return *this;
  LaurentPoly r;
  r.low_ = low_ * m;
  r.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(m) + 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * static_cast<std::size_t>(m)] = coeffs_[i];
  return r;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::divided_by(const BigInt& d) const {
  if (d == 0) throw DivisionByZero("LaurentPoly::divided_by: zero divisor");
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return r;
}

namespace {

RealHP to_real_hp(const BigInt& c) {
  if (c.fits_slong_p()) return RealHP(c.get_si());
  return RealHP(c.get_str());
}

}  // namespace

// Horner in quad precision, so that expanded products such as (1+q)^n stay
// accurate near their roots.
std::complex<double> LaurentPoly::evaluate(std::complex<double> q) const {
  if (is_zero()) return 0.0;
  const ComplexHP z = to_hp(q);
  ComplexHP acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + ComplexHP(to_real_hp(*it));
  return to_double(acc * ipow(z, low_));
}

BigInt LaurentPoly::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

namespace {

void append_term(std::string& out, const BigInt& c, int e, bool first) {
  const bool negative = c < 0;
  const BigInt mag = abs(c);
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (e == 0) {
    out += mag.get_str();
    return;
  }
  if (mag != 1) {
    out += mag.get_str();
    out += '*';
  }
  out += 'q';
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    append_term(out, coeffs_[i], low_ + static_cast<int>(i), first);
    first = false;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial text");

  LaurentPoly result;
  std::size_t pos = 0;
  auto fail = [&](const char* what) {
    throw ParseError(std::string("malformed polynomial '") + std::string(text) + "': " + what);
  };
  auto read_int = [&](bool allow_sign) -> std::string {
    std::string digits;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) digits += s[pos++];
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    return digits;
  };

  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    first = false;

    BigInt c = 1;
    const std::string digits = read_int(false);
    const bool has_digits = !digits.empty();
    if (has_digits) c = BigInt(digits);
    int e = 0;
    bool has_q = false;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_digits) fail("'*' without a coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 'q') fail("expected 'q' after '*'");
    }
    if (pos < s.size() && s[pos] == 'q') {
      has_q = true;
      ++pos;
      e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::string ex = read_int(true);
        if (ex.empty() || ex == "-" || ex == "+") fail("missing exponent");
        e = std::stoi(ex);
      }
    }
    if (!has_digits && !has_q) fail("empty term");
    result += monomial(sign * c, e);
  }
  return result;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("divide_exact: zero divisor");
  if (a.is_zero()) return LaurentPoly();
  // Work on coefficient vectors of a/q^low(a) and b/q^low(b).
  std::vector<BigInt> rem = a.coeffs_;
  const std::vector<BigInt>& den = b.coeffs_;
  if (rem.size() < den.size()) return std::nullopt;
  std::vector<BigInt> quot(rem.size() - den.size() + 1, BigInt(0));
  const BigInt& lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + den.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  LaurentPoly q;
  q.coeffs_ = std::move(quot);
  q.low_ = a.low_ - b.low_;
  q.trim();
  return q;
}

namespace {

using Coeffs = std::vector<BigInt>;

void strip_high(Coeffs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(Coeffs& v) {
  BigInt g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, up to a nonzero integer factor.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    strip_high(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

LaurentPoly primitive_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("primitive_gcd: zero argument");
  Coeffs x = a.coeffs_;
  Coeffs y = b.coeffs_;
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Coeffs r = pseudo_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive(x);
  if (x.back() < 0)
    for (auto& c : x) c = -c;
  LaurentPoly g;
  g.coeffs_ = std::move(x);
  g.low_ = 0;
  g.trim();
  return g;
}

}  // namespace ellcomb
