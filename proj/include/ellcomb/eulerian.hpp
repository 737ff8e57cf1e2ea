#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ellcomb/elliptic.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/exact_scalar.hpp"
#include "ellcomb/sampling.hpp"
#include "ellcomb/scalar.hpp"
#include "ellcomb/special_numbers.hpp"
#include "ellcomb/value_sequence.hpp"

// Eulerian numbers: classical, Carlitz q-Eulerian, the generalized numbers
// A_a(n,k) of a bi-infinite sequence, (q-)r-Whitney Eulerian and elliptic
// Eulerian numbers. A_a(n,k) are the connection coefficients in
//   z^n = sum_k A_a(n,k) prod_{i=1}^n (z - a_{i-k}) / (a_{n-k+1} - a_{i-k}).
namespace ellcomb {

enum class EulerianRoute { recurrence, explicit_sum };
enum class QEulerianRoute { recurrence, carlitz_sum };
enum class RWhitneyEulerianRoute { direct_recurrence, engine };
enum class QRWhitneyEulerianRoute { recurrence, explicit_sum, engine };
enum class EllipticEulerianRoute { recurrence, explicit_sum, engine };

// A sequence together with the degree bound N; a_{-N}..a_{N+1} are read
// once and must be pairwise distinct.
template <ScalarField S>
class EulerianParams {
 public:
  static EulerianParams make(ValueSequence<S> seq, long max_degree) {
    if (max_degree < 0) throw DomainError("EulerianParams: max degree must be >= 0");
    EulerianParams p(std::move(seq), max_degree);
    const std::vector<S>& v = p.values_;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (!ScalarTraits<S>::distinct(v[i], v[j]))
          throw DegenerateSequence("EulerianParams: a_" + std::to_string(static_cast<long>(i) - max_degree) +
                                   " and a_" + std::to_string(static_cast<long>(j) - max_degree) + " coincide (" +
                                   ScalarTraits<S>::describe(v[i]) + ")");
    return p;
  }

  const ValueSequence<S>& sequence() const { return seq_; }
  long max_degree() const { return N_; }
  const S& a(long i) const {
    if (i < -N_ || i > N_ + 1)
      throw WindowError("EulerianParams: index " + std::to_string(i) + " outside [" + std::to_string(-N_) + ", " +
                        std::to_string(N_ + 1) + "]");
    return values_[static_cast<std::size_t>(i + N_)];
  }

 private:
  EulerianParams(ValueSequence<S> seq, long N) : seq_(std::move(seq)), N_(N), values_(seq_.values(-N, N + 1)) {}

  ValueSequence<S> seq_;
  long N_;
  std::vector<S> values_;
};

template <ScalarField S>
struct PFactor {
  long n = 0, k = 0;
  S value;
};

namespace detail {

// a_x - a_y, refusing a vanishing difference with the (n, k, i) it belongs to.
template <ScalarField S>
S eulerian_gap(const EulerianParams<S>& p, long x, long y, long n, long k, long i) {
  if (!ScalarTraits<S>::distinct(p.a(x), p.a(y)))
    throw DegenerateSequence("generalized_eulerian: denominator a_" + std::to_string(x) + " - a_" + std::to_string(y) +
                             " vanishes at (n,k,i) = (" + std::to_string(n) + "," + std::to_string(k) + "," +
                             std::to_string(i) + ")");
  return p.a(x) - p.a(y);
}

}  // namespace detail

// P(n,k) = prod_{i=1}^{n+1} (a_{n-k+2} - a_{i-k}) / (a_{n-k+1} - a_{i-1-k}).
template <ScalarField S>
PFactor<S> p_factor(const EulerianParams<S>& p, long n, long k) {
  S v = ScalarTraits<S>::one();
  for (long i = 1; i <= n + 1; ++i)
    v = v * (p.a(n - k + 2) - p.a(i - k)) / detail::eulerian_gap(p, n - k + 1, i - 1 - k, n, k, i);
  return {n, k, v};
}

// Rows 0..N of A_a(n,k).
//   recurrence: A(n+1,k) = a_{n-k+2} A(n,k-1) - a_{-k} P(n,k) A(n,k)
//   explicit:   A(n,k) = sum_j prod_{i != k-j} (a_{n-k+1} - a_{i-k}) / (a_{-j} - a_{i-k}) a_{-j}^n
template <ScalarField S>
std::vector<std::vector<S>> generalized_eulerian(long N, const EulerianParams<S>& p,
                                                 EulerianRoute route = EulerianRoute::recurrence) {
  if (N < 0 || N > p.max_degree()) throw DomainError("generalized_eulerian: N outside the declared degree bound");
  const S zero = ScalarTraits<S>::zero();
  std::vector<std::vector<S>> rows;
  if (route == EulerianRoute::recurrence) {
    rows.push_back({ScalarTraits<S>::one()});
    for (long n = 0; n < N; ++n) {
      const auto& prev = rows.back();
      std::vector<S> next(static_cast<std::size_t>(n) + 2, zero);
      for (long k = 0; k <= n + 1; ++k) {
        S v = zero;
        if (k >= 1) v = v + p.a(n - k + 2) * prev[static_cast<std::size_t>(k - 1)];
        if (k <= n) v = v - p.a(-k) * p_factor(p, n, k).value * prev[static_cast<std::size_t>(k)];
        next[static_cast<std::size_t>(k)] = v;
      }
      rows.push_back(std::move(next));
    }
    return rows;
  }
  for (long n = 0; n <= N; ++n) {
    std::vector<S> row;
    for (long k = 0; k <= n; ++k) {
      S sum = zero;
      for (long j = 0; j <= k; ++j) {
        S term = power(p.a(-j), static_cast<unsigned>(n));
        for (long i = 0; i <= n; ++i)
          if (i != k - j) term = term * (p.a(n - k + 1) - p.a(i - k)) / detail::eulerian_gap(p, -j, i - k, n, k, i);
        sum = sum + term;
      }
      row.push_back(sum);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// prod_{i=1}^n (z - a_{i-k}) / (a_{n-k+1} - a_{i-k}).
template <ScalarField S>
S worpitzky_basis(const S& z, const EulerianParams<S>& p, long n, long k) {
  S v = ScalarTraits<S>::one();
  for (long i = 1; i <= n; ++i) v = v * (z - p.a(i - k)) / detail::eulerian_gap(p, n - k + 1, i - k, n, k, i);
  return v;
}

namespace detail {

template <class S>
double magnitude(const S& x) {
  using std::abs;
  return static_cast<double>(abs(x));
}

}  // namespace detail

// max over z of |z^n - sum_k A(n,k) basis_k(z)| / max(1, |z|^n), for the
// computed row n of `rows`. Exact scalars report 0 when every residual
// vanishes identically and infinity otherwise.
template <ScalarField S>
double worpitzky_residual(long n, const std::vector<std::vector<S>>& rows, const EulerianParams<S>& p,
                          std::span<const S> z_samples) {
  if (n < 0 || n >= static_cast<long>(rows.size())) throw DomainError("worpitzky_residual: row not in table");
  double worst = 0.0;
  for (const S& z : z_samples) {
    S res = power(z, static_cast<unsigned>(n));
    for (long k = 0; k <= n; ++k) res = res - rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] *
                                                 worpitzky_basis(z, p, n, k);
    if constexpr (ScalarTraits<S>::exact) {
      if (!ScalarTraits<S>::is_zero(res)) return std::numeric_limits<double>::infinity();
    } else {
      const double scale = std::max(1.0, std::pow(detail::magnitude(z), static_cast<double>(n)));
      worst = std::max(worst, detail::magnitude(res) / scale);
    }
  }
  return worst;
}

// Integer samples z in [-2, n+3] for exact sequences.
template <ScalarField S>
std::vector<S> worpitzky_integer_samples(long n) {
  std::vector<S> z;
  for (long v = -2; v <= n + 3; ++v) z.push_back(ScalarTraits<S>::from_integer(v));
  return z;
}

// 20 uniform reals in [-3, 3] for numeric sequences.
std::vector<Complex> worpitzky_real_samples(Rng& rng);

// Left side of the identity behind the explicit formula,
//   sum_{j=l}^k prod_{i != k-j} (a_{n-k+1} - a_{i-k}) / (a_{-j} - a_{i-k})
//               prod_{i=1}^n (a_{-j} - a_{i-l}) / (a_{n-l+1} - a_{i-l}),
// which equals delta_{k,l} for l <= k <= n.
template <ScalarField S>
S lagrange_delta_check(long n, long k, long l, const EulerianParams<S>& p) {
  if (l < 0 || l > k || k > n || n > p.max_degree()) throw DomainError("lagrange_delta_check: need 0 <= l <= k <= n <= N");
  S sum = ScalarTraits<S>::zero();
  for (long j = l; j <= k; ++j) {
    S term = ScalarTraits<S>::one();
    for (long i = 0; i <= n; ++i)
      if (i != k - j) term = term * (p.a(n - k + 1) - p.a(i - k)) / detail::eulerian_gap(p, -j, i - k, n, k, i);
    for (long i = 1; i <= n; ++i)
      term = term * (p.a(-j) - p.a(i - l)) / detail::eulerian_gap(p, n - l + 1, i - l, n, l, i);
    sum = sum + term;
  }
  return sum;
}

// Carlitz-convention Eulerian numbers A(n+1,k) = (n-k+2) A(n,k-1) + k A(n,k).
BigInt eulerian_classical(long n, long k, EulerianRoute route = EulerianRoute::recurrence);
IntegerTable eulerian_table(long N);

// A_q(n+1,k) = [n-k+2] A_q(n,k-1) + q^(n-k+1) [k] A_q(n,k).
ExactScalar q_eulerian(long n, long k, QEulerianRoute route = QEulerianRoute::recurrence);
ExactTable q_eulerian_table(long N);

// A_{m,r}(n+1,k) = (m(n-k+2) - r) A(n,k-1) + (mk + r) A(n,k); m >= 1.
BigInt r_whitney_eulerian(long n, long k, long m, long r,
                          RWhitneyEulerianRoute route = RWhitneyEulerianRoute::direct_recurrence);
IntegerTable r_whitney_eulerian_table(long N, long m, long r);

// a_i = [m i - r]_q; m >= 1, r >= 0.
ExactScalar q_r_whitney_eulerian(long n, long k, long m, long r,
                                 QRWhitneyEulerianRoute route = QRWhitneyEulerianRoute::recurrence);
ExactTable q_r_whitney_eulerian_table(long N, long m, long r);

// a_i = [i]_{a,b;q,p}; computed in quad precision and rounded on return.
Complex elliptic_eulerian(long n, long k, const EllipticParams& params,
                          EllipticEulerianRoute route = EllipticEulerianRoute::recurrence);
NumericTable elliptic_eulerian_table(long N, const EllipticParams& params,
                                     EllipticEulerianRoute route = EllipticEulerianRoute::recurrence);

// a_i = [m i - r]_{a,b;q,p}, through the generic engine.
Complex elliptic_r_whitney_eulerian(long n, long k, long m, long r, const EllipticParams& params,
                                    EulerianRoute route = EulerianRoute::recurrence);
NumericTable elliptic_r_whitney_eulerian_table(long N, long m, long r, const EllipticParams& params,
                                               EulerianRoute route = EulerianRoute::recurrence);

// Elliptic Worpitzky residuals of rows 0..N over the real samples, with the
// table computed by `route`.
std::vector<double> elliptic_worpitzky_residuals(long N, const EllipticParams& params,
                                                 std::span<const Complex> z_samples,
                                                 EllipticEulerianRoute route = EllipticEulerianRoute::recurrence);

}  // namespace ellcomb
