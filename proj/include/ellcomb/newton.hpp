#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ellcomb/errors.hpp"
#include "ellcomb/scalar.hpp"
#include "ellcomb/value_sequence.hpp"

// Generic engine over a value sequence a_0, a_1, ...: Newton-basis falling
// factorials, complete homogeneous symmetric functions, connection
// coefficients, the generalized difference operator and divided differences.
namespace ellcomb {

template <ScalarField S>
struct NewtonCoefficients {
  long n = 0;
  std::vector<S> entries;  // entries[k] = C_{n,k}, k = 0..n
};

// Throws DegenerateSequence if two of values[0..count) coincide.
template <ScalarField S>
void require_distinct(std::span<const S> values, const char* context) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (!ScalarTraits<S>::distinct(values[i], values[j]))
        throw DegenerateSequence(std::string(context) + ": values at positions " + std::to_string(i) + " and " +
                                 std::to_string(j) + " coincide (" + ScalarTraits<S>::describe(values[i]) + ")");
}

// prod_{i = 0..count-1, i != j} (a_j - a_i).
template <ScalarField S>
S vandermonde_row(std::span<const S> a, std::size_t j) {
  S prod = ScalarTraits<S>::one();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != j) prod = prod * (a[j] - a[i]);
  return prod;
}

// z (-)_n = prod_{i=0}^{n-1} (z - a_i).
template <ScalarField S>
S falling_factorial(const S& z, const ValueSequence<S>& seq, long n) {
  S prod = ScalarTraits<S>::one();
  for (long i = 0; i < n; ++i) prod = prod * (z - seq.at(i));
  return prod;
}

// a_n! = prod_{i<n} (a_n - a_i).
template <ScalarField S>
S gen_factorial(const ValueSequence<S>& seq, long n) {
  return falling_factorial(seq.at(n), seq, n);
}

// h_n(a_0..a_k) by the recursion
//   h_m(a_0..a_j) = h_m(a_0..a_{j-1}) + a_j h_{m-1}(a_0..a_j).
template <ScalarField S>
S h_recurrence(long n, std::span<const S> a) {
  if (n < 0 || a.empty()) return ScalarTraits<S>::zero();
  // row[m] holds h_m of the variables processed so far.
  std::vector<S> row(static_cast<std::size_t>(n) + 1, ScalarTraits<S>::zero());
  row[0] = ScalarTraits<S>::one();
  for (const S& v : a)
    for (std::size_t m = 1; m < row.size(); ++m) row[m] = row[m] + v * row[m - 1];
  return row.back();
}

// h_n(a_0..a_k) = sum_j a_j^(n+k) / prod_{i != j} (a_j - a_i).
template <ScalarField S>
S h_explicit(long n, std::span<const S> a) {
  if (n < 0 || a.empty()) return ScalarTraits<S>::zero();
  require_distinct(a, "h_explicit");
  const auto k = static_cast<unsigned>(a.size() - 1);
  S sum = ScalarTraits<S>::zero();
  for (std::size_t j = 0; j < a.size(); ++j)
    sum = sum + checked_div(power(a[j], static_cast<unsigned>(n) + k), vandermonde_row(a, j));
  return sum;
}

// a-binomial coefficient (-1)^(n-k) a_n! / prod_{i != k, i <= n} (a_k - a_i).
template <ScalarField S>
S a_binomial(long n, long k, const ValueSequence<S>& seq) {
  if (k < 0 || k > n) throw DomainError("a_binomial: need 0 <= k <= n");
  const std::vector<S> a = seq.values(0, n);
  require_distinct(std::span<const S>(a), "a_binomial");
  S r = checked_div(gen_factorial(seq, n), vandermonde_row(std::span<const S>(a), static_cast<std::size_t>(k)));
  return (n - k) % 2 == 0 ? r : -r;
}

// Rows 0..n of C_{m,k} from
//   C_{0,0} = c0,  C_{m+1,k} = C_{m,k-1} + (a_k - c_{m+1}) C_{m,k},
// where c holds c_1..c_n.
template <ScalarField S>
std::vector<NewtonCoefficients<S>> connection_recurrence(const S& c0, std::span<const S> c,
                                                         const ValueSequence<S>& seq) {
  const long n = static_cast<long>(c.size());
  const std::vector<S> a = seq.values(0, n);
  std::vector<NewtonCoefficients<S>> rows;
  rows.push_back({0, {c0}});
  for (long m = 0; m < n; ++m) {
    const auto& prev = rows.back().entries;
    NewtonCoefficients<S> next{m + 1, std::vector<S>(static_cast<std::size_t>(m) + 2, ScalarTraits<S>::zero())};
    for (long k = 0; k <= m + 1; ++k) {
      S v = ScalarTraits<S>::zero();
      if (k >= 1) v = v + prev[static_cast<std::size_t>(k - 1)];
      if (k <= m) v = v + (a[static_cast<std::size_t>(k)] - c[static_cast<std::size_t>(m)]) * prev[static_cast<std::size_t>(k)];
      next.entries[static_cast<std::size_t>(k)] = v;
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

// C_{n,k} = c0 sum_{j=0}^k prod_{i=1}^n (a_j - c_i) / prod_{i != j} (a_j - a_i),
// with c holding c_1..c_n.
template <ScalarField S>
S connection_explicit(const S& c0, std::span<const S> c, const ValueSequence<S>& seq, long k) {
  if (k < 0 || k > static_cast<long>(c.size())) return ScalarTraits<S>::zero();
  const std::vector<S> a = seq.values(0, k);
  const std::span<const S> nodes(a);
  require_distinct(nodes, "connection_explicit");
  S sum = ScalarTraits<S>::zero();
  for (std::size_t j = 0; j < a.size(); ++j) {
    S num = ScalarTraits<S>::one();
    for (const S& ci : c) num = num * (a[j] - ci);
    sum = sum + checked_div(num, vandermonde_row(nodes, j));
  }
  return c0 * sum;
}

// Divided differences f[a_0], f[a_0,a_1], ..., f[a_0..a_n]: the coefficients
// of the interpolating polynomial in the Newton basis prod_{i<k} (z - a_i).
template <ScalarField S>
NewtonCoefficients<S> newton_oracle(std::span<const S> f_values, std::span<const S> nodes) {
  if (f_values.size() != nodes.size() || nodes.empty())
    throw DomainError("newton_oracle: need one value per node");
  require_distinct(nodes, "newton_oracle");
  std::vector<S> table(f_values.begin(), f_values.end());
  NewtonCoefficients<S> out{static_cast<long>(nodes.size()) - 1, {table[0]}};
  for (std::size_t level = 1; level < nodes.size(); ++level) {
    for (std::size_t i = nodes.size() - 1; i >= level; --i)
      table[i] = checked_div(table[i] - table[i - 1], nodes[i] - nodes[i - level]);
    out.entries.push_back(table[level]);
  }
  return out;
}

template <ScalarField S>
NewtonCoefficients<S> newton_oracle(const std::function<S(const S&)>& f, const ValueSequence<S>& seq, long n) {
  const std::vector<S> nodes = seq.values(0, n);
  std::vector<S> values;
  for (const S& x : nodes) values.push_back(f(x));
  return newton_oracle(std::span<const S>(values), std::span<const S>(nodes));
}

// A function f(z; x_0, x_1, ...) of the shift variable z and a sequence x.
template <ScalarField S>
using ShiftableFunction = std::function<S(long z, const ValueSequence<S>& x)>;

// (Delta_x^j f) at z = 0, x_i = a_i, through the closed expansion
//   Delta_x^j = sum_{k=0}^j x_j! / prod_{i != k} (x_k - x_i) E_{z,x}^k,
// where E_{z,x}^k f(z; x) = f(z + k; x_k, x_{k+1}, ...).
template <ScalarField S>
S difference_operator(long j, const ShiftableFunction<S>& f, const ValueSequence<S>& seq) {
  if (j < 0) throw DomainError("difference_operator: negative order");
  const std::vector<S> a = seq.values(0, j);
  const std::span<const S> nodes(a);
  require_distinct(nodes, "difference_operator");
  const S fac = gen_factorial(seq, j);
  S sum = ScalarTraits<S>::zero();
  for (long k = 0; k <= j; ++k) {
    const S coeff = checked_div(fac, vandermonde_row(nodes, static_cast<std::size_t>(k)));
    sum = sum + coeff * f(k, seq.shifted(k));
  }
  return sum;
}

namespace detail {

template <ScalarField S>
S difference_by_recursion(long n, long z, long s, const ShiftableFunction<S>& f, const ValueSequence<S>& seq) {
  if (n == 0) return f(z, seq.shifted(s));
  // Delta^n = E Delta^(n-1) - c_(n-1)(x) Delta^(n-1) with
  // c_m(x) = prod_{j=0}^{m-1} (x_{m+1} - x_{j+1}) / (x_m - x_j), taken at x_i = a_(i+s).
  const long m = n - 1;
  S c = ScalarTraits<S>::one();
  for (long j = 0; j < m; ++j)
    c = c * checked_div(seq.at(s + m + 1) - seq.at(s + j + 1), seq.at(s + m) - seq.at(s + j));
  return difference_by_recursion(m, z + 1, s + 1, f, seq) - c * difference_by_recursion(m, z, s, f, seq);
}

}  // namespace detail

// The same operator through its recursive definition; exponential in j and
// kept as an independent check of the closed expansion.
template <ScalarField S>
S difference_operator_by_recursion(long j, const ShiftableFunction<S>& f, const ValueSequence<S>& seq) {
  if (j < 0) throw DomainError("difference_operator_by_recursion: negative order");
  return detail::difference_by_recursion(j, 0, 0, f, seq);
}

}  // namespace ellcomb
