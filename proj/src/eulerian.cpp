#include "ellcomb/eulerian.hpp"

#include <map>
#include <optional>

#include "elliptic_support.hpp"
#include "ellcomb/elliptic_hp.hpp"
#include "ellcomb/q_objects.hpp"

namespace ellcomb {

using detail::elliptic_guarded;
using detail::to_numeric;

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": n must be >= 0");
}

bool outside(long n, long k) { return k < 0 || k > n; }

long binom2(long k) { return k * (k - 1) / 2; }

std::string str(long v) { return std::to_string(v); }

BigInt to_integer(const ExactScalar& x) {
  const BigRational v = x.evaluate_at_one();
  if (v.get_den() != 1 || !(ExactScalar(LaurentPoly(v.get_num()), LaurentPoly(1)) == x))
    throw DomainError("expected an integer, got " + x.to_string());
  return v.get_num();
}

}  // namespace

std::vector<Complex> worpitzky_real_samples(Rng& rng) {
  std::vector<Complex> z;
  for (int i = 0; i < 20; ++i) z.emplace_back(rng.uniform(-3.0, 3.0), 0.0);
  return z;
}

// ---- classical and q ----

IntegerTable eulerian_table(long N) {
  IntegerTable t{"eulerian", {{"N", str(N)}}, {}};
  t.rows = build_triangle<BigInt>(
      N, [](long n, long k) { return BigInt(n - k + 2); }, [](long, long k) { return BigInt(k); });
  return t;
}

BigInt eulerian_classical(long n, long k, EulerianRoute route) {
  require_nonnegative(n, "eulerian_classical");
  if (outside(n, k)) return 0;
  if (route == EulerianRoute::recurrence) return eulerian_table(n).at(n, k);
  BigInt sum = 0;
  for (long j = 0; j <= k; ++j) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), BigInt(k - j).get_mpz_t(), static_cast<unsigned long>(n));
    const BigInt term = binomial(n + 1, j) * power;
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

ExactTable q_eulerian_table(long N) {
  ExactTable t{"q-eulerian", {{"N", str(N)}}, {}};
  t.rows = build_triangle<ExactScalar>(
      N, [](long n, long k) { return q_number(n - k + 2); },
      [](long n, long k) { return ExactScalar::q_power(static_cast<int>(n - k + 1)) * q_number(k); });
  return t;
}

ExactScalar q_eulerian(long n, long k, QEulerianRoute route) {
  require_nonnegative(n, "q_eulerian");
  if (outside(n, k)) return ExactScalar(0);
  if (route == QEulerianRoute::recurrence) return q_eulerian_table(n).at(n, k);
  ExactScalar sum(0);
  for (long j = 0; j <= k; ++j) {
    const ExactScalar term =
        ExactScalar::q_power(static_cast<int>(binom2(j))) * q_binomial(n + 1, j) * q_number(k - j).pow(static_cast<int>(n));
    sum += j % 2 == 0 ? term : -term;
  }
  return ExactScalar::q_power(static_cast<int>(binom2(n - k + 1) - binom2(k))) * sum;
}

// ---- r-Whitney ----

IntegerTable r_whitney_eulerian_table(long N, long m, long r) {
  if (m < 1) throw DomainError("r_whitney_eulerian: need m >= 1");
  IntegerTable t{"r-whitney-eulerian", {{"N", str(N)}, {"m", str(m)}, {"r", str(r)}}, {}};
  t.rows = build_triangle<BigInt>(
      N, [m, r](long n, long k) { return BigInt(m * (n - k + 2) - r); },
      [m, r](long, long k) { return BigInt(m * k + r); });
  return t;
}

BigInt r_whitney_eulerian(long n, long k, long m, long r, RWhitneyEulerianRoute route) {
  require_nonnegative(n, "r_whitney_eulerian");
  if (m < 1) throw DomainError("r_whitney_eulerian: need m >= 1");
  if (outside(n, k)) return 0;
  if (route == RWhitneyEulerianRoute::direct_recurrence) return r_whitney_eulerian_table(n, m, r).at(n, k);
  const auto p = EulerianParams<ExactScalar>::make(affine_whitney_sequence<ExactScalar>(m, r), n);
  return to_integer(generalized_eulerian(n, p)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
}

namespace {

void require_q_whitney(long m, long r) {
  if (m < 1 || r < 0) throw DomainError("q_r_whitney_eulerian: need m >= 1 and r >= 0");
}

}  // namespace

ExactTable q_r_whitney_eulerian_table(long N, long m, long r) {
  require_q_whitney(m, r);
  ExactTable t{"q-r-whitney-eulerian", {{"N", str(N)}, {"m", str(m)}, {"r", str(r)}}, {}};
  t.rows = build_triangle<ExactScalar>(
      N, [m, r](long n, long k) { return q_number(m * (n - k + 2) - r); },
      [m, r](long n, long k) {
        return ExactScalar::q_power(static_cast<int>(m * (n + 1) - m * k - r)) * q_number(m * k + r);
      });
  return t;
}

ExactScalar q_r_whitney_eulerian(long n, long k, long m, long r, QRWhitneyEulerianRoute route) {
  require_nonnegative(n, "q_r_whitney_eulerian");
  require_q_whitney(m, r);
  if (outside(n, k)) return ExactScalar(0);
  switch (route) {
    case QRWhitneyEulerianRoute::recurrence:
      return q_r_whitney_eulerian_table(n, m, r).at(n, k);
    case QRWhitneyEulerianRoute::explicit_sum: {
      ExactScalar sum(0);
      for (long j = 0; j <= k; ++j) {
        const long e = m * binom2(n - j + 1) - n * (m * (k - j) + r);
        const ExactScalar term = ExactScalar::q_power(static_cast<int>(e)) *
                                 q_binomial(n + 1, j).substitute_power(static_cast<int>(m)) *
                                 q_number(m * (k - j) + r).pow(static_cast<int>(n));
        sum += j % 2 == 0 ? term : -term;
      }
      return sum;
    }
    case QRWhitneyEulerianRoute::engine: {
      const auto p = EulerianParams<ExactScalar>::make(q_whitney_sequence(m, r), n);
      return generalized_eulerian(n, p)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
  }
  throw DomainError("q_r_whitney_eulerian: unknown route");
}

// ---- elliptic ----

namespace {

bool invertible(const EllipticHP& e) {
  return e.level() == Degeneration::none || e.level() == Degeneration::p_zero;
}

// Evaluators for (a q^2s, b q^s), created on first use.
class ShiftCache {
 public:
  explicit ShiftCache(const EllipticHP& e) : e_(e) {}
  const EllipticHP& operator()(long s) {
    auto it = shifted_.find(s);
    if (it == shifted_.end()) it = shifted_.emplace(s, e_.shifted(2 * s, s)).first;
    return it->second;
  }

 private:
  EllipticHP e_;
  std::map<long, EllipticHP> shifted_;
};

// The sequence a_i = [m i - r] as 100-digit values over the window of N.
EulerianParams<ComplexWide> wide_params(const EllipticHP& e, long N, long m = 1, long r = 0) {
  const ValueSequence<ComplexWide> seq("elliptic-wide", [e, m, r](long i) { return to_wide(e.number(m * i - r)); });
  return EulerianParams<ComplexWide>::make(seq, N);
}

std::vector<std::vector<ComplexWide>> elliptic_eulerian_rows(long N, const EllipticParams& params,
                                                             EllipticEulerianRoute route) {
  const EllipticHP e(params);
  // -a_{-k} = W(-1) [k]_{1/a,b/a}; once a is sent to 0 only the left side exists.
  const auto minus_negative = [&e](const std::optional<EllipticHP>& inv, long k) {
    return inv ? e.weight(-1) * inv->number(k) : -e.number(-k);
  };
  std::optional<EllipticHP> inv;
  if (invertible(e)) inv = e.inverted();
  ShiftCache shift(e);
  std::vector<std::vector<ComplexWide>> rows;
  switch (route) {
    case EllipticEulerianRoute::recurrence: {
      rows.push_back({ComplexWide(1)});
      for (long n = 0; n < N; ++n) {
        const auto& prev = rows.back();
        std::vector<ComplexWide> next(static_cast<std::size_t>(n) + 2, ComplexWide(0));
        for (long k = 0; k <= n + 1; ++k) {
          ComplexHP v(0);
          if (k >= 1) v += e.number(n - k + 2) * to_hp(prev[static_cast<std::size_t>(k - 1)]);
          if (k <= n) {
            ComplexHP P = shift(-k).weight(n + 1);
            for (long i = 1; i <= n + 1; ++i) P *= shift(i - k).number(n - i + 2) / shift(i - k - 1).number(n - i + 2);
            v += minus_negative(inv, k) * P * to_hp(prev[static_cast<std::size_t>(k)]);
          }
          next[static_cast<std::size_t>(k)] = to_wide(v);
        }
        rows.push_back(std::move(next));
      }
      return rows;
    }
    case EllipticEulerianRoute::explicit_sum: {
      // (-1)^n W(-1)^n sum_j prod_{i != j} [n-i+1]_s / [j-i]_s [k-j]_{1/a,b/a}^n with
      // s = (aq^2(i-k), bq^(i-k)); the last factor times -W(-1) is [j-k].
      const ComplexWide w = to_wide(e.weight(-1));
      for (long n = 0; n <= N; ++n) {
        std::vector<ComplexWide> row;
        for (long k = 0; k <= n; ++k) {
          ComplexWide sum(0);
          for (long j = 0; j <= k; ++j) {
            ComplexWide term = inv ? ipow(-w * to_wide(inv->number(k - j)), n) : ipow(to_wide(e.number(j - k)), n);
            for (long i = 0; i <= n; ++i)
              if (i != j) term *= to_wide(shift(i - k).number(n - i + 1)) / to_wide(shift(i - k).number(j - i));
            sum += term;
          }
          row.push_back(sum);
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }
    case EllipticEulerianRoute::engine:
      return generalized_eulerian(N, wide_params(e, N));
  }
  throw DomainError("elliptic_eulerian: unknown route");
}

}  // namespace

NumericTable elliptic_eulerian_table(long N, const EllipticParams& params, EllipticEulerianRoute route) {
  require_nonnegative(N, "elliptic_eulerian");
  return elliptic_guarded(
      [&] { return to_numeric("elliptic-eulerian", describe_params(params), elliptic_eulerian_rows(N, params, route)); });
}

Complex elliptic_eulerian(long n, long k, const EllipticParams& params, EllipticEulerianRoute route) {
  require_nonnegative(n, "elliptic_eulerian");
  if (outside(n, k)) return 0.0;
  return elliptic_eulerian_table(n, params, route).at(n, k);
}

NumericTable elliptic_r_whitney_eulerian_table(long N, long m, long r, const EllipticParams& params,
                                               EulerianRoute route) {
  require_nonnegative(N, "elliptic_r_whitney_eulerian");
  if (m < 1) throw DomainError("elliptic_r_whitney_eulerian: need m >= 1");
  auto record = describe_params(params);
  record.insert(record.begin(), {{"m", str(m)}, {"r", str(r)}});
  return elliptic_guarded([&] {
    return to_numeric("elliptic-r-whitney-eulerian", record,
                      generalized_eulerian(N, wide_params(EllipticHP(params), N, m, r), route));
  });
}

Complex elliptic_r_whitney_eulerian(long n, long k, long m, long r, const EllipticParams& params,
                                    EulerianRoute route) {
  require_nonnegative(n, "elliptic_r_whitney_eulerian");
  if (outside(n, k)) return 0.0;
  return elliptic_r_whitney_eulerian_table(n, m, r, params, route).at(n, k);
}

std::vector<double> elliptic_worpitzky_residuals(long N, const EllipticParams& params,
                                                 std::span<const Complex> z_samples, EllipticEulerianRoute route) {
  require_nonnegative(N, "elliptic_worpitzky_residuals");
  return elliptic_guarded([&] {
    const auto rows = elliptic_eulerian_rows(N, params, route);
    const auto p = wide_params(EllipticHP(params), N);
    std::vector<ComplexWide> z;
    for (const Complex& v : z_samples) z.push_back(to_wide(to_hp(v)));
    std::vector<double> out;
    for (long n = 0; n <= N; ++n) out.push_back(worpitzky_residual(n, rows, p, std::span<const ComplexWide>(z)));
    return out;
  });
}

}  // namespace ellcomb
