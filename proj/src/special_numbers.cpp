#include "ellcomb/special_numbers.hpp"

#include <map>
#include <sstream>

#include "elliptic_support.hpp"
#include "ellcomb/elliptic_hp.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/newton.hpp"
#include "ellcomb/q_objects.hpp"
#include "ellcomb/value_sequence.hpp"

namespace ellcomb {

using detail::elliptic_guarded;
using detail::hp_values;
using detail::narrow;
using detail::RowsHP;
using detail::to_numeric;
using detail::widen;

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": n must be >= 0");
}

bool outside(long n, long k) { return k < 0 || k > n; }

long binom2(long k) { return k * (k - 1) / 2; }

std::string str(long v) { return std::to_string(v); }

template <class S>
S h_by_route(long n, const std::vector<S>& a, HRoute route) {
  const std::span<const S> view(a);
  return route == HRoute::recurrence ? h_recurrence<S>(n, view) : h_explicit<S>(n, view);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> describe_params(const EllipticParams& params) {
  return {{"a", format_complex(params.a())},
          {"b", format_complex(params.b())},
          {"q", format_complex(params.q())},
          {"p", format_complex(params.p())},
          {"level", to_string(params.level())}};
}

// ---- classical ----

IntegerTable stirling2_table(long N) {
  IntegerTable t{"stirling2", {{"N", str(N)}}, {}};
  t.rows = build_triangle<BigInt>(
      N, [](long, long) { return BigInt(1); }, [](long, long k) { return BigInt(k); });
  return t;
}

BigInt stirling2(long n, long k, StirlingRoute route) {
  require_nonnegative(n, "stirling2");
  if (outside(n, k)) return 0;
  if (route == StirlingRoute::recurrence) return stirling2_table(n).at(n, k);
  BigInt sum = 0;
  for (long j = 0; j <= k; ++j) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), BigInt(k - j).get_mpz_t(), static_cast<unsigned long>(n));
    const BigInt term = binomial(k, j) * power;
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return BigInt(sum / factorial(k));
}

BigInt lah_number(long n, long k) {
  require_nonnegative(n, "lah_number");
  if (outside(n, k)) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  return BigInt(binomial(n - 1, k - 1) * factorial(n) / factorial(k));
}

// ---- q ----

ExactTable q_lah_table(long N) {
  require_nonnegative(N, "q_lah_table");
  std::vector<ExactScalar> c;
  for (long i = 1; i <= N; ++i) c.push_back(q_number(-(i - 1)));
  ExactTable t{"q-lah", {{"N", str(N)}}, {}};
  for (const auto& row : connection_recurrence<ExactScalar>(ExactScalar(1), c, q_number_sequence()))
    t.rows.push_back(row.entries);
  return t;
}

ExactTable q_stirling2_table(long N) {
  ExactTable t{"q-stirling2", {{"N", str(N)}}, {}};
  t.rows = build_triangle<ExactScalar>(
      N, [](long, long) { return ExactScalar(1); }, [](long, long k) { return q_number(k); });
  return t;
}

ExactScalar q_stirling2(long n, long k, QStirlingRoute route) {
  require_nonnegative(n, "q_stirling2");
  if (outside(n, k)) return ExactScalar(0);
  switch (route) {
    case QStirlingRoute::recurrence:
      return q_stirling2_table(n).at(n, k);
    case QStirlingRoute::h_special:
      return h_explicit<ExactScalar>(n - k, q_number_sequence().values(0, k));
    case QStirlingRoute::carlitz_sum: {
      ExactScalar sum(0);
      for (long j = 0; j <= k; ++j) {
        const ExactScalar term = ExactScalar::q_power(static_cast<int>(binom2(j))) * q_binomial(k, j) *
                                 q_number(k - j).pow(static_cast<int>(n));
        sum += j % 2 == 0 ? term : -term;
      }
      return ExactScalar::q_power(static_cast<int>(-binom2(k))) * sum / q_factorial(k);
    }
  }
  throw DomainError("q_stirling2: unknown route");
}

// ---- elliptic Stirling ----

namespace {

ComplexHP one_hp() { return ComplexHP(1); }

RowsHP elliptic_stirling_rows(long N, const EllipticParams& params, EllipticStirlingRoute route) {
  const EllipticHP e(params);
  const std::vector<ComplexHP> nodes = hp_values(e, 0, std::max<long>(N, 0));
  switch (route) {
    case EllipticStirlingRoute::recurrence:
      return build_triangle<ComplexHP>(
          N, [](long, long) { return one_hp(); },
          [&nodes](long, long k) { return nodes[static_cast<std::size_t>(k)]; });
    case EllipticStirlingRoute::h_special:
      return tabulate<ComplexHP>(N, [&nodes](long n, long k) {
        return h_explicit<ComplexHP>(n - k, std::span<const ComplexHP>(nodes.data(), static_cast<std::size_t>(k) + 1));
      });
    case EllipticStirlingRoute::explicit_corollary: {
      // [k-j] - [i] = W(i) [k-j-i]_{aq^2i, bq^i}
      std::vector<ComplexHP> w;
      std::vector<EllipticHP> shifted;
      for (long i = 0; i <= N; ++i) {
        w.push_back(e.weight(i));
        shifted.push_back(e.shifted(2 * i, i));
      }
      return tabulate<ComplexHP>(N, [&](long n, long k) {
        ComplexHP sum(0);
        for (long j = 0; j <= k; ++j) {
          ComplexHP den(1);
          for (long i = 0; i <= k; ++i)
            if (i != k - j) den *= w[static_cast<std::size_t>(i)] * shifted[static_cast<std::size_t>(i)].number(k - j - i);
          sum += ipow(nodes[static_cast<std::size_t>(k - j)], n) / den;
        }
        return sum;
      });
    }
    case EllipticStirlingRoute::newton_oracle: {
      // Divided differences of z^n at [0], ..., [n].
      const std::vector<ComplexWide> wide = widen(nodes);
      RowsHP rows;
      for (long n = 0; n <= N; ++n) {
        const std::span<const ComplexWide> at(wide.data(), static_cast<std::size_t>(n) + 1);
        std::vector<ComplexWide> f;
        for (const ComplexWide& x : at) f.push_back(ipow(x, n));
        rows.push_back(narrow(newton_oracle<ComplexWide>(std::span<const ComplexWide>(f), at).entries));
      }
      return rows;
    }
  }
  throw DomainError("elliptic_stirling2: unknown route");
}

}  // namespace

NumericTable elliptic_stirling2_table(long N, const EllipticParams& params, EllipticStirlingRoute route) {
  return elliptic_guarded([&] {
    return to_numeric("elliptic-stirling2", describe_params(params), elliptic_stirling_rows(N, params, route));
  });
}

Complex elliptic_stirling2(long n, long k, const EllipticParams& params, EllipticStirlingRoute route) {
  require_nonnegative(n, "elliptic_stirling2");
  if (outside(n, k)) return 0.0;
  check_genericity(params, 0, k);
  return elliptic_stirling2_table(n, params, route).at(n, k);
}

Complex elliptic_stirling2_weighted(long n, long k, const EllipticParams& params) {
  require_nonnegative(n, "elliptic_stirling2_weighted");
  if (outside(n, k)) return 0.0;
  return elliptic_guarded([&] {
    const EllipticHP e(params);
    ComplexHP w(1);
    for (long j = 0; j < k; ++j) w *= e.weight(j);
    return to_double(elliptic_stirling_rows(n, params, EllipticStirlingRoute::recurrence)[static_cast<std::size_t>(n)]
                                            [static_cast<std::size_t>(k)] * w);
  });
}

// ---- Whitney and shifted ----

WhitneyValue whitney_qr(long n, long k, long m, long r, HRoute route) {
  require_nonnegative(n, "whitney_qr");
  if (m < 1 || r < 0) throw DomainError("whitney_qr: need m >= 1 and r >= 0");
  if (outside(n, k)) return {ExactScalar(0), ExactScalar(0)};
  const ExactScalar star = h_by_route(n - k, q_whitney_sequence(m, -r).values(0, k), route);
  return {star, star * ExactScalar::q_power(static_cast<int>(k * r + m * binom2(k)))};
}

ExactTable whitney_qr_table(long N, long m, long r, bool normalized) {
  if (m < 1 || r < 0) throw DomainError("whitney_qr: need m >= 1 and r >= 0");
  ExactTable t{normalized ? "q-whitney" : "q-whitney-star",
               {{"N", str(N)}, {"m", str(m)}, {"r", str(r)}},
               {}};
  // W*(n+1,k) = W*(n,k-1) + [km+r] W*(n,k)
  t.rows = build_triangle<ExactScalar>(
      N, [](long, long) { return ExactScalar(1); }, [m, r](long, long k) { return q_number(k * m + r); });
  if (normalized)
    for (auto& row : t.rows)
      for (std::size_t k = 0; k < row.size(); ++k) {
        const long kk = static_cast<long>(k);
        row[k] *= ExactScalar::q_power(static_cast<int>(kk * r + m * binom2(kk)));
      }
  return t;
}

Complex st_shifted_stirling(long n, long k, long m, long r, Complex s, Complex t, HRoute route) {
  require_nonnegative(n, "st_shifted_stirling");
  if (outside(n, k)) return 0.0;
  const NumericSequence seq = st_sequence(m, r, s, t);
  return h_by_route(n - k, seq.values(0, k), route);
}

NumericTable st_shifted_stirling_table(long N, long m, long r, Complex s, Complex t) {
  const NumericSequence seq = st_sequence(m, r, s, t);
  NumericTable table{"st-shifted-stirling",
                     {{"m", str(m)}, {"r", str(r)}, {"s", format_complex(s)}, {"t", format_complex(t)}},
                     {}};
  table.rows = build_triangle<Complex>(
      N, [](long, long) { return Complex(1.0); }, [&seq](long, long k) { return seq.at(k); });
  return table;
}

Complex elliptic_shifted_stirling(long n, long k, long m, long r, const EllipticParams& params, HRoute route) {
  require_nonnegative(n, "elliptic_shifted_stirling");
  if (outside(n, k)) return 0.0;
  return elliptic_guarded([&] {
    const std::vector<ComplexHP> a = hp_values(EllipticHP(params), 0, k, m, r);
    return to_double(h_by_route(n - k, a, route));
  });
}

NumericTable elliptic_shifted_stirling_table(long N, long m, long r, const EllipticParams& params) {
  auto record = describe_params(params);
  record.insert(record.begin(), {{"m", str(m)}, {"r", str(r)}});
  return elliptic_guarded([&] {
    const std::vector<ComplexHP> a = hp_values(EllipticHP(params), 0, std::max<long>(N, 0), m, r);
    return to_numeric("elliptic-shifted-stirling", record,
                      build_triangle<ComplexHP>(
                          N, [](long, long) { return one_hp(); },
                          [&a](long, long k) { return a[static_cast<std::size_t>(k)]; }));
  });
}

// ---- rook ----

FerrersBoard FerrersBoard::make(std::vector<long> heights) {
  for (long b : heights)
    if (b < 0) throw DomainError("FerrersBoard: column heights must be >= 0");
  FerrersBoard board;
  board.heights_ = std::move(heights);
  return board;
}

FerrersBoard FerrersBoard::staircase(long n) {
  std::vector<long> h;
  for (long i = 1; i <= n; ++i) h.push_back(i - 1);
  return make(std::move(h));
}

FerrersBoard FerrersBoard::rectangle(long n, long height) { return make(std::vector<long>(static_cast<std::size_t>(n), height)); }

std::string FerrersBoard::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < heights_.size(); ++i) os << (i ? "," : "") << heights_[i];
  return os.str();
}

namespace {

ComplexHP rook_hp(const FerrersBoard& board, long j, const EllipticHP& e, RookRoute route) {
  const long n = board.columns();
  const long k = n - j;
  std::map<long, EllipticHP> shifted;
  const auto shift = [&](long s) -> const EllipticHP& {
    auto it = shifted.find(s);
    if (it == shifted.end()) it = shifted.emplace(s, e.shifted(2 * s, s)).first;
    return it->second;
  };
  if (route == RookRoute::explicit_sum) {
    ComplexHP sum(0);
    const ComplexHP wk = e.weight(k);
    for (long l = 0; l <= k; ++l) {
      // Numerator factor [l - s]_s and denominator factor [l - i]_i coincide
      // when s = i; such pairs cancel before anything is multiplied.
      std::map<long, long> pending;
      for (long i = 1; i <= n; ++i) ++pending[i - 1 - board.height(i)];
      for (long i = 0; i <= k; ++i)
        if (i != l) --pending[i];
      ComplexHP num = l == k ? ComplexHP(1) : e.weight(l) / wk;
      ComplexHP den(1);
      for (const auto& [s, count] : pending)
        for (long t = 0; t < std::abs(count); ++t) (count > 0 ? num : den) *= shift(s).number(l - s);
      sum += num / den;
    }
    return sum;
  }
  // [z - s]_{aq^2s, bq^s} = W(s)^-1 ([z] - [s]): c_0 collects the inverse weights.
  ComplexHP c0(1);
  std::vector<ComplexHP> c;
  for (long i = 1; i <= n; ++i) {
    const long s = i - 1 - board.height(i);
    c0 /= e.weight(s);
    c.push_back(e.number(s));
  }
  const ValueSequence<ComplexWide> seq("elliptic-wide", [e](long i) { return to_wide(e.number(i)); });
  ComplexWide C = connection_explicit<ComplexWide>(to_wide(c0), widen(c), seq, k);
  for (long i = 1; i <= k; ++i) C *= to_wide(e.weight(i - 1));
  return to_hp(C);
}

}  // namespace

Complex elliptic_rook(const FerrersBoard& board, long j, const EllipticParams& params, RookRoute route) {
  if (j < 0 || j > board.columns()) return 0.0;
  return elliptic_guarded([&] { return to_double(rook_hp(board, j, EllipticHP(params), route)); });
}

std::vector<Complex> elliptic_rook_numbers(const FerrersBoard& board, const EllipticParams& params, RookRoute route) {
  const EllipticHP e(params);
  std::vector<Complex> out;
  for (long j = 0; j <= board.columns(); ++j)
    out.push_back(elliptic_guarded([&] { return to_double(rook_hp(board, j, e, route)); }));
  return out;
}

// ---- Lah ----

namespace {

RowsHP elliptic_lah_rows(long N, const EllipticParams& params, LahRoute route) {
  const EllipticHP e(params);
  switch (route) {
    case LahRoute::recurrence: {
      std::vector<EllipticHP> shifted;
      for (long n = 0; n < N; ++n) shifted.push_back(e.shifted(-2 * n, -n));
      return build_triangle<ComplexHP>(
          N, [](long, long) { return one_hp(); },
          [&](long n, long k) { return e.weight(-n) * shifted[static_cast<std::size_t>(n)].number(n + k); });
    }
    case LahRoute::explicit_sum: {
      const std::vector<ComplexWide> nodes = widen(hp_values(e, 0, std::max<long>(N, 0)));
      const std::vector<ComplexWide> negative = widen(hp_values(e, -N, 0));  // [-N], ..., [0]
      return tabulate<ComplexHP>(N, [&](long n, long k) {
        const std::span<const ComplexWide> a(nodes.data(), static_cast<std::size_t>(k) + 1);
        require_distinct(a, "elliptic_lah");
        ComplexWide sum(0);
        for (long j = 0; j <= k; ++j) {
          ComplexWide num(1);
          for (long i = 1; i <= n; ++i) num *= a[static_cast<std::size_t>(j)] - negative[static_cast<std::size_t>(i - n + N)];
          sum += num / vandermonde_row(a, static_cast<std::size_t>(j));
        }
        return to_hp(sum);
      });
    }
    case LahRoute::oracle: {
      // Divided differences of the rising factorial over c_i = [-(i-1)].
      const std::vector<ComplexWide> nodes = widen(hp_values(e, 0, std::max<long>(N, 0)));
      const std::vector<ComplexWide> c = widen(hp_values(e, -std::max<long>(N - 1, 0), 0));  // [-(N-1)], ..., [0]
      RowsHP rows;
      for (long n = 0; n <= N; ++n) {
        const std::span<const ComplexWide> at(nodes.data(), static_cast<std::size_t>(n) + 1);
        std::vector<ComplexWide> f;
        for (const ComplexWide& z : at) {
          ComplexWide v(1);
          for (long i = 1; i <= n; ++i) v *= z - c[c.size() - static_cast<std::size_t>(i)];
          f.push_back(v);
        }
        rows.push_back(narrow(newton_oracle<ComplexWide>(std::span<const ComplexWide>(f), at).entries));
      }
      return rows;
    }
  }
  throw DomainError("elliptic_lah: unknown route");
}

}  // namespace

NumericTable elliptic_lah_table(long N, const EllipticParams& params, LahRoute route) {
  return elliptic_guarded(
      [&] { return to_numeric("elliptic-lah", describe_params(params), elliptic_lah_rows(N, params, route)); });
}

Complex elliptic_lah(long n, long k, const EllipticParams& params, LahRoute route) {
  require_nonnegative(n, "elliptic_lah");
  if (outside(n, k)) return 0.0;
  check_genericity(params, -n, k);
  return elliptic_lah_table(n, params, route).at(n, k);
}

}  // namespace ellcomb
