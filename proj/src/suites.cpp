#include "ellcomb/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <sstream>

#include "ellcomb/elliptic.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/eulerian.hpp"
#include "ellcomb/newton.hpp"
#include "ellcomb/q_objects.hpp"
#include "ellcomb/sampling.hpp"
#include "ellcomb/special_numbers.hpp"
#include "ellcomb/theta.hpp"
#include "ellcomb/value_sequence.hpp"

namespace ellcomb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double scaled_error(Complex x, Complex y) { return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}); }

std::string str(long v) { return std::to_string(v); }

// Checks of one trial, collected before they are merged into the suite.
class TrialContext {
 public:
  TrialContext(long trial, std::optional<double> tol) : trial_(trial), override_(tol) {}

  long trial() const { return trial_; }
  void note(const std::string& key, const std::string& value) { record_.emplace_back(key, value); }
  void note(const ParamRecord& r) { record_.insert(record_.end(), r.begin(), r.end()); }

  void check(const std::string& name, double residual, double tol) {
    const double t = override_.value_or(tol);
    ++checks_;
    if (std::isnan(residual)) residual = kInf;
    worst_ = std::max(worst_, residual);
    if (!(residual <= t)) failures_.push_back({trial_, name, residual, t, record_});
  }
  void exact(const std::string& name, bool ok) {
    ++checks_;
    if (!ok) {
      worst_ = kInf;
      failures_.push_back({trial_, name, kInf, 0.0, record_});
    }
  }

  long checks() const { return checks_; }
  double worst() const { return worst_; }
  const std::vector<CheckFailure>& failures() const { return failures_; }

 private:
  long trial_;
  std::optional<double> override_;
  ParamRecord record_;
  long checks_ = 0;
  double worst_ = 0.0;
  std::vector<CheckFailure> failures_;
};

// Largest scaled difference between two tables over rows 0..N.
template <class A, class B>
double table_error(long N, const A& x, const B& y) {
  double worst = 0.0;
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k) worst = std::max(worst, scaled_error(x(n, k), y(n, k)));
  return worst;
}

double table_error(const NumericTable& x, const NumericTable& y) {
  const long N = std::min(x.max_n(), y.max_n());
  return table_error(N, [&](long n, long k) { return x.at(n, k); }, [&](long n, long k) { return y.at(n, k); });
}

// Largest relative error against an exact table evaluated at q.
double q_table_error(const NumericTable& x, const ExactTable& expected, Complex q) {
  double worst = 0.0;
  for (long n = 0; n <= x.max_n(); ++n)
    for (long k = 0; k <= n; ++k) worst = std::max(worst, relative_error(x.at(n, k), expected.at(n, k).evaluate(q)));
  return worst;
}

// a_i = i + delta_i on [lo, hi] with |delta_i| <= 0.3 in both components.
NumericSequence perturbed_window(Rng& rng, long lo, long hi) {
  std::map<long, Complex> values;
  for (long i = lo; i <= hi; ++i) values[i] = Complex(i + rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
  return NumericSequence("perturbed", [values](long i) { return values.at(i); }, NumericSequence::Window{lo, hi});
}

ParamRecord sequence_record(const NumericSequence& seq) {
  ParamRecord r;
  const auto& w = *seq.window();
  for (long i = w.lo; i <= w.hi; ++i) r.emplace_back("a_" + str(i), format_complex(seq.at(i)));
  return r;
}

Complex box(Rng& rng, double half) { return {rng.uniform(-half, half), rng.uniform(-half, half)}; }

const char* stirling_route_name(EllipticStirlingRoute r) {
  switch (r) {
    case EllipticStirlingRoute::recurrence: return "recurrence";
    case EllipticStirlingRoute::h_special: return "h_special";
    case EllipticStirlingRoute::explicit_corollary: return "explicit";
    case EllipticStirlingRoute::newton_oracle: return "newton_oracle";
  }
  return "?";
}

struct SuiteDef {
  std::string name;
  std::function<void(TrialContext&)> once;          // run in trial 0 only
  std::function<void(Rng&, TrialContext&)> trial;   // restarted on degenerate samples
};

// ---- theta ----

void theta_trial(Rng& rng, TrialContext& c) {
  const Complex p = rng.annulus(0.05, 0.5);
  const Complex x = rng.annulus(0.4, 0.9), y = rng.annulus(0.4, 0.9);
  const Complex u = rng.annulus(0.4, 0.9), z = rng.annulus(0.4, 0.9);
  c.note({{"p", format_complex(p)}, {"x", format_complex(x)}, {"y", format_complex(y)},
          {"u", format_complex(u)}, {"z", format_complex(z)}});
  c.check("inversion", relative_error(theta(x, p), -x * theta(1.0 / x, p)), 1e-9);
  c.check("quasi-periodicity", relative_error(theta(p * x, p), -theta(x, p) / x), 1e-9);
  const Complex lhs = theta_multi({x * y, x / y, u * z, u / z}, p);
  const Complex r1 = theta_multi({u * y, u / y, x * z, x / z}, p);
  const Complex r2 = x / z * theta_multi({z * y, z / y, u * x, u / x}, p);
  c.check("three-term", sum_identity_error(lhs, {r1, r2}), 1e-9);
}

// ---- elliptic identities ----

void elliptic_identities_trial(Rng& rng, TrialContext& c) {
  const EllipticParams params = sample_elliptic_params(rng, -6, 8);
  const long y = rng.integer(-3, 3), z = rng.integer(-3, 4);
  const long k = rng.integer(-3, 3), j = rng.integer(-3, 3);
  const long m = rng.integer(0, 5), w = rng.integer(-3, 6);
  c.note(describe_params(params));
  c.note({{"y", str(y)}, {"z", str(z)}, {"k", str(k)}, {"j", str(j)}, {"m", str(m)}, {"w", str(w)}});
  c.check("[y+z] = [y] + W(y)[z]_shifted",
          sum_identity_error(elliptic_number(y + z, params),
                             {elliptic_number(y, params),
                              elliptic_weight(y, params) * elliptic_number_shifted(z, 2 * y, y, params)}),
          1e-9);
  c.check("W(k+j) = W(j) W_shifted(k)",
          relative_error(elliptic_weight(k + j, params),
                         elliptic_weight(j, params) * elliptic_weight(k, params.shifted(2 * j, j))),
          1e-9);
  c.check("[-m] = -W(-1)[m]_{1/a,b/a}",
          relative_error(elliptic_number(-m, params), -elliptic_weight(-1, params) * elliptic_number(m, params.inverted())),
          1e-9);
  const Complex base = elliptic_number(w, params);
  c.check("a -> pa invariance", relative_error(base, elliptic_number(w, params.with_a(params.p() * params.a()))), 1e-9);
  c.check("b -> pb invariance", relative_error(base, elliptic_number(w, params.with_b(params.p() * params.b()))), 1e-9);
}

// ---- h routes ----

void h_routes_trial(Rng& rng, TrialContext& c) {
  const long n = rng.integer(0, 7), k = rng.integer(0, 6);
  const NumericSequence seq = perturbed_window(rng, 0, k);
  c.note({{"n", str(n)}, {"k", str(k)}});
  c.note(sequence_record(seq));
  const std::vector<Complex> a = seq.values(0, k);
  const std::span<const Complex> nodes(a);
  const Complex rec = h_recurrence<Complex>(n, nodes);
  c.check("h recurrence~explicit", scaled_error(rec, h_explicit<Complex>(n, nodes)), 1e-8);
  std::vector<Complex> f;
  for (const Complex& x : a) f.push_back(ipow(x, n + k));
  const Complex dd = newton_oracle<Complex>(std::span<const Complex>(f), nodes).entries.back();
  c.check("h recurrence~divided differences", scaled_error(rec, dd), 1e-8);

  const long m = rng.integer(1, 2), r = rng.integer(0, 2);
  const EllipticParams params = sample_elliptic_params(rng, -8, 12);
  c.note(describe_params(params));
  c.note({{"m", str(m)}, {"r", str(r)}});
  const std::vector<EllipticStirlingRoute> routes = {
      EllipticStirlingRoute::recurrence, EllipticStirlingRoute::h_special, EllipticStirlingRoute::explicit_corollary,
      EllipticStirlingRoute::newton_oracle};
  std::vector<NumericTable> tables;
  for (auto route : routes) tables.push_back(elliptic_stirling2_table(7, params, route));
  for (std::size_t i = 0; i < routes.size(); ++i)
    for (std::size_t j = i + 1; j < routes.size(); ++j)
      c.check(std::string("elliptic stirling ") + stirling_route_name(routes[i]) + "~" + stirling_route_name(routes[j]),
              table_error(tables[i], tables[j]), 1e-8);
  const NumericTable shifted = elliptic_shifted_stirling_table(5, m, r, params);
  double worst = 0.0;
  for (long kk = 0; kk <= 5; ++kk)
    worst = std::max(worst, scaled_error(shifted.at(5, kk),
                                         elliptic_shifted_stirling(5, kk, m, r, params, HRoute::explicit_sum)));
  c.check("elliptic shifted stirling recurrence~explicit", worst, 1e-8);
}

// ---- connection coefficients ----

void connection_trial(Rng& rng, TrialContext& c) {
  const long n = rng.integer(1, 7);
  const NumericSequence seq = perturbed_window(rng, 0, 12);
  const Complex c0 = box(rng, 2.0);
  std::vector<Complex> cs;
  for (long i = 0; i < n; ++i) cs.push_back(box(rng, 3.0));
  c.note({{"n", str(n)}, {"c_0", format_complex(c0)}});
  for (long i = 0; i < n; ++i) c.note("c_" + str(i + 1), format_complex(cs[static_cast<std::size_t>(i)]));
  c.note(sequence_record(seq));
  const std::span<const Complex> cspan(cs);
  const auto rec = connection_recurrence<Complex>(c0, cspan, seq).back().entries;
  const std::function<Complex(const Complex&)> f = [&](const Complex& z) {
    Complex v = c0;
    for (const Complex& ci : cs) v *= z - ci;
    return v;
  };
  const auto oracle = newton_oracle<Complex>(f, seq, n).entries;
  double rec_expl = 0.0, rec_oracle = 0.0;
  for (long k = 0; k <= n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    rec_expl = std::max(rec_expl, scaled_error(rec[kk], connection_explicit<Complex>(c0, cspan, seq, k)));
    rec_oracle = std::max(rec_oracle, scaled_error(rec[kk], oracle[kk]));
  }
  c.check("connection recurrence~explicit", rec_expl, 1e-8);
  c.check("connection recurrence~newton oracle", rec_oracle, 1e-8);

  // Delta^j applied to the falling basis (a_z)_k gives delta_{jk} a_j!.
  const long k = rng.integer(0, 5);
  c.note("basis_k", str(k));
  const ShiftableFunction<Complex> basis = [&seq, k](long z, const NumericSequence&) {
    return falling_factorial(seq.at(z), seq, k);
  };
  double closed = 0.0, recursive = 0.0;
  for (long j = 0; j <= 5; ++j) {
    const Complex fac = gen_factorial(seq, j);
    const Complex expected = j == k ? fac : Complex(0.0);
    const double scale = std::max(1.0, std::abs(fac));
    const Complex v = difference_operator<Complex>(j, basis, seq);
    closed = std::max(closed, std::abs(v - expected) / scale);
    recursive = std::max(recursive, std::abs(difference_operator_by_recursion<Complex>(j, basis, seq) - v) / scale);
  }
  c.check("difference operator on falling basis", closed, 1e-9);
  c.check("difference operator closed~recursive", recursive, 1e-9);
}

// ---- rook ----

void rook_trial(Rng& rng, TrialContext& c) {
  const long n = rng.integer(1, 6);
  std::vector<long> h;
  for (long i = 0; i < n; ++i) h.push_back(rng.integer(0, 4));
  const FerrersBoard board = FerrersBoard::make(h);
  const long stair = rng.integer(1, 6);
  const EllipticParams params = sample_elliptic_params(rng, -8, 8);
  c.note({{"board", board.describe()}, {"staircase", str(stair)}});
  c.note(describe_params(params));

  const auto expl = elliptic_rook_numbers(board, params, RookRoute::explicit_sum);
  const auto oracle = elliptic_rook_numbers(board, params, RookRoute::oracle);
  double worst = 0.0;
  for (std::size_t j = 0; j < expl.size(); ++j) worst = std::max(worst, scaled_error(expl[j], oracle[j]));
  c.check("rook explicit~oracle", worst, 1e-8);

  const NumericTable st = elliptic_stirling2_table(stair, params);
  const auto rooks = elliptic_rook_numbers(FerrersBoard::staircase(stair), params);
  Complex weight = 1.0;
  worst = 0.0;
  for (long k = 0; k <= stair; ++k) {
    if (k > 0) weight *= elliptic_weight(k - 1, params);
    worst = std::max(worst, scaled_error(rooks[static_cast<std::size_t>(stair - k)], st.at(stair, k) * weight));
  }
  c.check("staircase~weighted stirling", worst, 1e-8);

  const auto empty = elliptic_rook_numbers(FerrersBoard::rectangle(n, 0), params);
  bool structural = empty[0] == Complex(1.0);
  for (std::size_t j = 1; j < empty.size(); ++j) structural = structural && empty[j] == Complex(0.0);
  c.exact("empty board r_0 = 1, r_j = 0", structural);
  const auto empty_oracle = elliptic_rook_numbers(FerrersBoard::rectangle(n, 0), params, RookRoute::oracle);
  worst = 0.0;
  for (std::size_t j = 0; j < empty.size(); ++j) worst = std::max(worst, scaled_error(empty[j], empty_oracle[j]));
  c.check("empty board explicit~oracle", worst, 1e-8);
  c.exact("rook number beyond the board vanishes",
          elliptic_rook(FerrersBoard::rectangle(n, 0), n + 1, params) == Complex(0.0));
}

// ---- Lah ----

void lah_trial(Rng& rng, TrialContext& c) {
  const EllipticParams params = sample_elliptic_params(rng, -8, 8);
  c.note(describe_params(params));
  const NumericTable rec = elliptic_lah_table(6, params, LahRoute::recurrence);
  const NumericTable expl = elliptic_lah_table(6, params, LahRoute::explicit_sum);
  const NumericTable oracle = elliptic_lah_table(6, params, LahRoute::oracle);
  c.check("lah recurrence~explicit", table_error(rec, expl), 1e-8);
  c.check("lah recurrence~oracle", table_error(rec, oracle), 1e-8);
  c.check("lah explicit~oracle", table_error(expl, oracle), 1e-8);
}

// ---- Eulerian routes ----

template <class S>
bool generalized_routes_equal(ValueSequence<S> seq, long N) {
  const auto p = EulerianParams<S>::make(std::move(seq), N);
  return generalized_eulerian(N, p, EulerianRoute::recurrence) == generalized_eulerian(N, p, EulerianRoute::explicit_sum);
}

void eulerian_routes_once(TrialContext& c) {
  bool ok = true, at_one = true;
  const IntegerTable classical = eulerian_table(9);
  for (long n = 0; n <= 9; ++n)
    for (long k = 0; k <= n; ++k) {
      const ExactScalar rec = q_eulerian(n, k, QEulerianRoute::recurrence);
      ok = ok && rec == q_eulerian(n, k, QEulerianRoute::carlitz_sum);
      at_one = at_one && rec.evaluate_at_one() == BigRational(classical.at(n, k));
    }
  c.exact("q-eulerian recurrence = carlitz sum (n <= 9)", ok);
  c.exact("q-eulerian at q = 1 is eulerian (n <= 9)", at_one);

  c.exact("generalized routes, classical", generalized_routes_equal(classical_sequence<ExactScalar>(), 7));
  c.exact("generalized routes, q-number", generalized_routes_equal(q_number_sequence(), 7));
  c.exact("generalized routes, affine whitney (2,1)", generalized_routes_equal(affine_whitney_sequence<ExactScalar>(2, 1), 7));
  c.exact("generalized routes, q-whitney (2,1)", generalized_routes_equal(q_whitney_sequence(2, 1), 7));

  const auto lagrange = EulerianParams<ExactScalar>::make(classical_sequence<ExactScalar>(), 6);
  ok = true;
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k)
      for (long l = 0; l <= k; ++l) ok = ok && lagrange_delta_check(n, k, l, lagrange) == ExactScalar(k == l ? 1 : 0);
  c.exact("lagrange delta, classical", ok);

  ok = true;
  for (long m = 1; m <= 3; ++m)
    for (long r = 0; r < m; ++r) {
      const IntegerTable direct = r_whitney_eulerian_table(8, m, r);
      for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k)
          ok = ok && r_whitney_eulerian(n, k, m, r, RWhitneyEulerianRoute::engine) == direct.at(n, k);
    }
  c.exact("r-whitney eulerian direct = engine (m <= 3, r < m, n <= 8)", ok);

  bool expl_ok = true, engine_ok = true;
  for (long m = 1; m <= 3; ++m)
    for (long r = 0; r < m; ++r) {
      const ExactTable rec = q_r_whitney_eulerian_table(6, m, r);
      for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) {
          expl_ok = expl_ok && q_r_whitney_eulerian(n, k, m, r, QRWhitneyEulerianRoute::explicit_sum) == rec.at(n, k);
          engine_ok = engine_ok && q_r_whitney_eulerian(n, k, m, r, QRWhitneyEulerianRoute::engine) == rec.at(n, k);
        }
    }
  c.exact("q-r-whitney eulerian recurrence = explicit (n <= 6)", expl_ok);
  c.exact("q-r-whitney eulerian recurrence = engine (n <= 6)", engine_ok);
  c.exact("q-r-whitney eulerian (1,0) = carlitz", q_r_whitney_eulerian_table(6, 1, 0).rows == q_eulerian_table(6).rows);
}

void eulerian_routes_trial(Rng& rng, TrialContext& c) {
  const NumericSequence window = perturbed_window(rng, -7, 8);
  const long m = rng.integer(1, 2), r = rng.integer(0, 2);
  c.note({{"m", str(m)}, {"r", str(r)}});
  c.note(sequence_record(window));
  const auto p = EulerianParams<Complex>::make(window, 7);
  const auto rows = generalized_eulerian(7, p);
  const auto expl_rows = generalized_eulerian(7, p, EulerianRoute::explicit_sum);
  const auto entry = [](const auto& t) {
    return [&t](long n, long k) { return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; };
  };
  c.check("generalized recurrence~explicit (random sequence)", table_error(7, entry(rows), entry(expl_rows)), 1e-7);
  const auto p6 = EulerianParams<Complex>::make(window, 6);
  double delta = 0.0;
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k)
      for (long l = 0; l <= k; ++l)
        delta = std::max(delta, std::abs(lagrange_delta_check(n, k, l, p6) - (k == l ? 1.0 : 0.0)));
  c.check("lagrange delta (random sequence)", delta, 1e-9);

  const EllipticParams params = sample_elliptic_params(rng, -7 * m - r, 8 * m);
  c.note(describe_params(params));
  const NumericTable rec = elliptic_eulerian_table(6, params, EllipticEulerianRoute::recurrence);
  const NumericTable expl = elliptic_eulerian_table(6, params, EllipticEulerianRoute::explicit_sum);
  const NumericTable engine = elliptic_eulerian_table(6, params, EllipticEulerianRoute::engine);
  c.check("elliptic eulerian recurrence~explicit", table_error(rec, expl), 1e-7);
  c.check("elliptic eulerian recurrence~engine", table_error(rec, engine), 1e-7);
  c.check("elliptic eulerian explicit~engine", table_error(expl, engine), 1e-7);
  c.check("elliptic r-whitney eulerian recurrence~explicit",
          table_error(elliptic_r_whitney_eulerian_table(6, m, r, params),
                      elliptic_r_whitney_eulerian_table(6, m, r, params, EulerianRoute::explicit_sum)),
          1e-7);
}

// ---- Worpitzky ----

template <class S>
bool exact_worpitzky(ValueSequence<S> seq, long N) {
  const auto p = EulerianParams<S>::make(std::move(seq), N);
  for (auto route : {EulerianRoute::recurrence, EulerianRoute::explicit_sum}) {
    const auto rows = generalized_eulerian(N, p, route);
    for (long n = 0; n <= N; ++n) {
      const auto z = worpitzky_integer_samples<S>(n);
      if (worpitzky_residual(n, rows, p, std::span<const S>(z)) != 0.0) return false;
    }
  }
  return true;
}

void worpitzky_once(TrialContext& c) {
  c.exact("worpitzky, classical (n <= 7)", exact_worpitzky(classical_sequence<ExactScalar>(), 7));
  c.exact("worpitzky, q-number (n <= 7)", exact_worpitzky(q_number_sequence(), 7));
  c.exact("worpitzky, affine whitney (2,1) (n <= 7)", exact_worpitzky(affine_whitney_sequence<ExactScalar>(2, 1), 7));
  c.exact("worpitzky, q-whitney (2,1) (n <= 7)", exact_worpitzky(q_whitney_sequence(2, 1), 7));
}

void worpitzky_trial(Rng& rng, TrialContext& c) {
  const std::vector<Complex> z = worpitzky_real_samples(rng);
  const NumericSequence window = perturbed_window(rng, -7, 8);
  c.note(sequence_record(window));
  const auto p = EulerianParams<Complex>::make(window, 7);
  for (auto route : {EulerianRoute::recurrence, EulerianRoute::explicit_sum}) {
    const auto rows = generalized_eulerian(7, p, route);
    double worst = 0.0;
    for (long n = 0; n <= 7; ++n) worst = std::max(worst, worpitzky_residual(n, rows, p, std::span<const Complex>(z)));
    c.check(std::string("worpitzky, random sequence, ") +
                (route == EulerianRoute::recurrence ? "recurrence" : "explicit"),
            worst, 1e-7);
  }
  const EllipticParams params = sample_elliptic_params(rng, -8, 9);
  c.note(describe_params(params));
  for (auto route : {EllipticEulerianRoute::recurrence, EllipticEulerianRoute::explicit_sum}) {
    const auto res = elliptic_worpitzky_residuals(7, params, z, route);
    c.check(std::string("worpitzky, elliptic, ") +
                (route == EllipticEulerianRoute::recurrence ? "recurrence" : "explicit"),
            *std::max_element(res.begin(), res.end()), 1e-7);
  }
}

// ---- degeneration ----

struct QTables {
  ExactTable stirling = q_stirling2_table(7);
  ExactTable eulerian = q_eulerian_table(6);
  ExactTable lah = q_lah_table(6);
  std::map<std::pair<long, long>, ExactTable> whitney_eulerian;
  std::map<std::pair<long, long>, ExactTable> whitney;

  const ExactTable& r_whitney_eulerian(long m, long r) {
    auto it = whitney_eulerian.find({m, r});
    if (it == whitney_eulerian.end()) it = whitney_eulerian.emplace(std::pair{m, r}, q_r_whitney_eulerian_table(6, m, r)).first;
    return it->second;
  }
  const ExactTable& qr_whitney(long m, long r) {
    auto it = whitney.find({m, r});
    if (it == whitney.end()) it = whitney.emplace(std::pair{m, r}, whitney_qr_table(6, m, r)).first;
    return it->second;
  }
};

void degeneration_once(TrialContext& c) {
  const ExactTable qs = q_stirling2_table(7);
  const ExactTable qe = q_eulerian_table(7);
  const ExactTable ql = q_lah_table(7);
  const IntegerTable e = eulerian_table(7);
  std::vector<ExactScalar> cs;
  for (long i = 1; i <= 7; ++i) cs.push_back(ExactScalar(-(i - 1)));
  const auto classical_lah =
      connection_recurrence<ExactScalar>(ExactScalar(1), cs, classical_sequence<ExactScalar>());
  bool st = true, eu = true, lah = true, oracle = true;
  for (long n = 0; n <= 7; ++n)
    for (long k = 0; k <= n; ++k) {
      st = st && qs.at(n, k).evaluate_at_one() == BigRational(stirling2(n, k));
      eu = eu && qe.at(n, k).evaluate_at_one() == BigRational(e.at(n, k));
      const BigRational at_one = ql.at(n, k).evaluate_at_one();
      lah = lah && at_one == BigRational(lah_number(n, k));
      const ExactScalar& value = classical_lah[static_cast<std::size_t>(n)].entries[static_cast<std::size_t>(k)];
      oracle = oracle && value.evaluate_at_one() == at_one && value == ExactScalar(lah_number(n, k).get_si());
    }
  c.exact("q-stirling at q = 1 is stirling (n <= 7)", st);
  c.exact("q-eulerian at q = 1 is eulerian (n <= 7)", eu);
  c.exact("q-lah at q = 1 is the integer lah triangle (n <= 7)", lah);
  c.exact("integer lah = classical connection coefficients with c_i = -(i-1)", oracle);
}

void degeneration_trial(Rng& rng, TrialContext& c, QTables& exact) {
  const long m = rng.integer(1, 3), r = rng.integer(0, 2);
  const EllipticParams params = sample_elliptic_params(rng, -7 * m - r, 8 * m);
  c.note(describe_params(params));
  c.note({{"m", str(m)}, {"r", str(r)}});
  const EllipticParams limit = params.degenerate(Degeneration::b_zero);
  const Complex q = params.q();
  for (auto route : {EllipticStirlingRoute::recurrence, EllipticStirlingRoute::h_special,
                     EllipticStirlingRoute::explicit_corollary, EllipticStirlingRoute::newton_oracle})
    c.check(std::string("stirling limit, ") + stirling_route_name(route),
            q_table_error(elliptic_stirling2_table(7, limit, route), exact.stirling, q), 1e-9);
  c.check("eulerian limit, recurrence",
          q_table_error(elliptic_eulerian_table(6, limit, EllipticEulerianRoute::recurrence), exact.eulerian, q), 1e-8);
  c.check("eulerian limit, explicit",
          q_table_error(elliptic_eulerian_table(6, limit, EllipticEulerianRoute::explicit_sum), exact.eulerian, q), 1e-8);
  c.check("eulerian limit, engine",
          q_table_error(elliptic_eulerian_table(6, limit, EllipticEulerianRoute::engine), exact.eulerian, q), 1e-8);
  c.check("lah limit, recurrence", q_table_error(elliptic_lah_table(6, limit, LahRoute::recurrence), exact.lah, q), 1e-8);
  c.check("lah limit, explicit", q_table_error(elliptic_lah_table(6, limit, LahRoute::explicit_sum), exact.lah, q), 1e-8);
  c.check("lah limit, oracle", q_table_error(elliptic_lah_table(6, limit, LahRoute::oracle), exact.lah, q), 1e-8);
  c.check("r-whitney eulerian limit",
          q_table_error(elliptic_r_whitney_eulerian_table(6, m, r, limit), exact.r_whitney_eulerian(m, r), q), 1e-8);
  c.check("shifted stirling limit",
          q_table_error(elliptic_shifted_stirling_table(6, m, r, limit), exact.qr_whitney(m, r), q), 1e-8);
}

std::vector<SuiteDef> make_suites() {
  auto tables = std::make_shared<QTables>();
  return {
      {"theta", nullptr, theta_trial},
      {"elliptic-identities", nullptr, elliptic_identities_trial},
      {"h-routes", nullptr, h_routes_trial},
      {"connection", nullptr, connection_trial},
      {"rook", nullptr, rook_trial},
      {"lah", nullptr, lah_trial},
      {"eulerian-routes", eulerian_routes_once, eulerian_routes_trial},
      {"worpitzky", worpitzky_once, worpitzky_trial},
      {"degeneration", degeneration_once,
       [tables](Rng& rng, TrialContext& c) { degeneration_trial(rng, c, *tables); }},
  };
}

void merge(SuiteResult& out, const TrialContext& c) {
  out.checks += c.checks();
  out.checks_failed += static_cast<long>(c.failures().size());
  out.worst_residual = std::max(out.worst_residual, c.worst());
  out.failures.insert(out.failures.end(), c.failures().begin(), c.failures().end());
}

void record_exception(TrialContext& c, const std::exception& e) {
  c.exact(std::string("exception: ") + e.what(), false);
}

std::uint64_t suite_seed(std::uint64_t seed, std::size_t index) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1U));
}

SuiteResult run_suite(const SuiteDef& def, std::size_t index, long trials, std::uint64_t seed,
                      std::optional<double> tol) {
  SuiteResult out;
  out.suite = def.name;
  out.trials = trials;
  Rng rng(suite_seed(seed, index));
  const int max_retries = SamplingPolicy{}.max_retries;
  for (long t = 0; t < trials; ++t) {
    long failed_before = out.checks_failed;
    if (t == 0 && def.once) {
      TrialContext c(t, tol);
      try {
        def.once(c);
      } catch (const std::exception& e) {
        record_exception(c, e);
      }
      merge(out, c);
    }
    for (int attempt = 0;; ++attempt) {
      TrialContext c(t, tol);
      try {
        def.trial(rng, c);
      } catch (const DegenerateParameters& e) {
        if (attempt + 1 < max_retries) continue;
        record_exception(c, e);
      } catch (const DegenerateSequence& e) {
        if (attempt + 1 < max_retries) continue;
        record_exception(c, e);
      } catch (const std::exception& e) {
        record_exception(c, e);
      }
      merge(out, c);
      break;
    }
    if (out.checks_failed == failed_before) ++out.trials_passed;
  }
  return out;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : make_suites()) out.push_back(def.name);
    return out;
  }();
  return names;
}

SuiteReport run_check(const std::string& suite, long trials, std::uint64_t seed, std::optional<double> tol,
                      bool parallel) {
  if (trials < 0) throw DomainError("check: trials must be >= 0");
  if (tol && !(*tol > 0.0)) throw DomainError("check: tol must be positive");
  const std::vector<SuiteDef> defs = make_suites();
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < defs.size(); ++i)
    if (suite == "all" || defs[i].name == suite) selected.push_back(i);
  if (selected.empty()) throw DomainError("check: unknown suite '" + suite + "'");

  SuiteReport report;
  report.seed = seed;
  report.trials = trials;
  report.tol = tol;
  if (parallel && selected.size() > 1) {
    std::vector<std::future<SuiteResult>> jobs;
    for (std::size_t i : selected)
      jobs.push_back(std::async(std::launch::async, [&defs, i, trials, seed, tol] {
        return run_suite(defs[i], i, trials, seed, tol);
      }));
    for (auto& j : jobs) report.suites.push_back(j.get());
  } else {
    for (std::size_t i : selected) report.suites.push_back(run_suite(defs[i], i, trials, seed, tol));
  }
  return report;
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

std::string render_report(const SuiteReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %8s %8s %8s %8s  %s\n", "suite", "trials", "passed", "checks", "failed",
                "worst");
  out << line;
  for (const SuiteResult& s : report.suites) {
    std::snprintf(line, sizeof line, "%-20s %8ld %8ld %8ld %8ld  %s\n", s.suite.c_str(), s.trials, s.trials_passed,
                  s.checks, s.checks_failed, format_residual(s.worst_residual).c_str());
    out << line;
  }
  out << "seed " << report.seed << ", trials " << report.trials << ", tol ";
  if (report.tol)
    out << format_residual(*report.tol);
  else
    out << "per check";
  out << "\n";
  constexpr std::size_t shown = 20;
  for (const SuiteResult& s : report.suites) {
    for (std::size_t i = 0; i < s.failures.size() && i < shown; ++i) {
      const CheckFailure& f = s.failures[i];
      out << "FAIL " << s.suite << " trial " << f.trial << ": " << f.check << " residual "
          << format_residual(f.residual) << " > " << format_residual(f.tol) << "\n";
      for (const auto& [key, value] : f.record) out << "  " << key << " = " << value << "\n";
    }
    if (s.failures.size() > shown) out << "  ... " << s.failures.size() - shown << " more failures in " << s.suite << "\n";
  }
  out << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace ellcomb
