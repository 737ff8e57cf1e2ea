// One PASS/FAIL line per acceptance criterion. Usage: acceptance <path to ellcomb CLI>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ellcomb/eulerian.hpp"
#include "ellcomb/newton.hpp"
#include "ellcomb/q_objects.hpp"
#include "ellcomb/sampling.hpp"
#include "ellcomb/special_numbers.hpp"
#include "ellcomb/suites.hpp"

using namespace ellcomb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double scaled_error(Complex x, Complex y) { return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}); }

double table_error(const NumericTable& x, const NumericTable& y) {
  double worst = 0.0;
  for (long n = 0; n <= std::min(x.max_n(), y.max_n()); ++n)
    for (long k = 0; k <= n; ++k) worst = std::max(worst, scaled_error(x.at(n, k), y.at(n, k)));
  return worst;
}

double q_table_error(const NumericTable& x, const ExactTable& expected, Complex q) {
  double worst = 0.0;
  for (long n = 0; n <= x.max_n(); ++n)
    for (long k = 0; k <= n; ++k) worst = std::max(worst, relative_error(x.at(n, k), expected.at(n, k).evaluate(q)));
  return worst;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::string sci(double v) { return format_residual(v); }

// ---- 1 ----
Outcome q_stirling_cross_route() {
  Outcome o;
  const auto start = Clock::now();
  const ExactTable table = q_stirling2_table(10);
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= n; ++k) {
      const ExactScalar rec = table.at(n, k);
      const ExactScalar carlitz = q_stirling2(n, k, QStirlingRoute::carlitz_sum);
      const ExactScalar h = q_stirling2(n, k, QStirlingRoute::h_special);
      if (!(rec == carlitz) || !(rec == h) || rec.to_string() != carlitz.to_string() ||
          rec.to_string() != h.to_string())
        fail(o, "routes differ at (" + std::to_string(n) + "," + std::to_string(k) + ")");
      if (rec.evaluate_at_one() != BigRational(stirling2(n, k)))
        fail(o, "q = 1 differs from S(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  const double t = seconds_since(start);
  if (t >= 5.0) fail(o, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = "n <= 10, three routes identical, q = 1 gives S(n,k), " + std::to_string(t) + " s";
  return o;
}

// ---- 2 ----
Outcome q_eulerian_cross_route() {
  Outcome o;
  const auto start = Clock::now();
  const ExactTable table = q_eulerian_table(9);
  const IntegerTable classical = eulerian_table(9);
  for (long n = 0; n <= 9; ++n)
    for (long k = 0; k <= n; ++k) {
      if (!(table.at(n, k) == q_eulerian(n, k, QEulerianRoute::carlitz_sum)))
        fail(o, "recurrence and sum differ at (" + std::to_string(n) + "," + std::to_string(k) + ")");
      if (table.at(n, k).evaluate_at_one() != BigRational(classical.at(n, k)))
        fail(o, "q = 1 differs at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  const std::vector<BigInt> row3 = {0, 1, 4, 1};
  for (long k = 0; k <= 3; ++k)
    if (classical.at(3, k) != row3[static_cast<std::size_t>(k)]) fail(o, "row 3 is not 0,1,4,1");
  const double t = seconds_since(start);
  if (t >= 5.0) fail(o, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = "n <= 9, recurrence = sum, q = 1 classical, row 3 = 0,1,4,1, " + std::to_string(t) + " s";
  return o;
}

// ---- 3, 4 ----
Outcome suite_criterion(const std::string& suite, long trials, long checks_per_trial, double tol) {
  Outcome o;
  const SuiteReport report = run_check(suite, trials, 20240601, {}, false);
  const SuiteResult& s = report.suites.front();
  if (!s.passed()) fail(o, std::to_string(s.checks_failed) + " failed checks");
  if (s.trials_passed != trials) fail(o, std::to_string(s.trials_passed) + "/" + std::to_string(trials) + " trials");
  if (s.checks != trials * checks_per_trial) fail(o, "unexpected check count " + std::to_string(s.checks));
  if (!(s.worst_residual <= tol)) fail(o, "worst " + sci(s.worst_residual));
  if (o.pass)
    o.detail = std::to_string(s.trials_passed) + "/" + std::to_string(trials) + " trials, " + std::to_string(s.checks) +
               " checks, worst " + sci(s.worst_residual);
  return o;
}

// ---- 5 ----
Outcome elliptic_stirling_routes() {
  Outcome o;
  Rng rng(5);
  double worst_routes = 0.0, worst_limit = 0.0;
  const ExactTable q_expected = q_stirling2_table(7);
  for (int tuple = 0; tuple < 25; ++tuple) {
    with_generic_params(rng, -8, 8, [&](const EllipticParams& params) {
      const NumericTable rec = elliptic_stirling2_table(7, params, EllipticStirlingRoute::recurrence);
      const NumericTable expl = elliptic_stirling2_table(7, params, EllipticStirlingRoute::explicit_corollary);
      const NumericTable oracle = elliptic_stirling2_table(7, params, EllipticStirlingRoute::newton_oracle);
      worst_routes = std::max({worst_routes, table_error(rec, expl), table_error(rec, oracle), table_error(expl, oracle)});
      const EllipticParams limit = params.degenerate(Degeneration::b_zero);
      for (auto route : {EllipticStirlingRoute::recurrence, EllipticStirlingRoute::explicit_corollary,
                         EllipticStirlingRoute::newton_oracle})
        worst_limit = std::max(worst_limit, q_table_error(elliptic_stirling2_table(7, limit, route), q_expected, params.q()));
      return 0;
    });
  }
  if (!(worst_routes <= 1e-8)) fail(o, "route disagreement " + sci(worst_routes));
  if (!(worst_limit <= 1e-9)) fail(o, "degeneration deviation " + sci(worst_limit));
  if (o.pass) o.detail = "25 tuples, n <= 7, routes " + sci(worst_routes) + ", chain " + sci(worst_limit);
  return o;
}

// ---- 6 ----
template <class S>
bool exact_eulerian(ValueSequence<S> seq) {
  const auto p = EulerianParams<S>::make(std::move(seq), 7);
  const auto rec = generalized_eulerian(7, p, EulerianRoute::recurrence);
  const auto expl = generalized_eulerian(7, p, EulerianRoute::explicit_sum);
  if (rec != expl) return false;
  for (long n = 0; n <= 7; ++n) {
    const auto z = worpitzky_integer_samples<S>(n);
    if (worpitzky_residual(n, rec, p, std::span<const S>(z)) != 0.0) return false;
  }
  return true;
}

NumericSequence perturbed_window(Rng& rng, long lo, long hi) {
  std::vector<Complex> values;
  for (long i = lo; i <= hi; ++i) values.emplace_back(i + rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
  return NumericSequence("perturbed", [values, lo](long i) { return values[static_cast<std::size_t>(i - lo)]; },
                         NumericSequence::Window{lo, hi});
}

Outcome generalized_eulerian_criterion() {
  Outcome o;
  if (!exact_eulerian(classical_sequence<ExactScalar>())) fail(o, "classical sequence");
  if (!exact_eulerian(q_number_sequence())) fail(o, "q-number sequence");
  if (!exact_eulerian(affine_whitney_sequence<ExactScalar>(2, 1))) fail(o, "affine whitney sequence");
  if (!exact_eulerian(q_whitney_sequence(2, 1))) fail(o, "q-whitney sequence");

  Rng rng(6);
  double numeric = 0.0, elliptic = 0.0, delta = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<Complex> z = worpitzky_real_samples(rng);
    const auto p = EulerianParams<Complex>::make(perturbed_window(rng, -7, 8), 7);
    const auto rec = generalized_eulerian(7, p, EulerianRoute::recurrence);
    const auto expl = generalized_eulerian(7, p, EulerianRoute::explicit_sum);
    for (long n = 0; n <= 7; ++n) {
      for (long k = 0; k <= n; ++k)
        numeric = std::max(numeric, scaled_error(rec[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)],
                                                 expl[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
      numeric = std::max({numeric, worpitzky_residual(n, rec, p, std::span<const Complex>(z)),
                          worpitzky_residual(n, expl, p, std::span<const Complex>(z))});
    }
    const auto p6 = EulerianParams<Complex>::make(perturbed_window(rng, -6, 7), 6);
    for (long n = 0; n <= 6; ++n)
      for (long k = 0; k <= n; ++k)
        for (long l = 0; l <= k; ++l)
          delta = std::max(delta, std::abs(lagrange_delta_check(n, k, l, p6) - (k == l ? 1.0 : 0.0)));

    if (trial < 5) {
      with_generic_params(rng, -8, 9, [&](const EllipticParams& params) {
        const NumericTable r = elliptic_eulerian_table(7, params, EllipticEulerianRoute::recurrence);
        const NumericTable e = elliptic_eulerian_table(7, params, EllipticEulerianRoute::explicit_sum);
        elliptic = std::max(elliptic, table_error(r, e));
        for (auto route : {EllipticEulerianRoute::recurrence, EllipticEulerianRoute::explicit_sum})
          for (double res : elliptic_worpitzky_residuals(7, params, z, route)) elliptic = std::max(elliptic, res);
        return 0;
      });
    }
  }
  const auto classical = EulerianParams<ExactScalar>::make(classical_sequence<ExactScalar>(), 6);
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k)
      for (long l = 0; l <= k; ++l)
        if (!(lagrange_delta_check(n, k, l, classical) == ExactScalar(k == l ? 1 : 0))) fail(o, "exact lagrange delta");
  if (!(numeric <= 1e-7)) fail(o, "random sequences " + sci(numeric));
  if (!(elliptic <= 1e-7)) fail(o, "elliptic " + sci(elliptic));
  if (!(delta <= 1e-9)) fail(o, "lagrange delta " + sci(delta));
  if (o.pass)
    o.detail = "exact for 4 sequences, random " + sci(numeric) + ", elliptic " + sci(elliptic) + ", delta " + sci(delta);
  return o;
}

// ---- 7 ----
Outcome rook_lah_criterion() {
  Outcome o;
  Rng rng(7);
  double stair = 0.0, lah = 0.0, limit_dev = 0.0;
  const ExactTable q_lah = q_lah_table(6);
  for (int tuple = 0; tuple < 10; ++tuple) {
    with_generic_params(rng, -8, 8, [&](const EllipticParams& params) {
      const auto empty = elliptic_rook_numbers(FerrersBoard::rectangle(5, 0), params);
      if (empty[0] != Complex(1.0)) fail(o, "empty board r_0 = " + format_complex(empty[0]));
      for (std::size_t j = 1; j < empty.size(); ++j)
        if (empty[j] != Complex(0.0)) fail(o, "empty board r_" + std::to_string(j) + " = " + format_complex(empty[j]));
      const auto empty_oracle = elliptic_rook_numbers(FerrersBoard::rectangle(5, 0), params, RookRoute::oracle);
      for (std::size_t j = 0; j < empty.size(); ++j) stair = std::max(stair, scaled_error(empty[j], empty_oracle[j]));
      const NumericTable st = elliptic_stirling2_table(6, params);
      for (long n = 1; n <= 6; ++n) {
        const auto rooks = elliptic_rook_numbers(FerrersBoard::staircase(n), params);
        Complex weight = 1.0;
        for (long k = 0; k <= n; ++k) {
          if (k > 0) weight *= elliptic_weight(k - 1, params);
          stair = std::max(stair, scaled_error(rooks[static_cast<std::size_t>(n - k)], st.at(n, k) * weight));
        }
      }
      const NumericTable rec = elliptic_lah_table(6, params, LahRoute::recurrence);
      const NumericTable expl = elliptic_lah_table(6, params, LahRoute::explicit_sum);
      const NumericTable oracle = elliptic_lah_table(6, params, LahRoute::oracle);
      lah = std::max({lah, table_error(rec, expl), table_error(rec, oracle), table_error(expl, oracle)});
      limit_dev = std::max(limit_dev, q_table_error(elliptic_lah_table(6, params.degenerate(Degeneration::b_zero)), q_lah,
                                                    params.q()));
      return 0;
    });
  }
  std::vector<ExactScalar> c;
  for (long i = 1; i <= 6; ++i) c.push_back(ExactScalar(-(i - 1)));
  const auto oracle = connection_recurrence<ExactScalar>(ExactScalar(1), c, classical_sequence<ExactScalar>());
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) {
      const BigRational at_one = q_lah.at(n, k).evaluate_at_one();
      const ExactScalar& expected = oracle[static_cast<std::size_t>(n)].entries[static_cast<std::size_t>(k)];
      if (at_one != BigRational(lah_number(n, k)) || !(expected == ExactScalar(lah_number(n, k).get_si())))
        fail(o, "lah chain at q = 1, (" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  if (!(stair <= 1e-8)) fail(o, "staircase or empty-board oracle " + sci(stair));
  if (!(lah <= 1e-8)) fail(o, "lah routes " + sci(lah));
  if (!(limit_dev <= 1e-8)) fail(o, "lah degeneration " + sci(limit_dev));
  if (o.pass)
    o.detail = "empty board exact, staircase and oracle " + sci(stair) + ", lah routes " + sci(lah) + ", chain " + sci(limit_dev) +
               ", q = 1 integer triangle";
  return o;
}

// ---- 8 ----
Outcome r_whitney_criterion() {
  Outcome o;
  for (long m = 1; m <= 3; ++m)
    for (long r = 0; r < m; ++r) {
      const IntegerTable direct = r_whitney_eulerian_table(8, m, r);
      for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k)
          if (r_whitney_eulerian(n, k, m, r, RWhitneyEulerianRoute::engine) != direct.at(n, k))
            fail(o, "r-whitney engine at m=" + std::to_string(m) + " r=" + std::to_string(r));
      const ExactTable rec = q_r_whitney_eulerian_table(6, m, r);
      for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) {
          if (!(q_r_whitney_eulerian(n, k, m, r, QRWhitneyEulerianRoute::explicit_sum) == rec.at(n, k)))
            fail(o, "q-r-whitney explicit at m=" + std::to_string(m) + " r=" + std::to_string(r));
          if (!(q_r_whitney_eulerian(n, k, m, r, QRWhitneyEulerianRoute::engine) == rec.at(n, k)))
            fail(o, "q-r-whitney engine at m=" + std::to_string(m) + " r=" + std::to_string(r));
        }
    }
  if (q_r_whitney_eulerian_table(6, 1, 0).rows != q_eulerian_table(6).rows) fail(o, "(1,0) is not the carlitz triangle");
  if (o.pass) o.detail = "m <= 3, r < m: direct = engine (n <= 8), q routes equal (n <= 6), (1,0) = carlitz";
  return o;
}

// ---- 9 ----
struct RunResult {
  int status = -1;
  std::string output;
  double seconds = 0.0;
};

RunResult run_command(const std::string& command) {
  RunResult r;
  const auto start = Clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.seconds = seconds_since(start);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome whole_suite_determinism(const std::string& cli) {
  Outcome o;
  const std::string command = "\"" + cli + "\" check --suite all --trials 25 --seed 1";
  const RunResult first = run_command(command);
  const RunResult second = run_command(command);
  if (first.status != 0 || second.status != 0)
    fail(o, "exit codes " + std::to_string(first.status) + ", " + std::to_string(second.status));
  if (first.output != second.output) fail(o, "outputs differ");
  if (first.output.empty()) fail(o, "no output");
  if (first.seconds >= 60.0 || second.seconds >= 60.0)
    fail(o, "runtime " + std::to_string(first.seconds) + " s, " + std::to_string(second.seconds) + " s");
  if (o.pass)
    o.detail = "exit 0 twice, " + std::to_string(first.output.size()) + " identical bytes, " +
               std::to_string(first.seconds) + " s and " + std::to_string(second.seconds) + " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to ellcomb CLI>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact q-Stirling cross-route", q_stirling_cross_route},
      {"exact q-Eulerian cross-route", q_eulerian_cross_route},
      {"theta identity suite", [] { return suite_criterion("theta", 100, 3, 1e-9); }},
      {"elliptic identity suite", [] { return suite_criterion("elliptic-identities", 50, 5, 1e-9); }},
      {"elliptic Stirling triple route", elliptic_stirling_routes},
      {"generalized Eulerian", generalized_eulerian_criterion},
      {"rook and Lah", rook_lah_criterion},
      {"r-Whitney family", r_whitney_criterion},
      {"whole-suite determinism", [&cli] { return whole_suite_determinism(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
