#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "ellcomb/newton.hpp"
#include "ellcomb/q_objects.hpp"
#include "ellcomb/sampling.hpp"
#include "ellcomb/special_numbers.hpp"

using namespace ellcomb;

namespace {

// Set partitions of {1..n} into k blocks, counted via restricted growth strings.
long count_partitions(long n, long k) {
  long count = 0;
  std::vector<long> s(static_cast<std::size_t>(n), 0);
  std::function<void(long, long)> rec = [&](long pos, long max_block) {
    if (pos == n) {
      if (max_block == k) ++count;
      return;
    }
    for (long b = 1; b <= max_block + 1; ++b) rec(pos + 1, std::max(max_block, b));
  };
  rec(0, 0);
  return count;
}

// q-Lah numbers through the connection recurrence over [0], [-1], [-2], ...
ExactScalar exact_q_lah(long n, long k) {
  std::vector<ExactScalar> c;
  for (long i = 1; i <= n; ++i) c.push_back(q_number(-(i - 1)));
  return connection_recurrence<ExactScalar>(ExactScalar(1), c, q_number_sequence())[static_cast<std::size_t>(n)]
      .entries[static_cast<std::size_t>(k)];
}

Complex elliptic_falling(long z, long k, const EllipticParams& params) {
  Complex v = 1.0;
  for (long i = 0; i < k; ++i) v *= elliptic_number(z, params) - elliptic_number(i, params);
  return v;
}

double scaled_error(Complex x, Complex y) { return std::abs(x - y) / std::max(1.0, std::max(std::abs(x), std::abs(y))); }

}  // namespace

TEST(Stirling2, ExamplesAndRoutes) {
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(5, 3), 25);
  EXPECT_EQ(stirling2(0, 0), 1);
  for (long n = 1; n <= 12; ++n) {
    EXPECT_EQ(stirling2(n, n), 1);
    EXPECT_EQ(stirling2(n, 0), 0);
    for (long k = 0; k <= n; ++k) ASSERT_EQ(stirling2(n, k), stirling2(n, k, StirlingRoute::explicit_sum));
  }
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), count_partitions(n, k));
  EXPECT_EQ(stirling2(3, 5), 0);
  EXPECT_THROW(stirling2(-1, 0), DomainError);
}

TEST(QStirling2, Examples) {
  EXPECT_EQ(q_stirling2(3, 2).to_string(), "2 + q");
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(q_stirling2(n, n), ExactScalar(1));
}

TEST(QStirling2, RoutesAgreeAndStayPolynomial) {
  const ExactTable table = q_stirling2_table(10);
  for (long n = 0; n <= 10; ++n) {
    for (long k = 0; k <= n; ++k) {
      const ExactScalar rec = table.at(n, k);
      const ExactScalar carlitz = q_stirling2(n, k, QStirlingRoute::carlitz_sum);
      ASSERT_EQ(rec, carlitz) << n << "," << k;
      ASSERT_TRUE(carlitz.is_polynomial());
      ASSERT_EQ(rec, q_stirling2(n, k, QStirlingRoute::h_special));
      ASSERT_EQ(rec.evaluate_at_one(), BigRational(stirling2(n, k)));
    }
  }
}

TEST(QStirling2, GeneratingFunction) {
  const auto qs = q_number_sequence();
  for (long n = 0; n <= 6; ++n) {
    for (long z = 0; z < 20; ++z) {
      ExactScalar rhs(0);
      for (long k = 0; k <= n; ++k) rhs += q_stirling2(n, k) * falling_factorial(q_number(z), qs, k);
      ASSERT_EQ(rhs, q_number(z).pow(static_cast<int>(n)));
    }
  }
}

TEST(EllipticStirling2, TopAndFirstColumn) {
  Rng rng(41);
  const EllipticParams params = sample_elliptic_params(rng, 0, 8);
  const NumericTable t = elliptic_stirling2_table(7, params);
  for (long n = 0; n <= 7; ++n) EXPECT_LE(std::abs(t.at(n, n) - 1.0), 1e-14);
  for (long n = 1; n <= 7; ++n) EXPECT_LE(std::abs(t.at(n, 1) - 1.0), 1e-12);
  EXPECT_EQ(t.at(3, 4), Complex(0.0));
  EXPECT_EQ(t.rows[5].size(), 6U);
}

TEST(EllipticStirling2, RoutesAgree) {
  Rng rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    with_generic_params(rng, 0, 8, [](const EllipticParams& params) {
      std::vector<NumericTable> tables;
      for (auto route : {EllipticStirlingRoute::recurrence, EllipticStirlingRoute::h_special,
                         EllipticStirlingRoute::explicit_corollary, EllipticStirlingRoute::newton_oracle})
        tables.push_back(elliptic_stirling2_table(7, params, route));
      for (std::size_t i = 0; i < tables.size(); ++i)
        for (std::size_t j = i + 1; j < tables.size(); ++j)
          for (long n = 0; n <= 7; ++n)
            for (long k = 0; k <= n; ++k)
              EXPECT_LE(scaled_error(tables[i].at(n, k), tables[j].at(n, k)), 1e-8)
                  << i << " vs " << j << " at " << n << "," << k << " " << params.describe();
      return 0;
    });
  }
}

TEST(EllipticStirling2, DegeneratesToQStirling) {
  Rng rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const EllipticParams params = sample_elliptic_params(rng, 0, 8).degenerate(Degeneration::b_zero);
    for (long n = 0; n <= 7; ++n)
      for (long k = 0; k <= n; ++k) {
        const Complex expected = q_stirling2(n, k).evaluate(params.q());
        EXPECT_LE(relative_error(elliptic_stirling2(n, k, params, EllipticStirlingRoute::explicit_corollary), expected),
                  1e-9);
        EXPECT_LE(relative_error(elliptic_stirling2(n, k, params), expected), 1e-9);
      }
  }
}

TEST(EllipticStirling2, GeneratingFunction) {
  Rng rng(44);
  const EllipticParams params = sample_elliptic_params(rng, 0, 12);
  const NumericTable t = elliptic_stirling2_table(7, params);
  for (long n = 0; n <= 7; ++n)
    for (long z = 0; z <= n + 3; ++z) {
      std::vector<Complex> terms;
      for (long k = 0; k <= n; ++k) terms.push_back(t.at(n, k) * elliptic_falling(z, k, params));
      EXPECT_LE(sum_identity_error(ipow(elliptic_number(z, params), n), terms), 1e-8);
    }
}

TEST(WhitneyQR, Examples) {
  EXPECT_EQ(whitney_qr(2, 1, 2, 1).star.to_string(), "2 + q + q^2");
  EXPECT_EQ(whitney_qr(2, 1, 2, 1).normalized, whitney_qr(2, 1, 2, 1).star * ExactScalar::q());
  for (long n = 0; n <= 7; ++n)
    for (long k = 0; k <= n; ++k) {
      ASSERT_EQ(whitney_qr(n, k, 1, 0).star, q_stirling2(n, k));
      ASSERT_EQ(whitney_qr(n, k, 3, 2).star, whitney_qr(n, k, 3, 2, HRoute::explicit_sum).star);
    }
  EXPECT_THROW(whitney_qr(3, 1, 0, 1), DomainError);
  EXPECT_THROW(whitney_qr(3, 1, 1, -1), DomainError);
}

TEST(WhitneyQR, RStirlingAtQOne) {
  // a_i = i + 1, c_i = 0: C_{n,k} = h_{n-k}(1..k+1).
  const ValueSequence<ExactScalar> shifted = affine_whitney_sequence<ExactScalar>(1, -1);
  const std::vector<ExactScalar> zeros(8, ExactScalar(0));
  const auto rows = connection_recurrence<ExactScalar>(ExactScalar(1), zeros, shifted);
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k)
      ASSERT_EQ(whitney_qr(n, k, 1, 1).star.evaluate_at_one(),
                rows[static_cast<std::size_t>(n)].entries[static_cast<std::size_t>(k)].evaluate_at_one());
}

TEST(WhitneyQR, TableMatchesEntries) {
  const ExactTable star = whitney_qr_table(6, 2, 3);
  const ExactTable norm = whitney_qr_table(6, 2, 3, true);
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) {
      EXPECT_EQ(star.at(n, k), whitney_qr(n, k, 2, 3).star);
      EXPECT_EQ(norm.at(n, k), whitney_qr(n, k, 2, 3).normalized);
    }
}

TEST(StShifted, ReducesToWhitneyAtTOne) {
  Rng rng(45);
  for (int trial = 0; trial < 5; ++trial) {
    const Complex s = rng.annulus(0.4, 0.9);
    const long m = rng.integer(1, 3), r = rng.integer(0, 3);
    for (long n = 0; n <= 7; ++n)
      for (long k = 0; k <= n; ++k)
        EXPECT_LE(relative_error(st_shifted_stirling(n, k, m, r, s, 1.0), whitney_qr(n, k, m, r).star.evaluate(s)),
                  1e-10);
  }
  EXPECT_THROW(st_shifted_stirling(3, 1, 1, 0, 0.5, 0.5), DegenerateParameters);
}

TEST(StShifted, HRoutesAndDividedDifferences) {
  Rng rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex s = rng.annulus(0.5, 1.5), t = rng.annulus(0.5, 1.5);
    const long m = rng.integer(1, 3), r = rng.integer(0, 2);
    const NumericSequence seq = st_sequence(m, r, s, t);
    for (long n = 0; n <= 6; ++n)
      for (long k = 0; k <= n; ++k) {
        const Complex rec = st_shifted_stirling(n, k, m, r, s, t);
        EXPECT_LE(scaled_error(rec, st_shifted_stirling(n, k, m, r, s, t, HRoute::explicit_sum)), 1e-8);
        const auto oracle = newton_oracle<Complex>([n](const Complex& z) { return ipow(z, n); }, seq, k);
        EXPECT_LE(scaled_error(rec, oracle.entries.back()), 1e-8);
      }
    EXPECT_LE(std::abs(st_shifted_stirling(4, 4, m, r, s, t) - 1.0), 1e-14);
  }
}

TEST(EllipticShifted, SpecializationsAndRoutes) {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const long m = rng.integer(1, 2), r = rng.integer(0, 2);
    const EllipticParams params = sample_elliptic_params(rng, 0, 7 * m + r);
    const EllipticParams limit = params.degenerate(Degeneration::b_zero);
    const NumericTable t = elliptic_shifted_stirling_table(6, m, r, params);
    const NumericTable stirling = elliptic_shifted_stirling_table(6, 1, 0, params);
    const NumericTable plain = elliptic_stirling2_table(6, params);
    const NumericTable at_limit = elliptic_shifted_stirling_table(6, m, r, limit);
    for (long n = 0; n <= 6; ++n)
      for (long k = 0; k <= n; ++k) {
        const Complex rec = elliptic_shifted_stirling(n, k, m, r, params);
        EXPECT_LE(scaled_error(rec, elliptic_shifted_stirling(n, k, m, r, params, HRoute::explicit_sum)), 1e-8);
        EXPECT_LE(scaled_error(rec, t.at(n, k)), 1e-10);
        EXPECT_LE(scaled_error(stirling.at(n, k), plain.at(n, k)), 1e-10);
        EXPECT_LE(relative_error(at_limit.at(n, k), st_shifted_stirling(n, k, m, r, params.q(), 1.0)), 1e-9);
      }
  }
}

TEST(FerrersBoard, Construction) {
  EXPECT_THROW(FerrersBoard::make({1, -1}), DomainError);
  EXPECT_EQ(FerrersBoard::staircase(4).heights(), (std::vector<long>{0, 1, 2, 3}));
  EXPECT_EQ(FerrersBoard::make({2, 0, 1}).describe(), "2,0,1");
  EXPECT_EQ(FerrersBoard::make({}).columns(), 0);
}

TEST(EllipticRook, EmptyBoard) {
  Rng rng(48);
  const EllipticParams params = sample_elliptic_params(rng, -6, 8);
  const auto r = elliptic_rook_numbers(FerrersBoard::rectangle(5, 0), params);
  EXPECT_LE(std::abs(r[0] - 1.0), 1e-10);
  for (std::size_t j = 1; j < r.size(); ++j) EXPECT_LE(std::abs(r[j]), 1e-9) << j;
  EXPECT_EQ(elliptic_rook(FerrersBoard::rectangle(5, 0), 6, params), Complex(0.0));
}

TEST(EllipticRook, StaircaseGivesWeightedStirling) {
  Rng rng(49);
  for (int trial = 0; trial < 10; ++trial) {
    const EllipticParams params = sample_elliptic_params(rng, -6, 8);
    const NumericTable t = elliptic_stirling2_table(6, params);
    for (long n = 1; n <= 6; ++n) {
      const auto rooks = elliptic_rook_numbers(FerrersBoard::staircase(n), params);
      Complex weight = 1.0;
      for (long k = 0; k <= n; ++k) {
        if (k > 0) weight *= elliptic_weight(k - 1, params);
        EXPECT_LE(scaled_error(rooks[static_cast<std::size_t>(n - k)], t.at(n, k) * weight), 1e-8) << n << "," << k;
      }
    }
    EXPECT_LE(scaled_error(elliptic_rook(FerrersBoard::staircase(4), 2, params),
                           elliptic_stirling2_weighted(4, 2, params)),
              1e-8);
  }
}

TEST(EllipticRook, RoutesAgreeOnRandomBoards) {
  Rng rng(50);
  for (int trial = 0; trial < 25; ++trial) {
    const long n = rng.integer(1, 6);
    std::vector<long> h;
    for (long i = 0; i < n; ++i) h.push_back(rng.integer(0, 4));
    const FerrersBoard board = FerrersBoard::make(h);
    with_generic_params(rng, -8, 8, [&](const EllipticParams& params) {
      const auto expl = elliptic_rook_numbers(board, params, RookRoute::explicit_sum);
      const auto oracle = elliptic_rook_numbers(board, params, RookRoute::oracle);
      for (long j = 0; j <= n; ++j)
        EXPECT_LE(scaled_error(expl[static_cast<std::size_t>(j)], oracle[static_cast<std::size_t>(j)]), 1e-8)
            << board.describe() << " j=" << j << " " << params.describe();
      // Generating function at integer z.
      for (long z = 0; z <= n + 3; ++z) {
        Complex lhs = 1.0;
        for (long i = 1; i <= n; ++i) {
          const long s = i - 1 - board.height(i);
          lhs *= elliptic_number_shifted(z - s, 2 * s, s, params);
        }
        std::vector<Complex> terms;
        for (long k = 0; k <= n; ++k) {
          Complex basis = 1.0;
          for (long j = 1; j <= k; ++j) basis *= elliptic_number_shifted(z - j + 1, 2 * (j - 1), j - 1, params);
          terms.push_back(expl[static_cast<std::size_t>(n - k)] * basis);
        }
        EXPECT_LE(sum_identity_error(lhs, terms), 1e-8) << board.describe() << " z=" << z;
      }
      return 0;
    });
  }
}

TEST(EllipticLah, BoundaryAndSmallCase) {
  Rng rng(51);
  const EllipticParams params = sample_elliptic_params(rng, -8, 8);
  const NumericTable t = elliptic_lah_table(6, params);
  for (long n = 0; n <= 6; ++n) EXPECT_LE(std::abs(t.at(n, n) - 1.0), 1e-12);
  for (long n = 1; n <= 6; ++n) EXPECT_LE(std::abs(t.at(n, 0)), 1e-12);
  EXPECT_LE(relative_error(t.at(2, 1), elliptic_weight(-1, params) * elliptic_number_shifted(2, -2, -1, params)), 1e-12);
  const EllipticParams limit = params.degenerate(Degeneration::b_zero);
  const Complex q = params.q();
  EXPECT_LE(relative_error(elliptic_lah(2, 1, limit), (1.0 + q) / q), 1e-12);
}

TEST(EllipticLah, RoutesAgree) {
  Rng rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    with_generic_params(rng, -8, 8, [](const EllipticParams& params) {
      const NumericTable t = elliptic_lah_table(6, params);
      const NumericTable expl = elliptic_lah_table(6, params, LahRoute::explicit_sum);
      const NumericTable oracle = elliptic_lah_table(6, params, LahRoute::oracle);
      for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) {
          EXPECT_LE(scaled_error(t.at(n, k), expl.at(n, k)), 1e-8);
          EXPECT_LE(scaled_error(t.at(n, k), oracle.at(n, k)), 1e-8);
          EXPECT_LE(scaled_error(expl.at(n, k), oracle.at(n, k)), 1e-8);
        }
      return 0;
    });
  }
}

TEST(EllipticLah, GeneratingFunction) {
  Rng rng(53);
  const EllipticParams params = sample_elliptic_params(rng, -8, 12);
  const NumericTable t = elliptic_lah_table(6, params);
  for (long n = 0; n <= 6; ++n)
    for (long z = 0; z <= n + 3; ++z) {
      Complex rising = 1.0;
      for (long i = 0; i < n; ++i) rising *= elliptic_number(z, params) - elliptic_number(-i, params);
      std::vector<Complex> terms;
      for (long k = 0; k <= n; ++k) terms.push_back(t.at(n, k) * elliptic_falling(z, k, params));
      EXPECT_LE(sum_identity_error(rising, terms), 1e-8);
    }
}

TEST(DegenerationLattice, EllipticToQToClassical) {
  Rng rng(54);
  const EllipticParams params = sample_elliptic_params(rng, -8, 8);
  const EllipticParams limit = params.degenerate(Degeneration::b_zero);
  const Complex q = params.q();
  for (long n = 0; n <= 7; ++n)
    for (long k = 0; k <= n; ++k) {
      EXPECT_LE(relative_error(elliptic_stirling2(n, k, limit), q_stirling2(n, k).evaluate(q)), 1e-9);
      EXPECT_EQ(q_stirling2(n, k).evaluate_at_one(), BigRational(stirling2(n, k)));
      const ExactScalar ql = exact_q_lah(n, k);
      EXPECT_LE(relative_error(elliptic_lah(n, k, limit), ql.evaluate(q)), 1e-9);
      EXPECT_EQ(ql.evaluate_at_one(), BigRational(lah_number(n, k))) << n << "," << k;
    }
  EXPECT_EQ(lah_number(2, 1), 2);
  EXPECT_EQ(lah_number(4, 2), 36);
}
