#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ellcomb/elliptic.hpp"
#include "ellcomb/exact_scalar.hpp"
#include "ellcomb/numeric.hpp"

// Stirling numbers of the second kind and their q-, (q,r)-Whitney, (s,t)- and
// elliptic relatives, elliptic rook numbers and elliptic Lah numbers.
namespace ellcomb {

// Rows 0..N of a triangle; row n holds the entries k = 0..n.
template <class S>
struct TriangularTable {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::vector<S>> rows;

  long max_n() const { return static_cast<long>(rows.size()) - 1; }
  S at(long n, long k) const {
    if (n < 0 || n > max_n() || k < 0 || k > n) return S(0);
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
};

using IntegerTable = TriangularTable<BigInt>;
using ExactTable = TriangularTable<ExactScalar>;
using NumericTable = TriangularTable<Complex>;

// Triangle from T(0,0) = 1 and
//   T(n+1,k) = left(n,k) T(n,k-1) + right(n,k) T(n,k).
template <class S>
std::vector<std::vector<S>> build_triangle(long N, const std::function<S(long, long)>& left,
                                           const std::function<S(long, long)>& right) {
  std::vector<std::vector<S>> rows;
  if (N < 0) return rows;
  rows.push_back({S(1)});
  for (long n = 0; n < N; ++n) {
    const auto& prev = rows.back();
    std::vector<S> next(static_cast<std::size_t>(n) + 2, S(0));
    for (long k = 0; k <= n + 1; ++k) {
      S v(0);
      if (k >= 1) v = v + left(n, k) * prev[static_cast<std::size_t>(k - 1)];
      if (k <= n) v = v + right(n, k) * prev[static_cast<std::size_t>(k)];
      next[static_cast<std::size_t>(k)] = v;
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

// Fills an (N+1)-row table entry by entry.
template <class S>
std::vector<std::vector<S>> tabulate(long N, const std::function<S(long, long)>& entry) {
  std::vector<std::vector<S>> rows;
  for (long n = 0; n <= N; ++n) {
    std::vector<S> row;
    for (long k = 0; k <= n; ++k) row.push_back(entry(n, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

enum class StirlingRoute { recurrence, explicit_sum };
enum class QStirlingRoute { recurrence, carlitz_sum, h_special };
enum class EllipticStirlingRoute { recurrence, h_special, explicit_corollary, newton_oracle };
enum class HRoute { recurrence, explicit_sum };
enum class RookRoute { explicit_sum, oracle };
enum class LahRoute { recurrence, explicit_sum, oracle };

// S(n,k).
BigInt stirling2(long n, long k, StirlingRoute route = StirlingRoute::recurrence);
IntegerTable stirling2_table(long N);

// Carlitz q-Stirling numbers S_q(n,k).
ExactScalar q_stirling2(long n, long k, QStirlingRoute route = QStirlingRoute::recurrence);
ExactTable q_stirling2_table(long N);

// S_{a,b;q,p}(n,k), normalized without the weight prefactor:
//   [z]^n = sum_k S(n,k) [z](-)_k.
// Elliptic families are computed in quad precision and rounded on return.
Complex elliptic_stirling2(long n, long k, const EllipticParams& params,
                           EllipticStirlingRoute route = EllipticStirlingRoute::recurrence);
NumericTable elliptic_stirling2_table(long N, const EllipticParams& params,
                                      EllipticStirlingRoute route = EllipticStirlingRoute::recurrence);
// The same numbers times prod_{j<k} W(j).
Complex elliptic_stirling2_weighted(long n, long k, const EllipticParams& params);

// (q,r)-Whitney numbers of the second kind.
struct WhitneyValue {
  ExactScalar star;        // h_{n-k}([r], [m+r], ..., [km+r])
  ExactScalar normalized;  // star * q^(kr + m binom(k,2))
};
WhitneyValue whitney_qr(long n, long k, long m, long r, HRoute route = HRoute::recurrence);
ExactTable whitney_qr_table(long N, long m, long r, bool normalized = false);

// h_{n-k}([r]_{s,t}, [m+r]_{s,t}, ..., [km+r]_{s,t}).
Complex st_shifted_stirling(long n, long k, long m, long r, Complex s, Complex t, HRoute route = HRoute::recurrence);
NumericTable st_shifted_stirling_table(long N, long m, long r, Complex s, Complex t);

// h_{n-k}([r], [m+r], ..., [km+r]) over elliptic numbers.
Complex elliptic_shifted_stirling(long n, long k, long m, long r, const EllipticParams& params,
                                  HRoute route = HRoute::recurrence);
NumericTable elliptic_shifted_stirling_table(long N, long m, long r, const EllipticParams& params);

// Column heights b_1..b_n. Heights need not increase; the rook placement
// interpretation only applies when they do.
class FerrersBoard {
 public:
  static FerrersBoard make(std::vector<long> heights);
  static FerrersBoard staircase(long n);            // b_i = i - 1
  static FerrersBoard rectangle(long n, long height);

  long columns() const { return static_cast<long>(heights_.size()); }
  long height(long i) const { return heights_.at(static_cast<std::size_t>(i - 1)); }  // 1-based
  const std::vector<long>& heights() const { return heights_; }
  std::string describe() const;

 private:
  std::vector<long> heights_;
};

// Elliptic rook number r_j(a,b;q,p;B).
Complex elliptic_rook(const FerrersBoard& board, long j, const EllipticParams& params,
                      RookRoute route = RookRoute::explicit_sum);
// Row of r_0..r_n for the board.
std::vector<Complex> elliptic_rook_numbers(const FerrersBoard& board, const EllipticParams& params,
                                           RookRoute route = RookRoute::explicit_sum);

// Elliptic Lah numbers:
//   [z](+)_n = sum_k L(n,k) [z](-)_k, with the rising factorial over [0], [-1], [-2], ...
Complex elliptic_lah(long n, long k, const EllipticParams& params, LahRoute route = LahRoute::recurrence);
NumericTable elliptic_lah_table(long N, const EllipticParams& params, LahRoute route = LahRoute::recurrence);

// q-Lah numbers: the same connection coefficients over [i]_q, the end of the
// degeneration chain.
ExactTable q_lah_table(long N);

// Integer Lah numbers binom(n-1,k-1) n!/k!.
BigInt lah_number(long n, long k);

std::vector<std::pair<std::string, std::string>> describe_params(const EllipticParams& params);

}  // namespace ellcomb
