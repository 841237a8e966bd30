// Closed-form rate quantities: single-stream capacity, the merged-code sum
// rate, the separate-encoding baseline and the gain between them. All exact;
// decimals only appear through format_decimal().
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace muxfec {

using Rational = boost::rational<std::int64_t>;

/// (T-N+1)/(T-N+1+B). Needs T >= B > N >= 1.
Rational capacity(int T, int B, int N);

/// max((T_v-2N+2)/(T_v-2N+2+B), (T_v-B+1)/(T_v+1)); the first term wins
/// exactly when B >= 2N-1.
Rational mux_sum_rate(int T_v, int B, int N);

/// Bound on merges of length 1 <= m <= N-1: (T_v-2N+3)/(T_v-3N+4+2B).
Rational case_m_small_bound(int T_v, int B, int N);

/// Time-sharing two rate-optimal single-stream codes in the k_v:k_u
/// proportion of the merged construction.
Rational separate_sum_rate(int T_v, int T_u, int B, int N);

/// 100 * (mux - sep) / sep, exact.
Rational gain_percent(int T_v, int T_u, int B, int N);

struct RateReport {
  Rational capacity_v;
  Rational capacity_u;
  Rational mux_sum_rate;
  Rational separate_sum_rate;
  Rational case_m_small_bound;
  Rational gain_percent;
};

RateReport rate_report(int T_v, int T_u, int B, int N);

/// Cell (T_v, T_u) is populated iff T_v > T_u + B and T_u > B.
struct GainTable {
  int B = 0;
  int N = 0;
  std::vector<int> tv_values;
  std::vector<int> tu_values;
  /// Row-major over tv_values x tu_values.
  std::vector<std::optional<RateReport>> cells;

  const std::optional<RateReport>& at(std::size_t tv_index, std::size_t tu_index) const {
    return cells[tv_index * tu_values.size() + tu_index];
  }
};

GainTable gain_table(int B, int N, int tv_lo, int tv_hi, int tu_lo, int tu_hi);

/// Half-up rounding to `digits` decimals (half away from zero for negatives).
std::string format_decimal(const Rational& value, int digits);
/// "p/q", or "p" for integers.
std::string format_exact(const Rational& value);

}  // namespace muxfec
