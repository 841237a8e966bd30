#include "muxfec/analysis.hpp"

#include <stdexcept>

namespace muxfec {
namespace {

void require_channel(int T, int B, int N) {
  if (N < 1) throw std::invalid_argument("rate formulas need N >= 1");
  if (B <= N) throw std::invalid_argument("rate formulas need B > N");
  if (T < B) throw std::invalid_argument("rate formulas need T >= B");
}

// Some T_u with T_v > T_u + B > T_u > B exists iff T_v >= 2B + 2.
void require_merge_regime(int T_v, int B, int N) {
  require_channel(T_v, B, N);
  if (T_v < 2 * B + 2) throw std::invalid_argument("merged-code rates need T_v >= 2B + 2");
}

void require_merge_regime(int T_v, int T_u, int B, int N) {
  require_merge_regime(T_v, B, N);
  if (T_u <= B) throw std::invalid_argument("merged-code rates need T_u > B");
  if (T_v <= T_u + B) throw std::invalid_argument("merged-code rates need T_v > T_u + B");
}

}  // namespace

Rational capacity(int T, int B, int N) {
  require_channel(T, B, N);
  return Rational(T - N + 1, T - N + 1 + B);
}

Rational mux_sum_rate(int T_v, int B, int N) {
  require_merge_regime(T_v, B, N);
  const Rational burst(T_v - 2 * N + 2, T_v - 2 * N + 2 + B);
  const Rational random(T_v - B + 1, T_v + 1);
  return std::max(burst, random);
}

Rational case_m_small_bound(int T_v, int B, int N) {
  require_merge_regime(T_v, B, N);
  return Rational(T_v - 2 * N + 3, T_v - 3 * N + 4 + 2 * B);
}

Rational separate_sum_rate(int T_v, int T_u, int B, int N) {
  require_merge_regime(T_v, T_u, B, N);
  const int k_u = T_u - N + 1;
  const int k_v = B >= 2 * N - 1 ? T_v - T_u - N + 1 : T_v - T_u + N - B;
  const Rational total(k_u + k_v);
  return Rational(k_v) / total * capacity(T_v, B, N) + Rational(k_u) / total * capacity(T_u, B, N);
}

Rational gain_percent(int T_v, int T_u, int B, int N) {
  const Rational sep = separate_sum_rate(T_v, T_u, B, N);
  return Rational(100) * (mux_sum_rate(T_v, B, N) - sep) / sep;
}

RateReport rate_report(int T_v, int T_u, int B, int N) {
  RateReport r;
  r.capacity_v = capacity(T_v, B, N);
  r.capacity_u = capacity(T_u, B, N);
  r.mux_sum_rate = mux_sum_rate(T_v, B, N);
  r.separate_sum_rate = separate_sum_rate(T_v, T_u, B, N);
  r.case_m_small_bound = case_m_small_bound(T_v, B, N);
  r.gain_percent = Rational(100) * (r.mux_sum_rate - r.separate_sum_rate) / r.separate_sum_rate;
  return r;
}

GainTable gain_table(int B, int N, int tv_lo, int tv_hi, int tu_lo, int tu_hi) {
  if (tv_lo > tv_hi || tu_lo > tu_hi) throw std::invalid_argument("gain table ranges must be non-empty");
  GainTable table;
  table.B = B;
  table.N = N;
  for (int tv = tv_lo; tv <= tv_hi; ++tv) table.tv_values.push_back(tv);
  for (int tu = tu_lo; tu <= tu_hi; ++tu) table.tu_values.push_back(tu);
  for (int tv : table.tv_values) {
    for (int tu : table.tu_values) {
      if (tu > B && tv > tu + B && B > N && N >= 1) {
        table.cells.emplace_back(rate_report(tv, tu, B, N));
      } else {
        table.cells.emplace_back(std::nullopt);
      }
    }
  }
  return table;
}

std::string format_decimal(const Rational& value, int digits) {
  if (digits < 0 || digits > 15) throw std::invalid_argument("format_decimal digits out of range");
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = value < 0;
  const Rational magnitude = negative ? -value : value;
  // floor(|v| * scale + 1/2)
  const Rational shifted = magnitude * scale + Rational(1, 2);
  const std::int64_t scaled = shifted.numerator() / shifted.denominator();

  std::string whole = std::to_string(scaled / scale);
  std::string out = (negative && scaled != 0 ? "-" : "") + whole;
  if (digits > 0) {
    std::string frac = std::to_string(scaled % scale);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

std::string format_exact(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace muxfec
