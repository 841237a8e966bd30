// Deadline-aware linear decoding and exhaustive achievability checks.
//
// For a linear code with generator G, message symbol j is recoverable from
// the received positions S iff the unit vector e_j lies in the column span
// of G restricted to S. The earliest decode time of j is the first slot t
// for which that holds with S = unerased columns <= t.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "muxfec/channel.hpp"
#include "muxfec/matrix.hpp"

namespace muxfec {

/// Which stream a message symbol belongs to; S for single-stream codes.
enum class StreamKind { V, U, S };

const char* to_string(StreamKind kind);

struct SymbolDeadline {
  StreamKind kind = StreamKind::S;
  std::size_t index = 0;
  std::size_t gen_time = 0;
  std::size_t deadline = 0;
};

/// One entry per generator row, in row order.
class DeadlineMap {
 public:
  DeadlineMap() = default;
  explicit DeadlineMap(std::vector<SymbolDeadline> symbols) : symbols_(std::move(symbols)) {}

  /// s[i]: generated at i, due at min(i + T, n - 1).
  static DeadlineMap single(std::size_t k, std::size_t n, std::size_t T);
  /// v[i] at i, due min(i + T_v, n-1); u[i] at h + i, due min(h + i + T_u, n-1).
  static DeadlineMap merged(std::size_t k_v, std::size_t k_u, std::size_t h, std::size_t n, std::size_t T_v,
                            std::size_t T_u);

  std::size_t size() const { return symbols_.size(); }
  const SymbolDeadline& operator[](std::size_t j) const { return symbols_[j]; }
  const std::vector<SymbolDeadline>& symbols() const { return symbols_; }

  /// Copy with symbol j's deadline replaced.
  DeadlineMap with_deadline(std::size_t j, std::size_t deadline) const;

 private:
  std::vector<SymbolDeadline> symbols_;
};

/// Incrementally tracks which unit vectors lie in the span of the columns
/// added so far, by maintaining a basis of the left null space.
class SpanTracker {
 public:
  SpanTracker(std::size_t dim, const FieldSpec& field);

  void add_column(std::span<const FieldElement> column);
  bool contains_unit(std::size_t j) const;
  /// Dimension of the span.
  std::size_t rank() const { return dim_ - null_basis_.size(); }

 private:
  std::size_t dim_;
  std::vector<Vector> null_basis_;
};

/// Earliest decode time per generator row under pattern p (nullopt = never).
std::vector<std::optional<std::size_t>> decode_times(const Matrix& g, const ErasurePattern& p);

std::optional<std::size_t> earliest_decode_time(const Matrix& g, const ErasurePattern& p, std::size_t j);

struct SymbolRecord {
  StreamKind kind = StreamKind::S;
  std::size_t index = 0;
  std::size_t gen_time = 0;
  std::size_t deadline = 0;
  std::optional<std::size_t> decode_time;
  std::optional<FieldElement> value;
  bool met = false;
};

struct DecodeReport {
  std::vector<SymbolRecord> symbols;
  bool pass = false;
};

/// Timing-only report (no values) for pattern p.
DecodeReport timing_report(const Matrix& g, const ErasurePattern& p, const DeadlineMap& deadlines);

/// Decodes every symbol at its earliest decode time from the received word.
DecodeReport decode_message(const Matrix& g, const std::vector<ReceivedSymbol>& received, const ErasurePattern& p,
                            const DeadlineMap& deadlines);

struct VerifyOptions {
  /// 0 = hardware concurrency.
  unsigned jobs = 0;
  /// Decoding is monotone in the erasure set, so maximal patterns suffice.
  bool maximal_only = true;
};

struct Counterexample {
  ErasurePattern pattern;
  DecodeReport report;
};

struct VerificationSummary {
  std::size_t patterns_checked = 0;
  bool pass = false;
  /// First failing pattern in enumeration order.
  std::optional<Counterexample> counterexample;
};

VerificationSummary verify_achievable(const Matrix& g, const DeadlineMap& deadlines, const ChannelModel& ch,
                                      const VerifyOptions& options = {});

}  // namespace muxfec
