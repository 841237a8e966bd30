// The (W, B, N) sliding-window erasure channel.
//
// Every window of W consecutive slots may hold either at most N erasures at
// arbitrary positions, or a single run of between N+1 and B consecutive
// erasures. Slots outside the observed horizon count as unerased.
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "muxfec/galois.hpp"

namespace muxfec {

struct ChannelModel {
  std::size_t W = 0;
  std::size_t B = 0;
  std::size_t N = 0;

  /// Checks W > B > N >= 1.
  static ChannelModel make(std::size_t W, std::size_t B, std::size_t N);
};

class ErasurePattern {
 public:
  ErasurePattern() = default;
  /// Indices are sorted and deduplicated; each must be < horizon.
  ErasurePattern(std::size_t horizon, std::vector<std::size_t> erased);

  static ErasurePattern burst(std::size_t horizon, std::size_t start, std::size_t length);

  std::size_t horizon() const { return horizon_; }
  const std::vector<std::size_t>& erased() const { return erased_; }
  std::size_t count() const { return erased_.size(); }
  bool empty() const { return erased_.empty(); }
  bool contains(std::size_t slot) const;

  /// One flag per slot.
  std::vector<bool> mask() const;

  friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;
  friend auto operator<=>(const ErasurePattern&, const ErasurePattern&) = default;

 private:
  std::size_t horizon_ = 0;
  std::vector<std::size_t> erased_;
};

std::ostream& operator<<(std::ostream& os, const ErasurePattern& p);

bool is_admissible(const ErasurePattern& p, const ChannelModel& ch);

/// Depth-first enumeration in lexicographic order. With maximal_only, only
/// patterns to which no further slot can be added admissibly are returned.
std::vector<ErasurePattern> enumerate_admissible_patterns(std::size_t horizon, const ChannelModel& ch,
                                                          bool maximal_only);

/// A received symbol; nullopt is the erasure mark.
using ReceivedSymbol = std::optional<FieldElement>;

std::vector<ReceivedSymbol> apply_erasure(const std::vector<FieldElement>& codeword, const ErasurePattern& p);

struct ErasureSampler {
  double erasure_probability = 0.05;
  double burst_probability = 0.01;
};

/// Admissible pattern drawn by proposing per-slot erasures and bursts of
/// length uniform in [N+1, B], rejecting proposals that would break
/// admissibility. Deterministic for a seed.
ErasurePattern random_erasure_sequence(std::size_t length, const ChannelModel& ch, std::uint64_t seed,
                                       const ErasureSampler& sampler = {});

/// Trace format: one line per slot, "0" or "1".
void write_trace(std::ostream& os, const ErasurePattern& p);
ErasurePattern read_trace(std::istream& is);

}  // namespace muxfec
