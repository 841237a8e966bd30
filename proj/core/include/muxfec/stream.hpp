// Streaming use of a block code by diagonal embedding: the block codeword
// started at slot s contributes its symbol j to the packet sent at s + j, so
// every packet carries n symbols drawn from n different blocks.
#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "muxfec/channel.hpp"
#include "muxfec/decoder.hpp"
#include "muxfec/matrix.hpp"
#include "muxfec/mux_code.hpp"

namespace muxfec {

using Packet = std::vector<FieldElement>;

/// Keeps the last n block codewords; one message in, one packet out.
class StreamEncoder {
 public:
  explicit StreamEncoder(Matrix g);

  Packet push(std::span<const FieldElement> message);
  /// Packet for a slot that starts no new block (message treated as zero).
  Packet push_idle();

  std::size_t slot() const { return slot_; }

 private:
  Packet emit();

  Matrix g_;
  std::size_t slot_ = 0;
  std::deque<Vector> in_flight_;
};

/// One packet per slot for messages.size() + n - 1 slots; the first n - 1
/// packets are zero-padded where no block has started yet.
std::vector<Packet> stream_encode(const std::vector<Vector>& messages, const Matrix& g);

struct StreamViolation {
  std::size_t block_start = 0;
  StreamKind kind = StreamKind::S;
  std::size_t index = 0;
  /// Absolute slots.
  std::optional<std::size_t> decode_slot;
  std::size_t deadline_slot = 0;
  /// Erasures seen by this block, as offsets into the block.
  std::vector<std::size_t> block_erasures;
  std::string reason;
};

struct StreamReport {
  std::size_t slots = 0;
  std::size_t blocks = 0;
  std::size_t symbols_checked = 0;
  std::size_t erased_slots = 0;
  std::size_t max_delay_v = 0;
  std::size_t max_delay_u = 0;
  /// Every per-block erasure pattern was admissible for the block channel.
  bool equivalence_ok = true;
  std::vector<StreamViolation> violations;

  bool pass() const { return equivalence_ok && violations.empty(); }
};

/// Encodes random messages (from message_seed) for every block that fits in
/// the horizon, erases whole packets per the sequence, decodes each block
/// at its earliest decode times and checks deadlines and values.
StreamReport simulate_stream(const Matrix& g, const DeadlineMap& deadlines, const ChannelModel& ch,
                             const ErasurePattern& erasures, std::uint64_t message_seed);

StreamReport simulate_stream(const MuxCode& code, const ErasurePattern& erasures, std::uint64_t message_seed);

}  // namespace muxfec
