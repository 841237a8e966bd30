#include "muxfec/stream.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "random.hpp"

namespace muxfec {

StreamEncoder::StreamEncoder(Matrix g) : g_(std::move(g)) {}

Packet StreamEncoder::push(std::span<const FieldElement> message) {
  if (message.size() != g_.rows()) throw std::invalid_argument("message length does not match generator rows");
  in_flight_.push_front(multiply(message, g_));
  return emit();
}

Packet StreamEncoder::push_idle() {
  in_flight_.push_front(Vector(g_.cols(), FieldElement::zero(g_.field())));
  return emit();
}

Packet StreamEncoder::emit() {
  if (in_flight_.size() > g_.cols()) in_flight_.pop_back();
  Packet packet(g_.cols(), FieldElement::zero(g_.field()));
  // in_flight_[j] started j slots ago and now sends its symbol j.
  for (std::size_t j = 0; j < in_flight_.size(); ++j) packet[j] = in_flight_[j][j];
  ++slot_;
  return packet;
}

std::vector<Packet> stream_encode(const std::vector<Vector>& messages, const Matrix& g) {
  StreamEncoder enc(g);
  std::vector<Packet> packets;
  for (const auto& msg : messages) packets.push_back(enc.push(msg));
  for (std::size_t i = 0; i + 1 < g.cols(); ++i) packets.push_back(enc.push_idle());
  return packets;
}

namespace {

struct SolvePlan {
  std::vector<std::optional<std::size_t>> times;
  // Per symbol: received offsets and their coefficients.
  std::vector<std::vector<std::size_t>> columns;
  std::vector<Vector> coefficients;
};

SolvePlan plan_for(const Matrix& g, const ErasurePattern& p) {
  SolvePlan plan;
  plan.times = decode_times(g, p);
  plan.columns.resize(g.rows());
  plan.coefficients.resize(g.rows());
  for (std::size_t j = 0; j < g.rows(); ++j) {
    if (!plan.times[j]) continue;
    for (std::size_t t = 0; t <= *plan.times[j]; ++t) {
      if (!p.contains(t)) plan.columns[j].push_back(t);
    }
    auto h = solve_for_unit(g.select_columns(plan.columns[j]), j);
    if (!h) throw std::logic_error("span tracker and elimination disagree");
    plan.coefficients[j] = std::move(*h);
  }
  return plan;
}

}  // namespace

StreamReport simulate_stream(const Matrix& g, const DeadlineMap& deadlines, const ChannelModel& ch,
                             const ErasurePattern& erasures, std::uint64_t message_seed) {
  if (deadlines.size() != g.rows()) throw std::invalid_argument("deadline map size does not match generator rows");
  if (!is_admissible(erasures, ch)) throw std::invalid_argument("erasure sequence is not admissible for the channel");

  const std::size_t n = g.cols();
  const std::size_t horizon = erasures.horizon();
  StreamReport report;
  report.slots = horizon;
  report.erased_slots = erasures.count();
  if (horizon < n) return report;
  report.blocks = horizon - n + 1;

  detail::Rng rng(message_seed);
  const std::uint32_t order = g.field().extension_order();
  std::vector<Vector> messages(report.blocks);
  for (auto& msg : messages) {
    for (std::size_t i = 0; i < g.rows(); ++i) {
      msg.push_back(FieldElement::from_code(g.field(), static_cast<std::uint32_t>(rng.below(order))));
    }
  }
  const auto packets = stream_encode(messages, g);

  std::map<std::vector<std::size_t>, SolvePlan> cache;
  for (std::size_t s = 0; s < report.blocks; ++s) {
    std::vector<std::size_t> local;
    for (std::size_t j = 0; j < n; ++j) {
      if (erasures.contains(s + j)) local.push_back(j);
    }
    const ErasurePattern block_pattern(n, local);
    auto it = cache.find(local);
    if (it == cache.end()) {
      if (!is_admissible(block_pattern, ch)) report.equivalence_ok = false;
      it = cache.emplace(local, plan_for(g, block_pattern)).first;
    }
    const SolvePlan& plan = it->second;

    for (std::size_t j = 0; j < g.rows(); ++j) {
      ++report.symbols_checked;
      const auto& d = deadlines[j];
      StreamViolation v{s, d.kind, d.index, std::nullopt, s + d.deadline, local, {}};
      if (!plan.times[j]) {
        v.reason = "never decodable";
        report.violations.push_back(v);
        continue;
      }
      v.decode_slot = s + *plan.times[j];
      const std::size_t delay = *plan.times[j] - d.gen_time;
      auto& max_delay = d.kind == StreamKind::U ? report.max_delay_u : report.max_delay_v;
      max_delay = std::max(max_delay, delay);
      if (*plan.times[j] > d.deadline) {
        v.reason = "deadline missed";
        report.violations.push_back(v);
        continue;
      }
      // Block s's symbol at offset t travels in packet s + t, lane t.
      FieldElement value = FieldElement::zero(g.field());
      for (std::size_t i = 0; i < plan.columns[j].size(); ++i) {
        const std::size_t t = plan.columns[j][i];
        value += packets[s + t][t] * plan.coefficients[j][i];
      }
      if (!(value == messages[s][j])) {
        v.reason = "decoded value mismatch";
        report.violations.push_back(v);
      }
    }
  }
  return report;
}

StreamReport simulate_stream(const MuxCode& code, const ErasurePattern& erasures, std::uint64_t message_seed) {
  return simulate_stream(code.G, code.deadlines(), code.params.channel(), erasures, message_seed);
}

}  // namespace muxfec
