#include "muxfec/channel.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "random.hpp"

namespace muxfec {

ChannelModel ChannelModel::make(std::size_t W, std::size_t B, std::size_t N) {
  if (N < 1) throw std::invalid_argument("channel needs N >= 1");
  if (B <= N) throw std::invalid_argument("channel needs B > N");
  if (W <= B) throw std::invalid_argument("channel needs W > B");
  return ChannelModel{W, B, N};
}

ErasurePattern::ErasurePattern(std::size_t horizon, std::vector<std::size_t> erased)
    : horizon_(horizon), erased_(std::move(erased)) {
  std::sort(erased_.begin(), erased_.end());
  erased_.erase(std::unique(erased_.begin(), erased_.end()), erased_.end());
  if (!erased_.empty() && erased_.back() >= horizon_) {
    throw std::out_of_range("erased slot " + std::to_string(erased_.back()) + " outside horizon " +
                            std::to_string(horizon_));
  }
}

ErasurePattern ErasurePattern::burst(std::size_t horizon, std::size_t start, std::size_t length) {
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < length; ++i) slots.push_back(start + i);
  return {horizon, std::move(slots)};
}

bool ErasurePattern::contains(std::size_t slot) const {
  return std::binary_search(erased_.begin(), erased_.end(), slot);
}

std::vector<bool> ErasurePattern::mask() const {
  std::vector<bool> m(horizon_, false);
  for (auto e : erased_) m[e] = true;
  return m;
}

std::ostream& operator<<(std::ostream& os, const ErasurePattern& p) {
  os << "{";
  for (std::size_t i = 0; i < p.erased().size(); ++i) os << (i ? "," : "") << p.erased()[i];
  return os << "}";
}

namespace {

// Window [start, start+W) over sorted erasures.
bool window_ok(const std::vector<std::size_t>& erased, std::size_t start, const ChannelModel& ch) {
  auto first = std::lower_bound(erased.begin(), erased.end(), start);
  auto last = std::lower_bound(first, erased.end(), start + ch.W);
  const auto count = static_cast<std::size_t>(last - first);
  if (count <= ch.N) return true;
  if (count > ch.B) return false;
  return *(last - 1) - *first + 1 == count;
}

// Only windows containing `slot` can change when `slot` is added.
bool windows_around_ok(const std::vector<std::size_t>& erased, std::size_t slot, const ChannelModel& ch) {
  const std::size_t lo = slot + 1 >= ch.W ? slot + 1 - ch.W : 0;
  for (std::size_t s = lo; s <= slot; ++s) {
    if (!window_ok(erased, s, ch)) return false;
  }
  return true;
}

bool can_add(std::vector<std::size_t>& erased, std::size_t slot, const ChannelModel& ch) {
  auto pos = std::lower_bound(erased.begin(), erased.end(), slot);
  pos = erased.insert(pos, slot);
  const bool ok = windows_around_ok(erased, slot, ch);
  erased.erase(pos);
  return ok;
}

void enumerate_from(std::size_t horizon, const ChannelModel& ch, bool maximal_only, std::vector<std::size_t>& current,
                    std::vector<ErasurePattern>& out) {
  bool maximal = true;
  if (maximal_only) {
    for (std::size_t j = 0; j < horizon && maximal; ++j) {
      if (!std::binary_search(current.begin(), current.end(), j) && can_add(current, j, ch)) maximal = false;
    }
  }
  if (!maximal_only || maximal) out.emplace_back(horizon, current);

  const std::size_t next = current.empty() ? 0 : current.back() + 1;
  for (std::size_t j = next; j < horizon; ++j) {
    current.push_back(j);
    if (windows_around_ok(current, j, ch)) enumerate_from(horizon, ch, maximal_only, current, out);
    current.pop_back();
  }
}

}  // namespace

bool is_admissible(const ErasurePattern& p, const ChannelModel& ch) {
  for (std::size_t s = 0; s < p.horizon(); ++s) {
    if (!window_ok(p.erased(), s, ch)) return false;
  }
  return true;
}

std::vector<ErasurePattern> enumerate_admissible_patterns(std::size_t horizon, const ChannelModel& ch,
                                                          bool maximal_only) {
  if (horizon < 1) throw std::invalid_argument("enumeration horizon must be >= 1");
  std::vector<ErasurePattern> out;
  std::vector<std::size_t> current;
  enumerate_from(horizon, ch, maximal_only, current, out);
  return out;
}

std::vector<ReceivedSymbol> apply_erasure(const std::vector<FieldElement>& codeword, const ErasurePattern& p) {
  if (codeword.size() != p.horizon()) {
    throw std::invalid_argument("codeword length " + std::to_string(codeword.size()) + " != pattern horizon " +
                                std::to_string(p.horizon()));
  }
  std::vector<ReceivedSymbol> out(codeword.begin(), codeword.end());
  for (auto e : p.erased()) out[e].reset();
  return out;
}

ErasurePattern random_erasure_sequence(std::size_t length, const ChannelModel& ch, std::uint64_t seed,
                                       const ErasureSampler& sampler) {
  if (length < 1) throw std::invalid_argument("erasure sequence length must be >= 1");
  detail::Rng rng(seed);
  std::vector<std::size_t> erased;
  std::size_t t = 0;
  while (t < length) {
    if (rng.bernoulli(sampler.burst_probability)) {
      const std::size_t len = std::min<std::size_t>(rng.between(ch.N + 1, ch.B), length - t);
      const std::size_t before = erased.size();
      bool ok = true;
      for (std::size_t i = 0; i < len && ok; ++i) {
        erased.push_back(t + i);
        ok = windows_around_ok(erased, t + i, ch);
      }
      if (ok) {
        t += len;
        continue;
      }
      erased.resize(before);
    }
    if (rng.bernoulli(sampler.erasure_probability)) {
      erased.push_back(t);
      if (!windows_around_ok(erased, t, ch)) erased.pop_back();
    }
    ++t;
  }
  return {length, std::move(erased)};
}

void write_trace(std::ostream& os, const ErasurePattern& p) {
  const auto m = p.mask();
  for (bool e : m) os << (e ? '1' : '0') << '\n';
}

ErasurePattern read_trace(std::istream& is) {
  std::vector<std::size_t> erased;
  std::size_t slot = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "1") {
      erased.push_back(slot);
    } else if (line != "0") {
      throw std::invalid_argument("trace line " + std::to_string(slot + 1) + " is not 0 or 1: '" + line + "'");
    }
    ++slot;
  }
  return {slot, std::move(erased)};
}

}  // namespace muxfec
