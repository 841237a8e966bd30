#include "muxfec/decoder.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace muxfec {

const char* to_string(StreamKind kind) {
  switch (kind) {
    case StreamKind::V: return "v";
    case StreamKind::U: return "u";
    case StreamKind::S: return "s";
  }
  return "?";
}

DeadlineMap DeadlineMap::single(std::size_t k, std::size_t n, std::size_t T) {
  std::vector<SymbolDeadline> symbols;
  for (std::size_t i = 0; i < k; ++i) symbols.push_back({StreamKind::S, i, i, std::min(i + T, n - 1)});
  return DeadlineMap(std::move(symbols));
}

DeadlineMap DeadlineMap::merged(std::size_t k_v, std::size_t k_u, std::size_t h, std::size_t n, std::size_t T_v,
                                std::size_t T_u) {
  std::vector<SymbolDeadline> symbols;
  for (std::size_t i = 0; i < k_v; ++i) symbols.push_back({StreamKind::V, i, i, std::min(i + T_v, n - 1)});
  for (std::size_t i = 0; i < k_u; ++i) {
    symbols.push_back({StreamKind::U, i, h + i, std::min(h + i + T_u, n - 1)});
  }
  return DeadlineMap(std::move(symbols));
}

DeadlineMap DeadlineMap::with_deadline(std::size_t j, std::size_t deadline) const {
  auto copy = symbols_;
  copy.at(j).deadline = deadline;
  return DeadlineMap(std::move(copy));
}

SpanTracker::SpanTracker(std::size_t dim, const FieldSpec& field) : dim_(dim) {
  for (std::size_t i = 0; i < dim; ++i) null_basis_.push_back(UnitVector{dim, i}.to_vector(field));
}

void SpanTracker::add_column(std::span<const FieldElement> column) {
  if (column.size() != dim_) throw std::invalid_argument("column length does not match tracker dimension");
  if (null_basis_.empty()) return;

  std::vector<FieldElement> dots;
  dots.reserve(null_basis_.size());
  for (const auto& y : null_basis_) {
    FieldElement acc = FieldElement::zero(column[0].field());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!y[i].is_zero()) acc += y[i] * column[i];
    }
    dots.push_back(acc);
  }
  auto pivot_it = std::find_if(dots.begin(), dots.end(), [](const FieldElement& d) { return !d.is_zero(); });
  if (pivot_it == dots.end()) return;
  const auto pivot = static_cast<std::size_t>(pivot_it - dots.begin());

  // The surviving null vectors are those orthogonal to the new column.
  const FieldElement pivot_inv = dots[pivot].inverse();
  for (std::size_t r = 0; r < null_basis_.size(); ++r) {
    if (r == pivot || dots[r].is_zero()) continue;
    const FieldElement factor = dots[r] * pivot_inv;
    for (std::size_t i = 0; i < dim_; ++i) null_basis_[r][i] -= factor * null_basis_[pivot][i];
  }
  null_basis_.erase(null_basis_.begin() + static_cast<std::ptrdiff_t>(pivot));
}

bool SpanTracker::contains_unit(std::size_t j) const {
  return std::all_of(null_basis_.begin(), null_basis_.end(), [j](const Vector& y) { return y[j].is_zero(); });
}

std::vector<std::optional<std::size_t>> decode_times(const Matrix& g, const ErasurePattern& p) {
  if (p.horizon() != g.cols()) throw std::invalid_argument("pattern horizon does not match codeword length");
  std::vector<std::optional<std::size_t>> times(g.rows());
  SpanTracker tracker(g.rows(), g.field());
  std::size_t pending = g.rows();
  for (std::size_t t = 0; t < g.cols() && pending > 0; ++t) {
    if (p.contains(t)) continue;
    tracker.add_column(g.column(t));
    for (std::size_t j = 0; j < g.rows(); ++j) {
      if (!times[j] && tracker.contains_unit(j)) {
        times[j] = t;
        --pending;
      }
    }
  }
  return times;
}

std::optional<std::size_t> earliest_decode_time(const Matrix& g, const ErasurePattern& p, std::size_t j) {
  if (j >= g.rows()) throw std::out_of_range("symbol index out of range");
  return decode_times(g, p)[j];
}

namespace {

SymbolRecord make_record(const SymbolDeadline& d, std::optional<std::size_t> time) {
  SymbolRecord rec;
  rec.kind = d.kind;
  rec.index = d.index;
  rec.gen_time = d.gen_time;
  rec.deadline = d.deadline;
  rec.decode_time = time;
  rec.met = time.has_value() && *time <= d.deadline;
  return rec;
}

void check_deadlines(const Matrix& g, const DeadlineMap& deadlines) {
  if (deadlines.size() != g.rows()) throw std::invalid_argument("deadline map size does not match generator rows");
}

}  // namespace

DecodeReport timing_report(const Matrix& g, const ErasurePattern& p, const DeadlineMap& deadlines) {
  check_deadlines(g, deadlines);
  const auto times = decode_times(g, p);
  DecodeReport report;
  report.pass = true;
  for (std::size_t j = 0; j < g.rows(); ++j) {
    report.symbols.push_back(make_record(deadlines[j], times[j]));
    report.pass = report.pass && report.symbols.back().met;
  }
  return report;
}

DecodeReport decode_message(const Matrix& g, const std::vector<ReceivedSymbol>& received, const ErasurePattern& p,
                            const DeadlineMap& deadlines) {
  check_deadlines(g, deadlines);
  if (received.size() != g.cols()) throw std::invalid_argument("received word length does not match generator");
  for (std::size_t t = 0; t < received.size(); ++t) {
    if (received[t].has_value() == p.contains(t)) {
      throw std::invalid_argument("received word inconsistent with erasure pattern at slot " + std::to_string(t));
    }
  }

  DecodeReport report = timing_report(g, p, deadlines);
  for (std::size_t j = 0; j < g.rows(); ++j) {
    auto& rec = report.symbols[j];
    if (!rec.decode_time) continue;
    std::vector<std::size_t> cols;
    for (std::size_t t = 0; t <= *rec.decode_time; ++t) {
      if (!p.contains(t)) cols.push_back(t);
    }
    const auto h = solve_for_unit(g.select_columns(cols), j);
    if (!h) throw std::logic_error("span tracker and elimination disagree on symbol " + std::to_string(j));
    FieldElement value = FieldElement::zero(g.field());
    for (std::size_t i = 0; i < cols.size(); ++i) value += *received[cols[i]] * (*h)[i];
    rec.value = value;
  }
  return report;
}

VerificationSummary verify_achievable(const Matrix& g, const DeadlineMap& deadlines, const ChannelModel& ch,
                                      const VerifyOptions& options) {
  check_deadlines(g, deadlines);
  const auto patterns = enumerate_admissible_patterns(g.cols(), ch, options.maximal_only);

  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, patterns.size() / 16)));

  // Smallest failing pattern index; workers skip anything past it.
  std::atomic<std::size_t> first_failure{patterns.size()};
  auto scan = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && i < first_failure.load(std::memory_order_relaxed); ++i) {
      const auto times = decode_times(g, patterns[i]);
      bool ok = true;
      for (std::size_t j = 0; j < times.size() && ok; ++j) ok = times[j] && *times[j] <= deadlines[j].deadline;
      if (!ok) {
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };

  if (jobs <= 1) {
    scan(0, patterns.size());
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (patterns.size() + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::size_t begin = w * chunk;
      workers.emplace_back(scan, begin, std::min(patterns.size(), begin + chunk));
    }
  }

  VerificationSummary summary;
  summary.patterns_checked = patterns.size();
  const std::size_t fail = first_failure.load();
  summary.pass = fail == patterns.size();
  if (!summary.pass) {
    summary.counterexample = Counterexample{patterns[fail], timing_report(g, patterns[fail], deadlines)};
  }
  return summary;
}

}  // namespace muxfec
