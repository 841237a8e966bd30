#include "muxfec/serialize.hpp"

#include <json.hpp>

namespace muxfec {

using nlohmann::ordered_json;

std::string library_version() { return MUXFEC_VERSION; }

namespace {

ordered_json ext_poly(const FieldSpec& f) { return ordered_json::array({f.c0, f.c1, 1}); }

constexpr const char* kEntriesMark = "@entries@";

ordered_json matrix_object(const Matrix& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = kEntriesMark;
  return j;
}

// Pretty dump, but with the entry array laid out one matrix row per line.
std::string dump_with_matrix(const ordered_json& j, const Matrix& m) {
  std::string text = j.dump(2);
  const std::string mark = std::string("\"") + kEntriesMark + "\"";
  const auto pos = text.find(mark);
  if (pos == std::string::npos) return text + "\n";
  const auto line_start = text.rfind('\n', pos) + 1;
  const std::string indent(text.find_first_not_of(' ', line_start) - line_start, ' ');

  const auto codes = m.codes();
  std::string rows = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows += "\n" + indent + "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rows += std::to_string(codes[r * m.cols() + c]);
      if (r + 1 < m.rows() || c + 1 < m.cols()) rows += c + 1 < m.cols() ? ", " : ",";
    }
  }
  rows += "\n" + indent + "]";
  if (m.rows() == 0 || m.cols() == 0) rows = "[]";
  text.replace(pos, mark.size(), rows);
  return text + "\n";
}

ordered_json record_json(const SymbolRecord& r) {
  ordered_json j;
  j["kind"] = to_string(r.kind);
  j["index"] = r.index;
  j["gen_time"] = r.gen_time;
  j["deadline"] = r.deadline;
  j["decode_time"] = r.decode_time ? ordered_json(*r.decode_time) : ordered_json(nullptr);
  if (r.value) j["value"] = r.value->code();
  j["met"] = r.met;
  return j;
}

ordered_json report_object(const DecodeReport& report) {
  ordered_json j;
  j["pass"] = report.pass;
  j["symbols"] = ordered_json::array();
  for (const auto& r : report.symbols) j["symbols"].push_back(record_json(r));
  return j;
}

std::string rational_text(const Rational& r, bool exact, int digits) {
  return exact ? format_exact(r) : format_decimal(r, digits);
}

template <typename T>
T field_of(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("code spec missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("code spec field '") + key + "' has the wrong type");
  }
}

}  // namespace

CodeSpec to_code_spec(const MuxCode& code) {
  CodeSpec spec;
  spec.params = code.params;
  spec.seed = code.seed;
  spec.g1_seed = code.g1.seed;
  spec.g2_seed = code.g2.seed;
  spec.field = code.field;
  spec.G = code.G;
  spec.provenance = "muxfec " + library_version();
  return spec;
}

std::string code_spec_json(const CodeSpec& spec) {
  const auto& p = spec.params;
  ordered_json j;
  j["T_v"] = p.T_v;
  j["T_u"] = p.T_u;
  j["B"] = p.B;
  j["N"] = p.N;
  j["W"] = p.W;
  j["T_u_prime"] = p.T_u_prime;
  j["regime"] = to_string(p.regime);
  j["k_v"] = p.k_v;
  j["k_u"] = p.k_u;
  j["m"] = p.m;
  j["h"] = p.h;
  j["n"] = p.n;
  j["seed"] = spec.seed;
  j["g1_seed"] = spec.g1_seed;
  j["g2_seed"] = spec.g2_seed;
  j["q"] = spec.field.q;
  j["ext_poly"] = ext_poly(spec.field);
  j["matrix"] = matrix_object(spec.G);
  j["provenance"] = spec.provenance;
  return dump_with_matrix(j, spec.G);
}

std::string code_spec_json(const MuxCode& code) { return code_spec_json(to_code_spec(code)); }

CodeSpec parse_code_spec(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("code spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("code spec must be a JSON object");

  CodeSpec spec;
  try {
    spec.params = select_parameters(field_of<std::size_t>(j, "T_v"), field_of<std::size_t>(j, "T_u"),
                                    field_of<std::size_t>(j, "B"), field_of<std::size_t>(j, "N"),
                                    field_of<std::size_t>(j, "T_u_prime"), field_of<std::size_t>(j, "W"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("code spec parameters invalid: ") + e.what());
  }
  if (j.contains("regime") && field_of<std::string>(j, "regime") != to_string(spec.params.regime)) {
    throw FormatError("code spec regime disagrees with its parameters");
  }
  spec.seed = field_of<std::uint64_t>(j, "seed");
  spec.g1_seed = j.contains("g1_seed") ? field_of<std::uint64_t>(j, "g1_seed") : 0;
  spec.g2_seed = j.contains("g2_seed") ? field_of<std::uint64_t>(j, "g2_seed") : 0;
  spec.provenance = j.contains("provenance") ? field_of<std::string>(j, "provenance") : "";

  const auto poly = field_of<std::vector<std::uint32_t>>(j, "ext_poly");
  if (poly.size() != 3 || poly[2] != 1) throw FormatError("ext_poly must be [c0, c1, 1]");
  try {
    spec.field = FieldSpec::make(field_of<std::uint32_t>(j, "q"), poly[1], poly[0]);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("code spec field invalid: ") + e.what());
  }

  const auto m = field_of<ordered_json>(j, "matrix");
  const auto rows = field_of<std::size_t>(m, "rows");
  const auto cols = field_of<std::size_t>(m, "cols");
  const auto entries = field_of<std::vector<std::uint32_t>>(m, "entries");
  if (rows != spec.params.k_v + spec.params.k_u || cols != spec.params.n) {
    throw FormatError("matrix shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " does not match parameters");
  }
  if (entries.size() != rows * cols) throw FormatError("matrix entry count does not match rows * cols");
  for (auto e : entries) {
    if (e >= spec.field.extension_order()) throw FormatError("matrix entry " + std::to_string(e) + " out of field");
  }
  spec.G = Matrix::from_codes(rows, cols, spec.field, entries);
  return spec;
}

std::string matrix_json(const Matrix& m) {
  ordered_json j;
  j["q"] = m.field().q;
  j["ext_poly"] = ext_poly(m.field());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = kEntriesMark;
  return dump_with_matrix(j, m);
}

std::string decode_report_json(const DecodeReport& report) { return report_object(report).dump(2) + "\n"; }

std::string verification_json(const VerificationSummary& summary, const ChannelModel& ch) {
  ordered_json j;
  j["pass"] = summary.pass;
  j["W"] = ch.W;
  j["B"] = ch.B;
  j["N"] = ch.N;
  j["patterns_checked"] = summary.patterns_checked;
  if (summary.counterexample) {
    ordered_json ce;
    ce["pattern"] = summary.counterexample->pattern.erased();
    ce["report"] = report_object(summary.counterexample->report);
    j["counterexample"] = ce;
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string stream_report_json(const StreamReport& report, std::size_t max_violations) {
  ordered_json j;
  j["pass"] = report.pass();
  j["slots"] = report.slots;
  j["blocks"] = report.blocks;
  j["symbols_checked"] = report.symbols_checked;
  j["erased_slots"] = report.erased_slots;
  j["max_delay_v"] = report.max_delay_v;
  j["max_delay_u"] = report.max_delay_u;
  j["equivalence_ok"] = report.equivalence_ok;
  j["violation_count"] = report.violations.size();
  j["violations"] = ordered_json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < max_violations; ++i) {
    const auto& v = report.violations[i];
    ordered_json o;
    o["block_start"] = v.block_start;
    o["kind"] = to_string(v.kind);
    o["index"] = v.index;
    o["decode_slot"] = v.decode_slot ? ordered_json(*v.decode_slot) : ordered_json(nullptr);
    o["deadline_slot"] = v.deadline_slot;
    o["block_erasures"] = v.block_erasures;
    o["reason"] = v.reason;
    j["violations"].push_back(o);
  }
  return j.dump(2) + "\n";
}

std::string gain_table_json(const GainTable& table, bool exact) {
  ordered_json j;
  j["B"] = table.B;
  j["N"] = table.N;
  j["cells"] = ordered_json::array();
  for (std::size_t a = 0; a < table.tv_values.size(); ++a) {
    for (std::size_t b = 0; b < table.tu_values.size(); ++b) {
      const auto& cell = table.at(a, b);
      if (!cell) continue;
      ordered_json c;
      c["T_v"] = table.tv_values[a];
      c["T_u"] = table.tu_values[b];
      c["capacity_v"] = rational_text(cell->capacity_v, exact, 4);
      c["capacity_u"] = rational_text(cell->capacity_u, exact, 4);
      c["mux_sum_rate"] = rational_text(cell->mux_sum_rate, exact, 4);
      c["separate_sum_rate"] = rational_text(cell->separate_sum_rate, exact, 4);
      c["case_m_small_bound"] = rational_text(cell->case_m_small_bound, exact, 4);
      c["gain_percent"] = rational_text(cell->gain_percent, exact, 2);
      j["cells"].push_back(c);
    }
  }
  return j.dump(2) + "\n";
}

std::string error_json(std::string_view kind, std::string_view message) {
  ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  return j.dump() + "\n";
}

}  // namespace muxfec
