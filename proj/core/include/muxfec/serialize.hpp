// JSON documents for code specs, matrix dumps and reports. Output is
// deterministic: same inputs, same bytes.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "muxfec/analysis.hpp"
#include "muxfec/decoder.hpp"
#include "muxfec/mux_code.hpp"
#include "muxfec/stream.hpp"

namespace muxfec {

/// Malformed or inconsistent input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string library_version();

/// A merged code as stored on disk.
struct CodeSpec {
  MuxParams params;
  std::uint64_t seed = 0;
  std::uint64_t g1_seed = 0;
  std::uint64_t g2_seed = 0;
  FieldSpec field{};
  Matrix G;
  std::string provenance;
};

CodeSpec to_code_spec(const MuxCode& code);
std::string code_spec_json(const CodeSpec& spec);
std::string code_spec_json(const MuxCode& code);
/// Validates parameters, field and matrix shape; throws FormatError.
CodeSpec parse_code_spec(std::string_view text);

/// {q, ext_poly: [c0, c1, 1], rows, cols, entries (row-major display codes)}.
std::string matrix_json(const Matrix& m);

std::string decode_report_json(const DecodeReport& report);
std::string verification_json(const VerificationSummary& summary, const ChannelModel& ch);
std::string stream_report_json(const StreamReport& report, std::size_t max_violations = 20);
std::string gain_table_json(const GainTable& table, bool exact);
std::string error_json(std::string_view kind, std::string_view message);

}  // namespace muxfec
