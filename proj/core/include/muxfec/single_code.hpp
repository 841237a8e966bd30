// Rate-optimal single-stream (n, k, T) block codes for the (W, B, N) channel.
//
// Layout of the k x n generator, k = T-N+1, n = k+B, r = B-N+1:
//   columns 0..T-1   banded: row i holds 1 at column i and free entries at
//                    columns i+1..min(i+N-1, T-1);
//   columns T..n-1   rows 0..r-1 hold a single free entry at column T+i,
//                    rows r..k-1 are fully free.
// Free entries are nonzero elements of GF(q). One special entry, at
// (0, T), is drawn either from GF(q) or from GF(q^2) \ GF(q).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "muxfec/analysis.hpp"
#include "muxfec/decoder.hpp"
#include "muxfec/matrix.hpp"

namespace muxfec {

/// A randomized construction ran out of attempts.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SpecialVariant { BaseField, Extension };

const char* to_string(SpecialVariant variant);

struct BlockCode {
  std::size_t T = 0;
  std::size_t B = 0;
  std::size_t N = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  SpecialVariant variant = SpecialVariant::Extension;
  std::uint64_t seed = 0;
  /// Index of the accepted draw within its field.
  std::size_t attempt = 0;
  FieldSpec field{};
  Matrix G;

  std::size_t special_row() const { return 0; }
  std::size_t special_col() const { return T; }
  /// Rows of the diagonal-only block in columns T..n-1.
  std::size_t diagonal_rows() const { return B - N + 1; }
  Rational rate() const { return Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)); }
  DeadlineMap deadlines() const { return DeadlineMap::single(k, n, T); }
};

struct SingleBuildOptions {
  /// Fixes the field; the search then fails instead of moving to a larger q.
  std::optional<FieldSpec> field;
  unsigned retry_budget = 64;
  /// How many primes to try before giving up (ignored with a fixed field).
  unsigned max_fields = 12;
  /// Verification window; defaults to T+1.
  std::optional<std::size_t> W;
  unsigned jobs = 1;
};

/// Checks T >= B > N >= 1.
void check_single_parameters(std::size_t T, std::size_t B, std::size_t N);

/// One random draw of the template, without any checks.
Matrix draw_single_template(std::size_t T, std::size_t B, std::size_t N, SpecialVariant variant,
                            const FieldSpec& field, std::uint64_t seed);

/// Draws until a code passes the structure checks and exhaustive
/// achievability at window W. Deterministic for a seed.
BlockCode build_single_code(std::size_t T, std::size_t B, std::size_t N, SpecialVariant variant,
                            std::uint64_t seed, const SingleBuildOptions& options = {});

struct StructureReport {
  bool triangular_prefix = false;
  bool g1_mds = false;
  bool g2_mds = false;
  bool special_membership = false;
  bool rate_identity = false;

  bool pass() const { return triangular_prefix && g1_mds && g2_mds && special_membership && rate_identity; }
  /// Name of the first failing flag, or empty.
  std::string first_failure() const;
};

StructureReport verify_single_structure(const BlockCode& code);

/// Exhaustive check against the code's own deadlines at window W (default T+1).
VerificationSummary verify_achievable(const BlockCode& code, std::optional<std::size_t> W = std::nullopt,
                                      const VerifyOptions& options = {});

}  // namespace muxfec
