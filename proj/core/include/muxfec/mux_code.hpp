// Multiplexed codes for a less-urgent stream v (deadline T_v) and an urgent
// stream u (deadline T_u). Each stream is encoded by its own single-stream
// code; the last m symbols of the v codeword are added onto the first m
// symbols of the u codeword, so u occupies slots h..n-1 with h = k_v+B-m.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "muxfec/analysis.hpp"
#include "muxfec/decoder.hpp"
#include "muxfec/single_code.hpp"

namespace muxfec {

/// Burst-dominant when B >= 2N-1, random-dominant otherwise.
enum class Regime { BurstDominant, RandomDominant };

const char* to_string(Regime regime);
Regime parse_regime(const std::string& text);

struct MuxParams {
  std::size_t T_v = 0;
  std::size_t T_u = 0;
  std::size_t B = 0;
  std::size_t N = 0;
  std::size_t W = 0;
  std::size_t T_u_prime = 0;
  /// Delay of the v constituent, k_v + N - 1.
  std::size_t T_v_prime = 0;
  std::size_t k_v = 0;
  std::size_t k_u = 0;
  std::size_t m = 0;
  std::size_t h = 0;
  std::size_t n = 0;
  Regime regime = Regime::BurstDominant;

  Rational sum_rate() const {
    return Rational(static_cast<std::int64_t>(k_v + k_u), static_cast<std::int64_t>(n));
  }
  ChannelModel channel() const { return ChannelModel::make(W, B, N); }
  DeadlineMap deadlines() const { return DeadlineMap::merged(k_v, k_u, h, n, T_v, T_u); }
};

/// Needs T_v > T_u + B, T_u > B > N >= 1 and, if given, B < T_u' <= T_u and
/// W > T_v. T_u' defaults to T_u and W to T_v + 1.
MuxParams select_parameters(std::size_t T_v, std::size_t T_u, std::size_t B, std::size_t N,
                            std::optional<std::size_t> T_u_prime = std::nullopt,
                            std::optional<std::size_t> W = std::nullopt);

/// xv[0..a-m) | xv[a-m..a) + xu[0..m) | xu[m..).
std::vector<FieldElement> merge_codewords(const std::vector<FieldElement>& xv, const std::vector<FieldElement>& xu,
                                          std::size_t m);

/// Block layout of the merged generator: G1 in the top rows from column 0,
/// G2 in the bottom rows from column G1.cols() - m.
Matrix assemble_merged(const Matrix& g1, const Matrix& g2, std::size_t m);

struct MuxCode {
  MuxParams params;
  std::uint64_t seed = 0;
  std::size_t attempt = 0;
  FieldSpec field{};
  BlockCode g1;
  BlockCode g2;
  Matrix G;

  DeadlineMap deadlines() const { return params.deadlines(); }
  /// Left (T_v-2N+2) x (T_v-N+1) block; only meaningful when burst-dominant.
  Matrix left_block() const;
};

struct MuxBuildOptions {
  unsigned retry_budget = 64;
  /// Draw budget for each constituent per merged attempt.
  unsigned constituent_budget = 16;
  unsigned max_fields = 12;
  /// First prime tried; defaults to the smallest prime >= max(k_v, k_u) + B.
  std::optional<std::uint32_t> initial_q;
  unsigned jobs = 1;
};

/// Draws constituents in one shared field, assembles, checks the left-block
/// MDS property (burst-dominant) and exhaustive achievability at params.W.
MuxCode build_mux_code(const MuxParams& params, std::uint64_t seed, const MuxBuildOptions& options = {});

VerificationSummary verify_achievable(const MuxCode& code, std::optional<std::size_t> W = std::nullopt,
                                      const VerifyOptions& options = {});

struct MergeBoundCheck {
  bool allowed = false;
  std::string reason;
};

/// Necessary conditions on (T_v', T_u', m) for a merge meeting deadline T_v.
MergeBoundCheck check_merge_bounds(std::size_t T_v, std::size_t T_v_prime, std::size_t T_u_prime, std::size_t m,
                                   std::size_t B, std::size_t N);

}  // namespace muxfec
