// Shared fixtures for the test binaries.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "muxfec/muxfec.hpp"

namespace testing_support {

inline muxfec::FieldElement random_element(const muxfec::FieldSpec& f, std::mt19937_64& rng, bool base_only = false) {
  const std::uint32_t order = base_only ? f.q : f.q * f.q;
  return muxfec::FieldElement::from_code(f, static_cast<std::uint32_t>(rng() % order));
}

inline muxfec::Matrix random_matrix(std::size_t rows, std::size_t cols, const muxfec::FieldSpec& f,
                                    std::mt19937_64& rng, double zero_bias = 0.0) {
  muxfec::Matrix m(rows, cols, f);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (u(rng) >= zero_bias) m(i, j) = random_element(f, rng);
    }
  }
  return m;
}

inline muxfec::Vector random_message(std::size_t k, const muxfec::FieldSpec& f, std::mt19937_64& rng) {
  muxfec::Vector v;
  for (std::size_t i = 0; i < k; ++i) v.push_back(random_element(f, rng));
  return v;
}

/// The (T_v, T_u, B, N) = (12, 6, 4, 2) code, built once.
inline const muxfec::MuxCode& example_code() {
  static const muxfec::MuxCode code = muxfec::build_mux_code(muxfec::select_parameters(12, 6, 4, 2), 1);
  return code;
}

/// The (12, 6, 4, 3) random-dominant code, built once.
inline const muxfec::MuxCode& random_dominant_code() {
  static const muxfec::MuxCode code = muxfec::build_mux_code(muxfec::select_parameters(12, 6, 4, 3), 1);
  return code;
}

/// A merged code whose v constituent is `excess` rows longer than the
/// construction allows at merge length m. Entries are drawn as usual.
struct ConverseInstance {
  std::size_t T_v, T_u, B, N, excess, m;
};

struct ConverseResult {
  muxfec::MergeBoundCheck bound;
  muxfec::VerificationSummary summary;
};

inline ConverseResult run_converse(const ConverseInstance& c, std::uint64_t seed = 1) {
  const auto params = muxfec::select_parameters(c.T_v, c.T_u, c.B, c.N);
  const std::size_t k_v = params.k_v + c.excess;
  const std::size_t T1 = k_v + c.N - 1;
  muxfec::SingleBuildOptions options;
  options.field = muxfec::FieldSpec::with_default_extension(31);
  const auto g1 = muxfec::build_single_code(T1, c.B, c.N, muxfec::SpecialVariant::BaseField, seed, options);
  const auto g2 = muxfec::build_single_code(c.T_u, c.B, c.N, muxfec::SpecialVariant::Extension, seed + 1, options);
  const auto G = muxfec::assemble_merged(g1.G, g2.G, c.m);
  const std::size_t h = k_v + c.B - c.m;
  const auto deadlines = muxfec::DeadlineMap::merged(k_v, g2.k, h, G.cols(), c.T_v, c.T_u);
  ConverseResult out;
  out.bound = muxfec::check_merge_bounds(c.T_v, T1, c.T_u, c.m, c.B, c.N);
  out.summary = muxfec::verify_achievable(G, deadlines, muxfec::ChannelModel::make(c.T_v + 1, c.B, c.N));
  return out;
}

inline const std::vector<ConverseInstance>& converse_instances() {
  static const std::vector<ConverseInstance> cases{
      {12, 6, 4, 2, 1, 4}, {13, 6, 4, 2, 1, 4}, {14, 7, 5, 2, 1, 5},
      {12, 6, 4, 2, 2, 1}, {14, 7, 5, 3, 2, 2}, {10, 5, 3, 2, 1, 3},
  };
  return cases;
}

}  // namespace testing_support
