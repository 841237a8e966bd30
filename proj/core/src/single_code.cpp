#include "muxfec/single_code.hpp"

#include "random.hpp"

namespace muxfec {

const char* to_string(SpecialVariant variant) {
  return variant == SpecialVariant::BaseField ? "base-field" : "extension";
}

void check_single_parameters(std::size_t T, std::size_t B, std::size_t N) {
  if (N < 1) throw std::invalid_argument("single code needs N >= 1");
  if (B <= N) throw std::invalid_argument("single code needs B > N");
  if (T < B) throw std::invalid_argument("single code needs T >= B");
}

Matrix draw_single_template(std::size_t T, std::size_t B, std::size_t N, SpecialVariant variant,
                            const FieldSpec& field, std::uint64_t seed) {
  check_single_parameters(T, B, N);
  const std::size_t k = T - N + 1;
  const std::size_t n = k + B;
  const std::size_t r = B - N + 1;
  detail::Rng rng(seed);
  auto nonzero = [&] { return FieldElement(field, static_cast<std::uint32_t>(rng.between(1, field.q - 1))); };

  Matrix g(k, n, field);
  for (std::size_t i = 0; i < k; ++i) {
    g(i, i) = FieldElement::one(field);
    for (std::size_t j = i + 1; j < std::min(i + N, T); ++j) g(i, j) = nonzero();
    if (i < r) {
      g(i, T + i) = nonzero();
    } else {
      for (std::size_t j = T; j < n; ++j) g(i, j) = nonzero();
    }
  }
  if (variant == SpecialVariant::Extension) {
    g(0, T) = FieldElement(field, static_cast<std::uint32_t>(rng.below(field.q)),
                           static_cast<std::uint32_t>(rng.between(1, field.q - 1)));
  }
  return g;
}

std::string StructureReport::first_failure() const {
  if (!triangular_prefix) return "triangular_prefix";
  if (!g1_mds) return "g1_mds";
  if (!g2_mds) return "g2_mds";
  if (!special_membership) return "special_membership";
  if (!rate_identity) return "rate_identity";
  return {};
}

StructureReport verify_single_structure(const BlockCode& code) {
  StructureReport rep;
  const Matrix& g = code.G;
  const std::size_t k = code.k;
  const bool shape_ok = g.rows() == k && g.cols() == code.n && code.n > code.T && code.B >= code.N;

  rep.rate_identity = shape_ok && code.k + code.N == code.T + 1 && code.n == code.k + code.B;
  if (!shape_ok) return rep;

  rep.triangular_prefix = true;
  for (std::size_t i = 0; i < k && rep.triangular_prefix; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const bool want_one = i == j;
      if (want_one ? !g(i, j).is_one() : !g(i, j).is_zero()) {
        rep.triangular_prefix = false;
        break;
      }
    }
  }

  rep.g1_mds = is_mds(g.block(0, 0, k, k + code.N - 1));
  const std::size_t r = code.diagonal_rows();
  // T = B leaves no rows below the diagonal-only block.
  rep.g2_mds = r <= k && is_mds(g.block(r, r, k - r, code.n - r));

  const bool in_base = g(code.special_row(), code.special_col()).in_base_field();
  rep.special_membership = code.variant == SpecialVariant::BaseField ? in_base : !in_base;
  return rep;
}

VerificationSummary verify_achievable(const BlockCode& code, std::optional<std::size_t> W,
                                      const VerifyOptions& options) {
  const auto ch = ChannelModel::make(W.value_or(code.T + 1), code.B, code.N);
  return verify_achievable(code.G, code.deadlines(), ch, options);
}

BlockCode build_single_code(std::size_t T, std::size_t B, std::size_t N, SpecialVariant variant,
                            std::uint64_t seed, const SingleBuildOptions& options) {
  check_single_parameters(T, B, N);
  if (options.retry_budget == 0) throw std::invalid_argument("retry budget must be positive");

  BlockCode code;
  code.T = T;
  code.B = B;
  code.N = N;
  code.k = T - N + 1;
  code.n = code.k + B;
  code.variant = variant;
  code.seed = seed;

  std::string last_failure = "none";
  const unsigned fields = options.field ? 1 : options.max_fields;
  std::uint32_t q = options.field ? options.field->q : next_prime(static_cast<std::uint32_t>(code.n));
  for (unsigned f = 0; f < fields; ++f, q = next_prime(q + 1)) {
    code.field = options.field ? *options.field : FieldSpec::with_default_extension(q);
    for (unsigned attempt = 0; attempt < options.retry_budget; ++attempt) {
      code.attempt = attempt;
      code.G = draw_single_template(T, B, N, variant, code.field, detail::mix_seed({seed, q, attempt}));
      const auto structure = verify_single_structure(code);
      if (!structure.pass()) {
        last_failure = structure.first_failure();
        continue;
      }
      if (!verify_achievable(code, options.W, VerifyOptions{options.jobs, true}).pass) {
        last_failure = "achievability";
        continue;
      }
      return code;
    }
  }
  throw SearchExhausted("single-code search exhausted for (T=" + std::to_string(T) + ", B=" + std::to_string(B) +
                        ", N=" + std::to_string(N) + "); last failing check: " + last_failure);
}

}  // namespace muxfec
