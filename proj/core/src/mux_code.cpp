#include "muxfec/mux_code.hpp"

#include <algorithm>

#include "random.hpp"

namespace muxfec {

const char* to_string(Regime regime) {
  return regime == Regime::BurstDominant ? "burst-dominant" : "random-dominant";
}

Regime parse_regime(const std::string& text) {
  if (text == "burst-dominant") return Regime::BurstDominant;
  if (text == "random-dominant") return Regime::RandomDominant;
  throw std::invalid_argument("unknown regime '" + text + "'");
}

MuxParams select_parameters(std::size_t T_v, std::size_t T_u, std::size_t B, std::size_t N,
                            std::optional<std::size_t> T_u_prime, std::optional<std::size_t> W) {
  if (N < 1) throw std::invalid_argument("parameters violate N >= 1");
  if (B <= N) throw std::invalid_argument("parameters violate B > N");
  if (T_u <= B) throw std::invalid_argument("parameters violate T_u > B");
  if (T_v <= T_u + B) throw std::invalid_argument("parameters violate T_v > T_u + B");
  const std::size_t tu_prime = T_u_prime.value_or(T_u);
  if (tu_prime <= B || tu_prime > T_u) throw std::invalid_argument("parameters violate B < T_u' <= T_u");
  const std::size_t w = W.value_or(T_v + 1);
  if (w <= T_v) throw std::invalid_argument("parameters violate W > T_v");

  MuxParams p;
  p.T_v = T_v;
  p.T_u = T_u;
  p.B = B;
  p.N = N;
  p.W = w;
  p.T_u_prime = tu_prime;
  p.regime = B >= 2 * N - 1 ? Regime::BurstDominant : Regime::RandomDominant;
  p.k_u = tu_prime - N + 1;
  p.k_v = p.regime == Regime::BurstDominant ? T_v - tu_prime - N + 1 : T_v - tu_prime + N - B;
  p.m = B;
  p.h = p.k_v + B - p.m;
  p.n = p.k_v + p.k_u + 2 * B - p.m;
  p.T_v_prime = p.k_v + N - 1;
  return p;
}

std::vector<FieldElement> merge_codewords(const std::vector<FieldElement>& xv, const std::vector<FieldElement>& xu,
                                          std::size_t m) {
  if (m > std::min(xv.size(), xu.size())) throw std::invalid_argument("merge length exceeds a codeword length");
  std::vector<FieldElement> out(xv.begin(), xv.end());
  const std::size_t h = xv.size() - m;
  for (std::size_t j = 0; j < xu.size(); ++j) {
    if (j < m) {
      out[h + j] += xu[j];
    } else {
      out.push_back(xu[j]);
    }
  }
  return out;
}

Matrix assemble_merged(const Matrix& g1, const Matrix& g2, std::size_t m) {
  if (!(g1.field() == g2.field())) throw FieldMismatch("constituent generators use different fields");
  if (m > std::min(g1.cols(), g2.cols())) throw std::invalid_argument("merge length exceeds a codeword length");
  const std::size_t h = g1.cols() - m;
  Matrix g(g1.rows() + g2.rows(), g1.cols() + g2.cols() - m, g1.field());
  for (std::size_t i = 0; i < g1.rows(); ++i) {
    for (std::size_t j = 0; j < g1.cols(); ++j) g(i, j) = g1(i, j);
  }
  for (std::size_t i = 0; i < g2.rows(); ++i) {
    for (std::size_t j = 0; j < g2.cols(); ++j) g(g1.rows() + i, h + j) = g2(i, j);
  }
  return g;
}

Matrix MuxCode::left_block() const {
  const std::size_t rows = params.T_v - 2 * params.N + 2;
  const std::size_t cols = params.T_v - params.N + 1;
  return G.block(0, 0, std::min(rows, G.rows()), std::min(cols, G.cols()));
}

VerificationSummary verify_achievable(const MuxCode& code, std::optional<std::size_t> W,
                                      const VerifyOptions& options) {
  const auto ch = ChannelModel::make(W.value_or(code.params.W), code.params.B, code.params.N);
  return verify_achievable(code.G, code.deadlines(), ch, options);
}

MuxCode build_mux_code(const MuxParams& params, std::uint64_t seed, const MuxBuildOptions& options) {
  if (options.retry_budget == 0 || options.constituent_budget == 0) {
    throw std::invalid_argument("retry budgets must be positive");
  }
  MuxCode code;
  code.params = params;
  code.seed = seed;

  const std::size_t T1 = params.k_v + params.N - 1;
  std::string last_failure = "none";
  std::uint32_t q = options.initial_q.value_or(
      next_prime(static_cast<std::uint32_t>(std::max(params.k_v, params.k_u) + params.B)));
  for (unsigned f = 0; f < options.max_fields; ++f, q = next_prime(q + 1)) {
    code.field = FieldSpec::with_default_extension(q);
    SingleBuildOptions single;
    single.field = code.field;
    single.retry_budget = options.constituent_budget;
    single.jobs = options.jobs;

    for (unsigned attempt = 0; attempt < options.retry_budget; ++attempt) {
      code.attempt = attempt;
      try {
        code.g1 = build_single_code(T1, params.B, params.N, SpecialVariant::BaseField,
                                    detail::mix_seed({seed, 1, q, attempt}), single);
        code.g2 = build_single_code(params.T_u_prime, params.B, params.N, SpecialVariant::Extension,
                                    detail::mix_seed({seed, 2, q, attempt}), single);
      } catch (const SearchExhausted& e) {
        last_failure = std::string("constituent: ") + e.what();
        continue;
      }
      code.G = assemble_merged(code.g1.G, code.g2.G, params.m);
      if (params.regime == Regime::BurstDominant && !is_mds(code.left_block())) {
        last_failure = "left-block MDS";
        continue;
      }
      if (!verify_achievable(code, params.W, VerifyOptions{options.jobs, true}).pass) {
        last_failure = "achievability";
        continue;
      }
      return code;
    }
  }
  throw SearchExhausted("merged-code search exhausted for (T_v=" + std::to_string(params.T_v) +
                        ", T_u=" + std::to_string(params.T_u) + ", B=" + std::to_string(params.B) +
                        ", N=" + std::to_string(params.N) + "); last failing check: " + last_failure);
}

MergeBoundCheck check_merge_bounds(std::size_t T_v, std::size_t T_v_prime, std::size_t T_u_prime, std::size_t m,
                                   std::size_t B, std::size_t N) {
  if (m < 1) throw std::invalid_argument("merge bounds need m >= 1");
  if (m > B) return {false, "merge length m = " + std::to_string(m) + " exceeds B = " + std::to_string(B)};
  using ll = long long;
  const ll tv = static_cast<ll>(T_v), tvp = static_cast<ll>(T_v_prime), tup = static_cast<ll>(T_u_prime);
  const ll b = static_cast<ll>(B), n = static_cast<ll>(N), mm = static_cast<ll>(m);
  auto verdict = [tv](ll lhs, const std::string& what) {
    const bool ok = lhs <= tv;
    return MergeBoundCheck{ok, what + ": " + std::to_string(lhs) + (ok ? " <= " : " > ") + std::to_string(tv)};
  };
  if (m < N) return verdict(tvp + tup - n + mm, "T_v' + T_u' - N + m");
  if (B >= 2 * N - 1) return verdict(tvp + tup, "T_v' + T_u'");
  const ll k_u = tup - n + 1;
  return verdict(tvp + b - n + k_u, "T_v' + B - N + k_u");
}

}  // namespace muxfec
