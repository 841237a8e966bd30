// Slow, direct reference implementations used only by tests. None of these
// share code paths with the library's elimination, enumeration or rate code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "muxfec/channel.hpp"
#include "muxfec/matrix.hpp"

namespace oracle {

using muxfec::FieldElement;
using muxfec::FieldSpec;
using muxfec::Matrix;

// ---- field ----------------------------------------------------------------

inline std::uint32_t inv_mod_by_search(std::uint32_t a, std::uint32_t q) {
  for (std::uint32_t b = 1; b < q; ++b) {
    if (a * b % q == 1) return b;
  }
  return 0;
}

/// Polynomials over GF(q), lowest degree first, trailing zeros trimmed.
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_sub_scaled(Poly a, const Poly& b, std::int64_t scale, std::size_t shift, std::int64_t q) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = ((a[i + shift] - scale * b[i]) % q + q) % q;
  trim(a);
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::int64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
  }
  trim(out);
  return out;
}

/// Extended Euclid in GF(q)[x] against x^2 + c1 x + c0; returns (lo, hi).
inline std::pair<std::uint32_t, std::uint32_t> extension_inverse(const FieldSpec& f, std::uint32_t lo,
                                                                 std::uint32_t hi) {
  const std::int64_t q = f.q;
  Poly r0{static_cast<std::int64_t>(f.c0), static_cast<std::int64_t>(f.c1), 1};
  Poly r1{static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)};
  trim(r1);
  Poly s0{}, s1{1};
  while (r1.size() > 1) {
    Poly quotient;
    Poly rem = r0;
    const std::int64_t lead_inv = inv_mod_by_search(static_cast<std::uint32_t>(r1.back()), f.q);
    while (rem.size() >= r1.size()) {
      const std::size_t shift = rem.size() - r1.size();
      const std::int64_t coef = rem.back() * lead_inv % q;
      if (quotient.size() < shift + 1) quotient.resize(shift + 1, 0);
      quotient[shift] = coef;
      rem = poly_sub_scaled(rem, r1, coef, shift, q);
    }
    Poly s2 = s0;
    const Poly qs = poly_mul(quotient, s1, q);
    s2 = poly_sub_scaled(s2, qs, 1, 0, q);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r1 is a nonzero constant c; inverse is s1 / c.
  const std::int64_t c_inv = inv_mod_by_search(static_cast<std::uint32_t>(r1.at(0)), f.q);
  s1.resize(2, 0);
  return {static_cast<std::uint32_t>(s1[0] * c_inv % q), static_cast<std::uint32_t>(s1[1] * c_inv % q)};
}

// ---- linear algebra -------------------------------------------------------

inline FieldElement det_leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement total = FieldElement::zero(m.field());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    FieldElement term = FieldElement::one(m.field());
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// All size-r subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(r, n)), true);
  if (r > n) return out;
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix out(rows.size(), cols.size(), m.field());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

/// Largest r with a nonzero r x r minor.
inline std::size_t rank_by_minors(const Matrix& m) {
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r) {
    for (const auto& rs : subsets(m.rows(), r)) {
      for (const auto& cs : subsets(m.cols(), r)) {
        if (!det_leibniz(submatrix(m, rs, cs)).is_zero()) return r;
      }
    }
  }
  return 0;
}

inline bool mds_by_minors(const Matrix& g) {
  std::vector<std::size_t> all_rows(g.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  for (const auto& cs : subsets(g.cols(), g.rows())) {
    if (det_leibniz(submatrix(g, all_rows, cs)).is_zero()) return false;
  }
  return true;
}

/// Every element of GF(q^2)^k, enumerated by display code.
template <typename Fn>
void for_each_vector(const FieldSpec& f, std::size_t k, Fn&& fn) {
  const std::uint32_t order = f.q * f.q;
  std::vector<std::uint32_t> digits(k, 0);
  std::vector<FieldElement> x(k, FieldElement::zero(f));
  while (true) {
    fn(x);
    std::size_t i = 0;
    while (i < k && ++digits[i] == order) {
      digits[i] = 0;
      x[i] = FieldElement::zero(f);
      ++i;
    }
    if (i == k) return;
    x[i] = FieldElement::from_code(f, digits[i]);
  }
}

/// e_j in span(columns S of G) iff every x with x G_S = 0 has x_j = 0.
inline bool unit_in_span_by_kernel(const Matrix& g, const std::vector<std::size_t>& cols, std::size_t j) {
  bool ok = true;
  for_each_vector(g.field(), g.rows(), [&](const std::vector<FieldElement>& x) {
    if (!ok || x[j].is_zero()) return;
    for (auto c : cols) {
      FieldElement acc = FieldElement::zero(g.field());
      for (std::size_t i = 0; i < g.rows(); ++i) acc = acc + x[i] * g(i, c);
      if (!acc.is_zero()) return;
    }
    ok = false;
  });
  return ok;
}

inline std::vector<std::optional<std::size_t>> decode_times_by_kernel(const Matrix& g,
                                                                      const std::vector<bool>& erased) {
  std::vector<std::optional<std::size_t>> out(g.rows());
  std::vector<std::size_t> cols;
  for (std::size_t t = 0; t < g.cols(); ++t) {
    if (!erased[t]) cols.push_back(t);
    for (std::size_t j = 0; j < g.rows(); ++j) {
      if (!out[j] && unit_in_span_by_kernel(g, cols, j)) out[j] = t;
    }
  }
  return out;
}

/// Message from an erasure-free codeword when the first k columns are unit
/// upper-triangular.
inline std::vector<FieldElement> sequential_substitution(const Matrix& g, const std::vector<FieldElement>& x) {
  std::vector<FieldElement> s;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    FieldElement v = x[i];
    for (std::size_t l = 0; l < i; ++l) v = v - s[l] * g(l, i);
    s.push_back(v);
  }
  return s;
}

// ---- channel --------------------------------------------------------------

/// Direct reading of the window rule on a 0/1 mask.
inline bool admissible_by_definition(const std::vector<bool>& mask, std::size_t W, std::size_t B, std::size_t N) {
  for (std::size_t i = 0; i < mask.size(); ++i) {
    std::vector<std::size_t> in_window;
    for (std::size_t t = i; t < i + W && t < mask.size(); ++t) {
      if (mask[t]) in_window.push_back(t);
    }
    if (in_window.size() <= N) continue;
    if (in_window.size() > B) return false;
    if (in_window.back() - in_window.front() + 1 != in_window.size()) return false;
  }
  return true;
}

inline std::vector<std::vector<std::size_t>> all_admissible_brute(std::size_t horizon, std::size_t W, std::size_t B,
                                                                  std::size_t N, bool maximal_only) {
  std::vector<std::vector<bool>> masks;
  for (std::uint32_t bits = 0; bits < (1u << horizon); ++bits) {
    std::vector<bool> mask(horizon);
    for (std::size_t t = 0; t < horizon; ++t) mask[t] = (bits >> t) & 1u;
    if (admissible_by_definition(mask, W, B, N)) masks.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& mask : masks) {
    if (maximal_only) {
      bool maximal = true;
      for (std::size_t t = 0; t < horizon && maximal; ++t) {
        if (mask[t]) continue;
        auto bigger = mask;
        bigger[t] = true;
        if (admissible_by_definition(bigger, W, B, N)) maximal = false;
      }
      if (!maximal) continue;
    }
    std::vector<std::size_t> erased;
    for (std::size_t t = 0; t < horizon; ++t) {
      if (mask[t]) erased.push_back(t);
    }
    out.push_back(erased);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Admissible patterns when one window covers the horizon.
inline std::uint64_t single_window_count(std::size_t n, std::size_t B, std::size_t N) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j <= N; ++j) total += binomial(n, j);
  for (std::size_t L = N + 1; L <= B && L <= n; ++L) total += n - L + 1;
  return total;
}

// ---- rates ----------------------------------------------------------------

/// Plain reduced fraction on 64-bit integers.
struct Frac {
  std::int64_t p = 0;
  std::int64_t q = 1;

  Frac(std::int64_t num = 0, std::int64_t den = 1) {
    const std::int64_t g = std::gcd(num, den);
    p = num / g;
    q = den / g;
    if (q < 0) {
      p = -p;
      q = -q;
    }
  }
  friend Frac operator+(Frac a, Frac b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
  friend Frac operator-(Frac a, Frac b) { return {a.p * b.q - b.p * a.q, a.q * b.q}; }
  friend Frac operator*(Frac a, Frac b) { return {a.p * b.p, a.q * b.q}; }
  friend Frac operator/(Frac a, Frac b) { return {a.p * b.q, a.q * b.p}; }
  friend bool operator==(Frac a, Frac b) { return a.p == b.p && a.q == b.q; }
  friend bool operator<(Frac a, Frac b) { return a.p * b.q < b.p * a.q; }
  friend bool operator<=(Frac a, Frac b) { return !(b < a); }
};

}  // namespace oracle
