// Dense matrices over GF(q^2) and the exact linear algebra the code
// constructions and decoders are built on.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "muxfec/galois.hpp"

namespace muxfec {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  Matrix() = default;
  /// rows x cols zero matrix.
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  static Matrix identity(std::size_t size, const FieldSpec& field);
  /// Row-major integer display codes.
  static Matrix from_codes(std::size_t rows, std::size_t cols, const FieldSpec& field,
                           std::span<const std::uint32_t> codes);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const FieldElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Entries must stay in field(); set() checks, the mutable accessor does not.
  FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const FieldElement& value);

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<std::uint32_t> codes() const;

  /// Keeps the listed columns, in the given order.
  Matrix select_columns(std::span<const std::size_t> columns) const;
  /// Contiguous block [row0, row0+rows) x [col0, col0+cols).
  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_{};
  std::vector<FieldElement> entries_;
};

/// e_index in F^dim.
struct UnitVector {
  std::size_t dim = 0;
  std::size_t index = 0;

  Vector to_vector(const FieldSpec& field) const;
};

/// Row vector times matrix: message . G.
Vector multiply(std::span<const FieldElement> row, const Matrix& m);
/// Matrix times column vector: M . h.
Vector multiply(const Matrix& m, std::span<const FieldElement> column);

std::size_t rank(const Matrix& m);

/// Some h with M h = e_j, or nullopt when e_j is outside the column span of M.
/// Free variables are set to zero.
std::optional<Vector> solve_for_unit(const Matrix& m, std::size_t j);

/// Every choice of rows() columns is linearly independent.
bool is_mds(const Matrix& g);

}  // namespace muxfec
