#include "muxfec/matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace muxfec {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(std::size_t size, const FieldSpec& field) {
  Matrix m(size, size, field);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_codes(std::size_t rows, std::size_t cols, const FieldSpec& field,
                          std::span<const std::uint32_t> codes) {
  if (codes.size() != rows * cols) {
    throw std::invalid_argument("matrix entry count " + std::to_string(codes.size()) + " != " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
  Matrix m(rows, cols, field);
  for (std::size_t i = 0; i < codes.size(); ++i) m.entries_[i] = FieldElement::from_code(field, codes[i]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (!(value.field() == field_)) throw FieldMismatch("matrix entry from a different field");
  entries_[r * cols_ + c] = value;
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Vector Matrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::uint32_t> Matrix::codes() const {
  std::vector<std::uint32_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.code());
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(rows_, columns.size(), field_);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= cols_) throw std::out_of_range("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, columns[j]);
  }
  return out;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw std::out_of_range("block exceeds matrix");
  Matrix out(rows, cols, field_);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
  }
  return out;
}

Vector UnitVector::to_vector(const FieldSpec& field) const {
  if (index >= dim) throw std::out_of_range("unit vector index out of range");
  Vector v(dim, FieldElement::zero(field));
  v[index] = FieldElement::one(field);
  return v;
}

Vector multiply(std::span<const FieldElement> row, const Matrix& m) {
  if (row.size() != m.rows()) throw std::invalid_argument("row vector length does not match matrix rows");
  Vector out(m.cols(), FieldElement::zero(m.field()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (row[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += row[r] * m(r, c);
  }
  return out;
}

Vector multiply(const Matrix& m, std::span<const FieldElement> column) {
  if (column.size() != m.cols()) throw std::invalid_argument("column vector length does not match matrix cols");
  Vector out(m.rows(), FieldElement::zero(m.field()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * column[c];
  }
  return out;
}

namespace {

// In-place reduced row echelon form with first-nonzero pivoting over the
// leading `pivot_cols` columns. Returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(Matrix& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < pivot_cols && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != lead) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead, k));
    }
    const FieldElement scale = a(lead, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) a(lead, k) *= scale;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const FieldElement factor = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= factor * a(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return reduce(work, work.cols()).size();
}

std::optional<Vector> solve_for_unit(const Matrix& m, std::size_t j) {
  if (j >= m.rows()) throw std::out_of_range("solve_for_unit: target index out of range");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
  }
  aug(j, m.cols()) = FieldElement::one(m.field());

  const auto pivots = reduce(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug(r, m.cols()).is_zero()) return std::nullopt;
  }
  Vector h(m.cols(), FieldElement::zero(m.field()));
  for (std::size_t r = 0; r < pivots.size(); ++r) h[pivots[r]] = aug(r, m.cols());
  return h;
}

bool is_mds(const Matrix& g) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k > n) throw std::invalid_argument("is_mds needs rows <= cols");
  if (k == 0) return true;

  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (rank(g.select_columns(pick)) < k) return false;
    // next k-combination of [0, n) in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace muxfec
