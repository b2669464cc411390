#ifndef LEIBCOH_MATRIX_HPP
#define LEIBCOH_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "leibcoh/error.hpp"
#include "leibcoh/scalar.hpp"

namespace leibcoh {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Scalar.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("from_rows: ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] Vector row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  [[nodiscard]] Vector column_vector(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  [[nodiscard]] Vector operator*(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const Scalar& a = (*this)(r, c);
        if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
      }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Sparse row: (column, value) pairs sorted by column, no stored zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseRow to_sparse(std::span<const Scalar> v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace_back(i, v[i]);
  return r;
}

inline Vector to_dense(const SparseRow& r, std::size_t n) {
  Vector v(n);
  for (const auto& [c, x] : r) v[c] = x;
  return v;
}

/// r := r - factor * other
inline void sparse_axpy(SparseRow& r, const Scalar& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(r.size() + other.size());
  auto a = r.begin();
  auto b = other.begin();
  while (a != r.end() || b != other.end()) {
    if (b == other.end() || (a != r.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == r.end() || b->first < a->first) {
      out.emplace_back(b->first, -(factor * b->second));
      ++b;
    } else {
      Scalar v = a->second - factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  r = std::move(out);
}

inline const Scalar* sparse_find(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

/// Row-list sparse matrix; used for coboundary operators, whose dense form
/// would be mostly zeros.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix from_dense(const Matrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) s.rows_[r] = to_sparse(m.row(r));
    return s;
  }

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const SparseRow& row(std::size_t r) const { return rows_[r]; }
  SparseRow& row(std::size_t r) { return rows_[r]; }
  [[nodiscard]] const std::vector<SparseRow>& row_list() const { return rows_; }

  [[nodiscard]] std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  [[nodiscard]] Matrix to_dense() const {
    Matrix m(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, x] : rows_[r]) m(r, c) = x;
    return m;
  }

  [[nodiscard]] SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, x] : rows_[r]) t.rows_[c].emplace_back(r, x);
    return t;
  }

  [[nodiscard]] Vector operator*(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionMismatch("sparse matrix-vector product: size mismatch");
    Vector out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, x] : rows_[r])
        if (!v[c].is_zero()) out[r] += x * v[c];
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw DimensionMismatch("sparse product: inner dimensions differ");
    SparseMatrix out(a.rows(), b.cols_);
    Vector acc(b.cols_);
    std::vector<char> touched(b.cols_, 0);
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      cols.clear();
      for (const auto& [k, x] : a.rows_[i])
        for (const auto& [j, y] : b.rows_[k]) {
          if (touched[j] == 0) {
            touched[j] = 1;
            cols.push_back(j);
          }
          acc[j] += x * y;
        }
      std::sort(cols.begin(), cols.end());
      for (std::size_t j : cols) {
        if (!acc[j].is_zero()) out.rows_[i].emplace_back(j, acc[j]);
        acc[j] = Scalar();
        touched[j] = 0;
      }
    }
    return out;
  }

private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

}  // namespace leibcoh

#endif
