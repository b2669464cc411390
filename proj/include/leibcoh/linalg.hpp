#ifndef LEIBCOH_LINALG_HPP
#define LEIBCOH_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "leibcoh/error.hpp"
#include "leibcoh/matrix.hpp"

namespace leibcoh {

/// Incrementally maintained reduced row echelon basis.
///
/// Every stored row has a unit pivot and is zero in all other pivot
/// columns, so the sorted row set is the unique RREF of everything inserted.
class Echelon {
public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

  /// Reduces `v` against the stored rows in place.
  void reduce(SparseRow& v) const {
    // Stored rows vanish on every other pivot column, so one pass over the
    // pivot entries present in v clears them all.
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [c, x] : v) {
      auto it = pivot_row_.find(c);
      if (it != pivot_row_.end()) hits.emplace_back(it->second, x);
    }
    for (const auto& [r, x] : hits) sparse_axpy(v, x, rows_[r]);
  }

  [[nodiscard]] bool contains(SparseRow v) const {
    reduce(v);
    return v.empty();
  }

  /// Inserts v; returns true when it enlarged the span.
  bool insert(SparseRow v) {
    reduce(v);
    if (v.empty()) return false;
    const std::size_t pivot = v.front().first;
    Scalar lead_inv = v.front().second.inv();
    if (!lead_inv.is_one())
      for (auto& e : v) e.second *= lead_inv;
    for (auto& row : rows_)
      if (const Scalar* x = sparse_find(row, pivot)) {
        Scalar f = *x;
        sparse_axpy(row, f, v);
      }
    pivot_row_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  /// Pivot columns in increasing order.
  [[nodiscard]] std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    p.reserve(pivot_row_.size());
    for (const auto& [c, r] : pivot_row_) p.push_back(c);
    return p;
  }

  /// Rows sorted by pivot column (the RREF).
  [[nodiscard]] std::vector<SparseRow> sorted_rows() const {
    std::vector<SparseRow> out;
    out.reserve(rows_.size());
    for (const auto& [c, r] : pivot_row_) out.push_back(rows_[r]);
    return out;
  }

  [[nodiscard]] const SparseRow& row_for_pivot(std::size_t pivot) const { return rows_[pivot_row_.at(pivot)]; }

private:
  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

struct RrefResult {
  Matrix rref;  ///< same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

namespace detail {

inline Echelon echelon_of(const std::vector<SparseRow>& rows, std::size_t cols) {
  Echelon e(cols);
  for (const auto& r : rows) e.insert(r);
  return e;
}

inline std::vector<SparseRow> rows_of(const Matrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m.row(r)));
  return rows;
}

inline Matrix dense_from_rows(const std::vector<SparseRow>& rows, std::size_t nrows, std::size_t cols) {
  Matrix m(nrows, cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, x] : rows[r]) m(r, c) = x;
  return m;
}

}  // namespace detail

inline RrefResult rref(const Matrix& m) {
  Echelon e = detail::echelon_of(detail::rows_of(m), m.cols());
  return {detail::dense_from_rows(e.sorted_rows(), m.rows(), m.cols()), e.pivots(), e.rank()};
}

inline RrefResult rref(const SparseMatrix& m) {
  Echelon e = detail::echelon_of(m.row_list(), m.cols());
  return {detail::dense_from_rows(e.sorted_rows(), m.rows(), m.cols()), e.pivots(), e.rank()};
}

/// A linear subspace of K^ambient_dim stored by its RREF basis; two
/// subspaces are equal exactly when their bases are identical.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the given vectors (any spanning set; reduced to RREF).
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Echelon e(ambient_dim);
    for (const auto& v : vectors) {
      if (v.size() != ambient_dim) throw DimensionMismatch("span: vector length differs from ambient dimension");
      e.insert(to_sparse(v));
    }
    return from_echelon(e);
  }
  static Subspace span_sparse(std::size_t ambient_dim, const std::vector<SparseRow>& vectors) {
    return from_echelon(detail::echelon_of(vectors, ambient_dim));
  }
  static Subspace row_space(const Matrix& m) { return from_echelon(detail::echelon_of(detail::rows_of(m), m.cols())); }
  static Subspace full(std::size_t n) { return row_space(Matrix::identity(n)); }

  static Subspace from_echelon(const Echelon& e) {
    Subspace s(e.cols());
    auto rows = e.sorted_rows();
    s.basis_ = detail::dense_from_rows(rows, rows.size(), e.cols());
    return s;
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  [[nodiscard]] std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }
  [[nodiscard]] std::vector<SparseRow> sparse_basis() const { return detail::rows_of(basis_); }

  [[nodiscard]] Echelon echelon() const {
    Echelon e(ambient_);
    for (std::size_t i = 0; i < dim(); ++i) e.insert(to_sparse(basis_.row(i)));
    return e;
  }

  [[nodiscard]] bool contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("contains: vector length differs from ambient dimension");
    return echelon().contains(to_sparse(v));
  }
  [[nodiscard]] bool contains(const Subspace& other) const {
    check_same_ambient(other, "contains");
    Echelon e = echelon();
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!e.contains(to_sparse(other.basis_.row(i)))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_same_ambient(const Subspace& other, const char* op) const {
    if (ambient_ != other.ambient_)
      throw DimensionMismatch(std::string(op) + ": ambient dimensions " + std::to_string(ambient_) + " and " +
                              std::to_string(other.ambient_) + " differ");
  }

private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// Null space {v : m v = 0}.
template <class M>
Subspace kernel(const M& m) {
  std::vector<SparseRow> rows;
  if constexpr (std::is_same_v<M, SparseMatrix>) {
    rows = m.row_list();
  } else {
    rows = detail::rows_of(m);
  }
  Echelon e = detail::echelon_of(rows, m.cols());
  auto pivots = e.pivots();
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  Echelon k(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f] != 0) continue;
    SparseRow v;
    for (std::size_t p : pivots) {
      if (p > f) break;
      if (const Scalar* x = sparse_find(e.row_for_pivot(p), f)) v.emplace_back(p, -*x);
    }
    v.emplace_back(f, Scalar(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    k.insert(std::move(v));
  }
  return Subspace::from_echelon(k);
}

/// Column space.
inline Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }
inline Subspace image(const SparseMatrix& m) { return Subspace::span_sparse(m.rows(), m.transpose().row_list()); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
  a.check_same_ambient(b, "sum");
  Echelon e = a.echelon();
  for (std::size_t i = 0; i < b.dim(); ++i) e.insert(to_sparse(b.basis().row(i)));
  return Subspace::from_echelon(e);
}

/// a ∩ b through the kernel of the stacked bases: Σα_i a_i = Σβ_j b_j.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  a.check_same_ambient(b, "intersect");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // Columns are a_1..a_r, -b_1..-b_s; rows index ambient coordinates.
  SparseMatrix stacked(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t c = 0; c < n; ++c)
      if (!a.basis()(i, c).is_zero()) stacked.row(c).emplace_back(i, a.basis()(i, c));
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t c = 0; c < n; ++c)
      if (!b.basis()(j, c).is_zero()) stacked.row(c).emplace_back(a.dim() + j, -b.basis()(j, c));
  Subspace coeffs = kernel(stacked);
  std::vector<Vector> vecs;
  for (std::size_t k = 0; k < coeffs.dim(); ++k) {
    Vector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Scalar& alpha = coeffs.basis()(k, i);
      if (alpha.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!a.basis()(i, c).is_zero()) v[c] += alpha * a.basis()(i, c);
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

inline void require_subspace(const Subspace& a, const Subspace& b, const char* op) {
  a.check_same_ambient(b, op);
  if (!a.contains(b)) throw NotASubspace(std::string(op) + ": second space is not contained in the first");
}

inline std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  require_subspace(a, b, "quotient_dim");
  return a.dim() - b.dim();
}

/// Vectors of a whose classes form a basis of a/b: a's RREF rows are taken
/// in order, keeping those independent modulo b and the rows already kept.
inline std::vector<Vector> quotient_reps(const Subspace& a, const Subspace& b) {
  require_subspace(a, b, "quotient_reps");
  Echelon e = b.echelon();
  std::vector<Vector> reps;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (e.insert(to_sparse(a.basis().row(i)))) reps.push_back(a.basis_vector(i));
  return reps;
}

/// Particular solution of m x = rhs with all free coordinates zero, or
/// nullopt when the system is inconsistent.
template <class M>
std::optional<Vector> solve_particular(const M& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("solve_particular: rhs length differs from row count");
  const std::size_t n = m.cols();
  Echelon e(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    if constexpr (std::is_same_v<M, SparseMatrix>) {
      row = m.row(r);
    } else {
      row = to_sparse(m.row(r));
    }
    if (!rhs[r].is_zero()) row.emplace_back(n, rhs[r]);
    e.insert(std::move(row));
  }
  Vector x(n);
  for (std::size_t p : e.pivots()) {
    if (p == n) return std::nullopt;
    if (const Scalar* v = sparse_find(e.row_for_pivot(p), n)) x[p] = *v;
  }
  return x;
}

/// Reusable solver for many right-hand sides against one matrix: records
/// the row operations that bring m to RREF.
class LinearSolver {
public:
  explicit LinearSolver(const SparseMatrix& m) : rows_(m.rows()), cols_(m.cols()), e_(m.cols() + m.rows()) {
    // Augment each row with its identity tag; the tags carry the transform.
    for (std::size_t r = 0; r < m.rows(); ++r) {
      SparseRow row = m.row(r);
      row.emplace_back(cols_ + r, Scalar(1));
      e_.insert(std::move(row));
    }
    for (std::size_t p : e_.pivots())
      if (p < cols_) pivots_.push_back(p);
  }

  [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

  /// Same contract as solve_particular.
  [[nodiscard]] std::optional<Vector> solve(std::span<const Scalar> rhs) const {
    if (rhs.size() != rows_) throw DimensionMismatch("LinearSolver: rhs length differs from row count");
    // Rows whose pivot lies in the tag block are relations among the rows of
    // m; consistency requires rhs to satisfy each of them.
    for (std::size_t p : e_.pivots()) {
      const SparseRow& row = e_.row_for_pivot(p);
      Scalar acc;
      for (const auto& [c, x] : row)
        if (c >= cols_ && !rhs[c - cols_].is_zero()) acc += x * rhs[c - cols_];
      if (p >= cols_) {
        if (!acc.is_zero()) return std::nullopt;
      }
    }
    Vector x(cols_);
    for (std::size_t p : pivots_) {
      const SparseRow& row = e_.row_for_pivot(p);
      Scalar acc;
      for (const auto& [c, v] : row) {
        if (c < cols_) {
          // Free-column entries multiply free variables, which are zero.
          continue;
        }
        if (!rhs[c - cols_].is_zero()) acc += v * rhs[c - cols_];
      }
      x[p] = acc;
    }
    return x;
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  Echelon e_;
  std::vector<std::size_t> pivots_;
};

}  // namespace leibcoh

#endif
