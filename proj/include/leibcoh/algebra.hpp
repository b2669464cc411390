#ifndef LEIBCOH_ALGEBRA_HPP
#define LEIBCOH_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibcoh/error.hpp"
#include "leibcoh/linalg.hpp"
#include "leibcoh/scalar.hpp"

namespace leibcoh {

enum class AlgebraKind { lie, leibniz };

inline const char* to_string(AlgebraKind k) { return k == AlgebraKind::lie ? "lie" : "leibniz"; }

/// Finite-dimensional algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k. The tensor is stored densely and in
/// full, even for Lie algebras; antisymmetry is checked, never assumed.
class AlgebraSpec {
public:
  AlgebraSpec() = default;
  explicit AlgebraSpec(std::size_t dim, AlgebraKind kind = AlgebraKind::lie, std::vector<std::string> names = {})
      : dim_(dim), kind_(kind), names_(std::move(names)), c_(dim * dim * dim) {
    if (names_.empty())
      for (std::size_t i = 0; i < dim; ++i) names_.push_back("x" + std::to_string(i + 1));
    if (names_.size() != dim) throw DimensionMismatch("basis name count differs from dimension");
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] AlgebraKind kind() const { return kind_; }
  void set_kind(AlgebraKind k) { kind_ = k; }
  [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }

  Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  [[nodiscard]] const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets [e_i,e_j] = value, and [e_j,e_i] = -value when `antisym`.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value, bool antisym = false) {
    for (std::size_t k = 0; k < dim_; ++k) {
      c(i, j, k) = value[k];
      if (antisym) c(j, i, k) = -value[k];
    }
  }
  void set_bracket(std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, Scalar>> terms,
                   bool antisym = false) {
    Vector v(dim_);
    for (const auto& [k, x] : terms) v[k] += x;
    set_bracket(i, j, v, antisym);
  }

  [[nodiscard]] Vector bracket_basis(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
  }

  [[nodiscard]] Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        Scalar xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
      }
    }
    return out;
  }

  [[nodiscard]] const std::vector<Scalar>& tensor() const { return c_; }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

private:
  std::size_t dim_ = 0;
  AlgebraKind kind_ = AlgebraKind::lie;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
};

/// Nonzero structure constants grouped by (i,j), for inner loops.
class BracketTable {
public:
  explicit BracketTable(const AlgebraSpec& g) : d_(g.dim()), entries_(g.dim() * g.dim()) {
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        for (std::size_t k = 0; k < d_; ++k)
          if (!g.c(i, j, k).is_zero()) entries_[i * d_ + j].emplace_back(k, g.c(i, j, k));
  }
  [[nodiscard]] const std::vector<std::pair<std::size_t, Scalar>>& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * d_ + j];
  }
  [[nodiscard]] std::size_t dim() const { return d_; }

private:
  std::size_t d_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> entries_;
};

struct StructureReport {
  bool is_antisymmetric = false;
  bool is_jacobi = false;
  bool is_leibniz = false;
  Subspace center;   ///< {x : [x,y] = [y,x] = 0 for all y}
  Subspace derived;  ///< C^2 g = span of all brackets
  std::size_t p = 0;  ///< dim g / C^2 g
  std::size_t c = 0;  ///< dim of the center

  /// Whether the algebra satisfies the identities its claimed kind requires.
  [[nodiscard]] bool satisfies(AlgebraKind kind) const {
    return kind == AlgebraKind::lie ? (is_antisymmetric && is_jacobi) : is_leibniz;
  }
};

inline Subspace center_of(const AlgebraSpec& g) {
  const std::size_t d = g.dim();
  // Rows: the coefficient of e_k in [x,e_j] and in [e_j,x], as linear forms in x.
  Matrix m(2 * d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) {
        m((j * d + k) * 2, i) = g.c(i, j, k);
        m((j * d + k) * 2 + 1, i) = g.c(j, i, k);
      }
  return kernel(m);
}

inline Subspace derived_of(const AlgebraSpec& g) {
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) brackets.push_back(g.bracket_basis(i, j));
  return Subspace::span(g.dim(), brackets);
}

/// Checks antisymmetry, Jacobi and the right Leibniz identity
/// [[x,y],z] = [[x,z],y] + [x,[y,z]] on all basis triples, and computes the
/// center and derived subalgebra. Failed identities are reported, not thrown.
inline StructureReport validate(const AlgebraSpec& g) {
  const std::size_t d = g.dim();
  if (g.tensor().size() != d * d * d) throw DimensionMismatch("structure tensor shape is not n x n x n");
  StructureReport rep;
  rep.is_antisymmetric = true;
  for (std::size_t i = 0; i < d && rep.is_antisymmetric; ++i)
    for (std::size_t j = 0; j < d && rep.is_antisymmetric; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k)) {
          rep.is_antisymmetric = false;
          break;
        }

  // (xy)z components: sum_m c(i,j,m) c(m,l,k)
  auto xy_z = [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector out(d);
    for (std::size_t m = 0; m < d; ++m) {
      if (g.c(i, j, m).is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k)
        if (!g.c(m, l, k).is_zero()) out[k] += g.c(i, j, m) * g.c(m, l, k);
    }
    return out;
  };
  auto x_yz = [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector out(d);
    for (std::size_t m = 0; m < d; ++m) {
      if (g.c(j, l, m).is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k)
        if (!g.c(i, m, k).is_zero()) out[k] += g.c(j, l, m) * g.c(i, m, k);
    }
    return out;
  };

  rep.is_jacobi = true;
  rep.is_leibniz = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        Vector a = xy_z(i, j, l);
        Vector b = xy_z(j, l, i);
        Vector cc = xy_z(l, i, j);
        Vector lz = xy_z(i, l, j);
        Vector r = x_yz(i, j, l);
        for (std::size_t k = 0; k < d; ++k) {
          if (!(a[k] + b[k] + cc[k]).is_zero()) rep.is_jacobi = false;
          if (a[k] != lz[k] + r[k]) rep.is_leibniz = false;
        }
      }

  rep.center = center_of(g);
  rep.derived = derived_of(g);
  rep.c = rep.center.dim();
  rep.p = d - rep.derived.dim();
  return rep;
}

/// Coordinates of x in the basis given by the columns of t (t invertible).
inline Vector solve_coordinates(const Matrix& t, std::span<const Scalar> x) {
  auto sol = solve_particular(t, x);
  if (!sol) throw SingularMatrix("vector not in the span of the basis");
  return *sol;
}

inline Matrix inverse(const Matrix& t) {
  if (t.rows() != t.cols()) throw SingularMatrix("inverse of a non-square matrix");
  const std::size_t n = t.rows();
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < n; ++r) {
    SparseRow row = to_sparse(t.row(r));
    row.emplace_back(n + r, Scalar(1));
    rows.push_back(std::move(row));
  }
  Echelon e = detail::echelon_of(rows, 2 * n);
  auto piv = e.pivots();
  if (piv.size() != n || (n > 0 && piv.back() != n - 1)) throw SingularMatrix("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, x] : e.row_for_pivot(r))
      if (c >= n) inv(r, c - n) = x;
  return inv;
}

/// New basis f_a = sum_i t(i,a) e_i (column a of t holds f_a in e-coordinates).
inline AlgebraSpec change_basis(const AlgebraSpec& g, const Matrix& t, std::vector<std::string> new_names = {}) {
  const std::size_t d = g.dim();
  if (t.rows() != d || t.cols() != d) throw DimensionMismatch("change_basis: transform must be dim x dim");
  Matrix tinv = inverse(t);
  AlgebraSpec out(d, g.kind(), new_names.empty() ? g.basis_names() : std::move(new_names));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector br = g.bracket(t.column_vector(a), t.column_vector(b));
      Vector coords = tinv * br;
      for (std::size_t k = 0; k < d; ++k) out.c(a, b, k) = coords[k];
    }
  return out;
}

}  // namespace leibcoh

#endif
