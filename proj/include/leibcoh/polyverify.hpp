#ifndef LEIBCOH_POLYVERIFY_HPP
#define LEIBCOH_POLYVERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/polynomial.hpp"

namespace leibcoh {

/// Algebra whose structure constants are polynomials in named parameters.
class ParamAlgebra {
public:
  ParamAlgebra() = default;
  ParamAlgebra(std::size_t dim, std::vector<std::string> params, AlgebraKind kind = AlgebraKind::lie,
               std::vector<std::string> names = {})
      : dim_(dim), kind_(kind), params_(std::move(params)), names_(std::move(names)), c_(dim * dim * dim) {
    if (names_.empty())
      for (std::size_t i = 0; i < dim; ++i) names_.push_back("x" + std::to_string(i + 1));
    if (names_.size() != dim) throw DimensionMismatch("basis name count differs from dimension");
  }

  /// Constant family.
  explicit ParamAlgebra(const AlgebraSpec& g)
      : ParamAlgebra(g.dim(), {}, g.kind(), g.basis_names()) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = Polynomial(g.tensor()[i]);
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] AlgebraKind kind() const { return kind_; }
  [[nodiscard]] const std::vector<std::string>& params() const { return params_; }
  [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }
  [[nodiscard]] const std::vector<Polynomial>& tensor() const { return c_; }

  Polynomial& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  [[nodiscard]] const Polynomial& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// [e_i, e_j] += value e_k, and [e_j, e_i] -= value e_k when `antisym`.
  void add(std::size_t i, std::size_t j, std::size_t k, const Polynomial& value, bool antisym) {
    c(i, j, k) += value;
    if (antisym) c(j, i, k) -= value;
  }

private:
  std::size_t dim_ = 0;
  AlgebraKind kind_ = AlgebraKind::lie;
  std::vector<std::string> params_;
  std::vector<std::string> names_;
  std::vector<Polynomial> c_;
};

/// A nonzero component (coefficient of e_k) of an identity evaluated on (e_i, e_j, e_l).
struct PolyDefect {
  std::size_t i = 0, j = 0, l = 0, k = 0;
  Polynomial value;
};

namespace detail {

// [[e_i,e_j],e_l] as polynomial vector.
inline std::vector<Polynomial> poly_xy_z(const ParamAlgebra& pa, std::size_t i, std::size_t j, std::size_t l) {
  const std::size_t d = pa.dim();
  std::vector<Polynomial> out(d);
  for (std::size_t m = 0; m < d; ++m) {
    const Polynomial& a = pa.c(i, j, m);
    if (a.is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k)
      if (!pa.c(m, l, k).is_zero()) out[k] += a * pa.c(m, l, k);
  }
  return out;
}

// [e_i,[e_j,e_l]]
inline std::vector<Polynomial> poly_x_yz(const ParamAlgebra& pa, std::size_t i, std::size_t j, std::size_t l) {
  const std::size_t d = pa.dim();
  std::vector<Polynomial> out(d);
  for (std::size_t m = 0; m < d; ++m) {
    const Polynomial& a = pa.c(j, l, m);
    if (a.is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k)
      if (!pa.c(i, m, k).is_zero()) out[k] += a * pa.c(i, m, k);
  }
  return out;
}

}  // namespace detail

/// Nonzero c_ij^k + c_ji^k, reported on (i, j, i) slots with i <= j.
inline std::vector<PolyDefect> antisymmetry_defect(const ParamAlgebra& pa) {
  std::vector<PolyDefect> out;
  for (std::size_t i = 0; i < pa.dim(); ++i)
    for (std::size_t j = i; j < pa.dim(); ++j)
      for (std::size_t k = 0; k < pa.dim(); ++k) {
        Polynomial v = pa.c(i, j, k) + pa.c(j, i, k);
        if (!v.is_zero()) out.push_back({i, j, i, k, std::move(v)});
      }
  return out;
}

/// Components of [[x,y],z] + [[y,z],x] + [[z,x],y]. For antisymmetric
/// tensors only i < j < l is visited (other triples repeat these up to sign).
inline std::vector<PolyDefect> jacobi_defect(const ParamAlgebra& pa) {
  const std::size_t d = pa.dim();
  const bool anti = antisymmetry_defect(pa).empty();
  std::vector<PolyDefect> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = anti ? i + 1 : 0; j < d; ++j)
      for (std::size_t l = anti ? j + 1 : 0; l < d; ++l) {
        auto a = detail::poly_xy_z(pa, i, j, l);
        auto b = detail::poly_xy_z(pa, j, l, i);
        auto c = detail::poly_xy_z(pa, l, i, j);
        for (std::size_t k = 0; k < d; ++k) {
          Polynomial v = a[k] + b[k] + c[k];
          if (!v.is_zero()) out.push_back({i, j, l, k, std::move(v)});
        }
      }
  return out;
}

/// Components of the right Leibniz defect [[x,y],z] - [[x,z],y] - [x,[y,z]].
inline std::vector<PolyDefect> leibniz_defect_sym(const ParamAlgebra& pa) {
  const std::size_t d = pa.dim();
  std::vector<PolyDefect> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        auto a = detail::poly_xy_z(pa, i, j, l);
        auto b = detail::poly_xy_z(pa, i, l, j);
        auto c = detail::poly_x_yz(pa, i, j, l);
        for (std::size_t k = 0; k < d; ++k) {
          Polynomial v = a[k] - b[k] - c[k];
          if (!v.is_zero()) out.push_back({i, j, l, k, std::move(v)});
        }
      }
  return out;
}

inline AlgebraSpec specialize(const ParamAlgebra& pa, const std::map<std::string, Scalar>& values) {
  for (const auto& p : pa.params())
    if (values.find(p) == values.end()) throw MissingParameter("no value assigned to parameter '" + p + "'");
  AlgebraSpec g(pa.dim(), pa.kind(), pa.basis_names());
  const std::size_t d = pa.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) g.c(i, j, k) = pa.c(i, j, k).evaluate(values);
  return g;
}

/// Monomials of `p` divisible by no generator of the monomial ideal.
inline std::vector<Monomial> outside_monomial_ideal(const Polynomial& p, const std::vector<Monomial>& ideal) {
  std::vector<Monomial> out;
  for (const auto& [m, c] : p.terms()) {
    bool inside = false;
    for (const auto& g : ideal)
      if (g.divides(m)) {
        inside = true;
        break;
      }
    if (!inside) out.push_back(m);
  }
  return out;
}

namespace families {

namespace detail {

// 1-based [x_i, x_j] = sum of (k, expression) terms.
inline void rel(ParamAlgebra& pa, std::size_t i, std::size_t j,
                std::initializer_list<std::pair<std::size_t, const char*>> terms, bool antisym = true) {
  for (const auto& [k, expr] : terms) pa.add(i - 1, j - 1, k - 1, Polynomial::parse(expr, &pa.params()), antisym);
}

inline std::vector<std::string> e_names() { return {"e1", "e2", "e3", "e4"}; }

}  // namespace detail

/// d(λ,μ): [e2,e3]=e1, [e2,e4]=λe2, [e3,e4]=e2+μe3, [e1,e4]=(λ+μ)e1.
inline ParamAlgebra d_lambda_mu() {
  ParamAlgebra pa(4, {"lambda", "mu"}, AlgebraKind::lie, detail::e_names());
  detail::rel(pa, 2, 3, {{1, "1"}});
  detail::rel(pa, 2, 4, {{2, "lambda"}});
  detail::rel(pa, 3, 4, {{2, "1"}, {3, "mu"}});
  detail::rel(pa, 1, 4, {{1, "lambda + mu"}});
  return pa;
}

/// Diamond with [e2,e3] = e1 + t e4.
inline ParamAlgebra sl2c() {
  ParamAlgebra pa(4, {"t"}, AlgebraKind::lie, detail::e_names());
  detail::rel(pa, 2, 3, {{1, "1"}, {4, "t"}});
  detail::rel(pa, 2, 4, {{2, "1"}});
  detail::rel(pa, 3, 4, {{2, "1"}, {3, "-1"}});
  return pa;
}

/// Diamond (e-basis) with the Leibniz term [e4,e4] = t e1.
inline ParamAlgebra diamond_phi14() {
  ParamAlgebra pa(4, {"t"}, AlgebraKind::leibniz, detail::e_names());
  detail::rel(pa, 2, 3, {{1, "1"}});
  detail::rel(pa, 2, 4, {{2, "1"}});
  detail::rel(pa, 3, 4, {{2, "1"}, {3, "-1"}});
  detail::rel(pa, 4, 4, {{1, "t"}}, false);
  return pa;
}

/// Four-parameter Leibniz deformation of the diamond (e-basis), parameters
/// t, s, u, w along φ3, φ7, φ11, φ14.
inline ParamAlgebra diamond_versal() {
  ParamAlgebra pa(4, {"t", "s", "u", "w"}, AlgebraKind::leibniz, detail::e_names());
  detail::rel(pa, 1, 4, {{1, "t"}}, false);
  detail::rel(pa, 4, 1, {{1, "-(t+u)"}}, false);
  detail::rel(pa, 2, 3, {{1, "1"}, {4, "s"}}, false);
  detail::rel(pa, 3, 2, {{1, "u - 1"}, {4, "-s"}}, false);
  detail::rel(pa, 2, 4, {{2, "1"}}, false);
  detail::rel(pa, 4, 2, {{2, "-1"}}, false);
  detail::rel(pa, 3, 4, {{2, "1"}, {3, "t - 1"}}, false);
  detail::rel(pa, 4, 3, {{2, "-1"}, {3, "1 - t"}}, false);
  detail::rel(pa, 3, 3, {{1, "u/2"}}, false);
  detail::rel(pa, 4, 4, {{1, "w"}}, false);
  return pa;
}

/// Lie deformations of g54, numbered 1..5.
inline ParamAlgebra g54_family(int n) {
  switch (n) {
    case 1: {
      ParamAlgebra pa(5, {"p", "q", "r"});
      detail::rel(pa, 3, 4, {{2, "1"}});
      detail::rel(pa, 1, 5, {{1, "r"}});
      detail::rel(pa, 2, 5, {{2, "p + q"}});
      detail::rel(pa, 3, 5, {{3, "p"}, {1, "1"}});
      detail::rel(pa, 4, 5, {{3, "1"}, {4, "q"}});
      return pa;
    }
    case 2: {
      ParamAlgebra pa(5, {});
      detail::rel(pa, 3, 4, {{4, "2"}});
      detail::rel(pa, 3, 5, {{5, "-2"}});
      detail::rel(pa, 4, 5, {{3, "1"}});
      detail::rel(pa, 1, 2, {{1, "1"}});
      return pa;
    }
    case 3: {
      ParamAlgebra pa(5, {});
      detail::rel(pa, 3, 4, {{4, "2"}});
      detail::rel(pa, 3, 5, {{5, "-2"}});
      detail::rel(pa, 4, 5, {{3, "1"}});
      detail::rel(pa, 1, 3, {{1, "1"}});
      detail::rel(pa, 2, 5, {{1, "1"}});
      detail::rel(pa, 2, 3, {{2, "-1"}});
      detail::rel(pa, 1, 4, {{2, "1"}});
      return pa;
    }
    case 4: {
      ParamAlgebra pa(5, {"p", "q"});
      detail::rel(pa, 2, 5, {{1, "1"}, {2, "p"}});
      detail::rel(pa, 3, 5, {{2, "1"}, {3, "q"}});
      detail::rel(pa, 4, 5, {{3, "1"}, {4, "p + q"}});
      detail::rel(pa, 1, 5, {{1, "p + q"}});
      detail::rel(pa, 2, 3, {{1, "p*q"}});
      detail::rel(pa, 2, 4, {{1, "q"}});
      detail::rel(pa, 3, 4, {{1, "1"}});
      return pa;
    }
    case 5: {
      ParamAlgebra pa(5, {"p", "q"});
      detail::rel(pa, 3, 4, {{2, "1"}});
      detail::rel(pa, 2, 5, {{2, "p + q"}});
      detail::rel(pa, 3, 5, {{1, "1"}, {3, "p"}});
      detail::rel(pa, 4, 5, {{3, "1"}, {4, "q"}});
      detail::rel(pa, 1, 5, {{1, "q + 2*p"}});
      detail::rel(pa, 2, 3, {{1, "p - q"}});
      detail::rel(pa, 2, 4, {{1, "1"}});
      return pa;
    }
    default:
      throw UnknownName("g54 families are numbered 1..5");
  }
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {"d_lambda_mu", "sl2c",          "diamond_phi14",
                                             "diamond_versal", "g54_family(n)"};
  return n;
}

inline ParamAlgebra lookup(const std::string& name, const std::vector<long>& params = {}) {
  if (name == "g54_family") {
    if (params.size() != 1) throw UnknownName("family 'g54_family' takes one integer parameter (1..5)");
    return g54_family(static_cast<int>(params[0]));
  }
  if (!params.empty()) throw UnknownName("family '" + name + "' takes no parameters");
  if (name == "d_lambda_mu") return d_lambda_mu();
  if (name == "sl2c") return sl2c();
  if (name == "diamond_phi14") return diamond_phi14();
  if (name == "diamond_versal") return diamond_versal();
  std::string msg = "unknown family '" + name + "'; available:";
  for (const auto& n : names()) msg += " " + n;
  throw UnknownName(msg);
}

}  // namespace families

}  // namespace leibcoh

#endif
