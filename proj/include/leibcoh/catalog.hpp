#ifndef LEIBCOH_CATALOG_HPP
#define LEIBCOH_CATALOG_HPP

#include <string>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/cochain.hpp"

namespace leibcoh::catalog {

namespace detail {

// 1-based convenience: [x_i, x_j] = sum coeff * x_k, antisymmetric.
inline void rel(AlgebraSpec& g, std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, Scalar>> terms,
                bool antisym = true) {
  Vector v(g.dim());
  for (const auto& [k, x] : terms) v[k - 1] += x;
  g.set_bracket(i - 1, j - 1, v, antisym);
}

inline std::vector<std::string> names(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace detail

inline AlgebraSpec abelian(std::size_t n) { return AlgebraSpec(n, AlgebraKind::lie); }

/// H_N: [x_i, x_{N+i}] = x_{2N+1}.
inline AlgebraSpec heisenberg(std::size_t n) {
  if (n == 0) throw UnknownName("heisenberg(N) needs N >= 1");
  AlgebraSpec g(2 * n + 1);
  for (std::size_t i = 1; i <= n; ++i) detail::rel(g, i, n + i, {{2 * n + 1, 1}});
  return g;
}

/// Diamond algebra: [x1,x2]=x3, [x1,x3]=-x2, [x2,x3]=x4.
inline AlgebraSpec diamond_x() {
  AlgebraSpec g(4);
  detail::rel(g, 1, 2, {{3, 1}});
  detail::rel(g, 1, 3, {{2, -1}});
  detail::rel(g, 2, 3, {{4, 1}});
  return g;
}

/// Diamond algebra in the e-basis: [e2,e3]=e1, [e2,e4]=e2, [e3,e4]=e2-e3.
inline AlgebraSpec diamond_e() {
  AlgebraSpec g(4, AlgebraKind::lie, detail::names("e", 4));
  detail::rel(g, 2, 3, {{1, 1}});
  detail::rel(g, 2, 4, {{2, 1}});
  detail::rel(g, 3, 4, {{2, 1}, {3, -1}});
  return g;
}

/// Columns are x1..x4 in e-coordinates: x1 = i e4, x2 = e3, x3 = i(-e2+e3), x4 = i e1.
inline Matrix diamond_e_to_x() {
  const Scalar i = Scalar::imaginary_unit();
  Matrix t(4, 4);
  t(3, 0) = i;
  t(2, 1) = 1;
  t(1, 2) = -i;
  t(2, 2) = i;
  t(0, 3) = i;
  return t;
}

/// g_{5,4}: [x1,x2]=x3, [x1,x3]=x4, [x2,x3]=x5.
inline AlgebraSpec g54() {
  AlgebraSpec g(5);
  detail::rel(g, 1, 2, {{3, 1}});
  detail::rel(g, 1, 3, {{4, 1}});
  detail::rel(g, 2, 3, {{5, 1}});
  return g;
}

/// sl(2) in the basis (e, f, h): [h,e]=2e, [h,f]=-2f, [e,f]=h.
inline AlgebraSpec sl2() {
  AlgebraSpec g(3, AlgebraKind::lie, {"e", "f", "h"});
  detail::rel(g, 3, 1, {{1, 2}});
  detail::rel(g, 3, 2, {{2, -2}});
  detail::rel(g, 1, 2, {{3, 1}});
  return g;
}

/// sl(2) ⊕ C^k, the abelian summand spanned by the last k basis vectors.
inline AlgebraSpec sl2_plus_abelian(std::size_t k) {
  AlgebraSpec s = sl2();
  std::vector<std::string> names = s.basis_names();
  for (std::size_t i = 1; i <= k; ++i) names.push_back("z" + std::to_string(i));
  AlgebraSpec g(3 + k, AlgebraKind::lie, names);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) g.c(a, b, c) = s.c(a, b, c);
  return g;
}

/// gl(n) from elementary-matrix commutators. Basis order: E_ij (i != j,
/// row-major), then E_ii - E_{i+1,i+1}, then the identity matrix last, so
/// x_1..x_{n^2-1} span sl(n).
inline AlgebraSpec gl(std::size_t n) {
  if (n == 0) throw UnknownName("gl(n) needs n >= 1");
  const std::size_t d = n * n;
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        Matrix m(n, n);
        m(i, j) = 1;
        basis.push_back(m);
      }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix m(n, n);
    m(i, i) = 1;
    m(i + 1, i + 1) = -1;
    basis.push_back(m);
  }
  basis.push_back(Matrix::identity(n));

  // Columns: flattened basis matrices.
  Matrix flat(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) flat(r * n + c, a) = basis[a](r, c);
  Matrix flat_inv = inverse(flat);

  AlgebraSpec g(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Matrix comm = basis[a] * basis[b];
      Matrix ba = basis[b] * basis[a];
      Vector v(d);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) v[r * n + c] = comm(r, c) - ba(r, c);
      Vector coords = flat_inv * v;
      for (std::size_t k = 0; k < d; ++k) g.c(a, b, k) = coords[k];
    }
  return g;
}

/// Representative Leibniz 2-cocycles φ3, φ7, φ11, φ14 of the diamond in the
/// e-basis, as adjoint 2-cochains.
inline std::vector<std::pair<std::string, Cochain>> diamond_e_cocycles() {
  CochainScheme s{2, Coefficients::adjoint, 4};
  auto make = [&](std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> entries) {
    Cochain c(s);
    for (const auto& [i, j, k, x] : entries) c.at(k - 1, {i - 1, j - 1}) = x;
    return c;
  };
  return {
      {"phi3", make({{1, 4, 1, 1}, {4, 1, 1, -1}, {3, 4, 3, 1}, {4, 3, 3, -1}})},
      {"phi7", make({{2, 3, 4, 1}, {3, 2, 4, -1}})},
      {"phi11", make({{3, 2, 1, 1}, {3, 3, 1, Scalar::rational(1, 2)}, {4, 1, 1, -1}})},
      {"phi14", make({{4, 4, 1, 1}})},
  };
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {"abelian(n)", "heisenberg(N)", "diamond_x", "diamond_e", "g54",
                                             "gl(n)",      "sl2",           "sl2_plus_abelian(k)"};
  return n;
}

/// Looks an algebra up by name; parameterized entries take one integer.
inline AlgebraSpec lookup(const std::string& name, const std::vector<long>& params = {}) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw UnknownName("catalog entry '" + name + "' takes " + std::to_string(count) + " integer parameter(s)");
  };
  auto positive = [&](long v) {
    if (v < 1) throw UnknownName("catalog entry '" + name + "' needs a positive parameter");
    return static_cast<std::size_t>(v);
  };
  if (name == "abelian") {
    need(1);
    return abelian(positive(params[0]));
  }
  if (name == "heisenberg") {
    need(1);
    return heisenberg(positive(params[0]));
  }
  if (name == "gl") {
    need(1);
    return gl(positive(params[0]));
  }
  if (name == "sl2_plus_abelian") {
    need(1);
    return sl2_plus_abelian(positive(params[0]));
  }
  if (name == "diamond_x") {
    need(0);
    return diamond_x();
  }
  if (name == "diamond_e") {
    need(0);
    return diamond_e();
  }
  if (name == "g54") {
    need(0);
    return g54();
  }
  if (name == "sl2") {
    need(0);
    return sl2();
  }
  std::string msg = "unknown catalog algebra '" + name + "'; available:";
  for (const auto& n : names()) msg += " " + n;
  throw UnknownName(msg);
}

}  // namespace leibcoh::catalog

#endif
