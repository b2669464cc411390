#ifndef LEIBCOH_KOSZUL_HPP
#define LEIBCOH_KOSZUL_HPP

#include <cstddef>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/linalg.hpp"

namespace leibcoh {

/// Coordinates on S²g*: the upper-triangular Gram entries b_ij (i <= j),
/// ordered lexicographically. So ω^i⊙ω^j (i<j) has coordinate 1 at (i,j)
/// and ω^i⊗ω^i has coordinate 1 at (i,i).
class SymmetricPairs {
public:
  explicit SymmetricPairs(std::size_t d) : d_(d) {}
  [[nodiscard]] std::size_t size() const { return d_ * (d_ + 1) / 2; }
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * d_ - i * (i - 1) / 2 + (j - i);
  }
  [[nodiscard]] std::size_t dim() const { return d_; }

private:
  std::size_t d_;
};

/// Symmetric bilinear form B(x,y) = xᵀ·gram·y.
class BilinearForm {
public:
  explicit BilinearForm(std::size_t d) : gram_(d, d) {}
  explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (!(gram_ == gram_.transpose())) throw DimensionMismatch("bilinear form: gram matrix is not symmetric");
  }

  static BilinearForm from_pairs(const SymmetricPairs& sp, std::span<const Scalar> coords) {
    BilinearForm b(sp.dim());
    for (std::size_t i = 0; i < sp.dim(); ++i)
      for (std::size_t j = i; j < sp.dim(); ++j) {
        b.gram_(i, j) = coords[sp.index(i, j)];
        b.gram_(j, i) = coords[sp.index(i, j)];
      }
    return b;
  }

  [[nodiscard]] const Matrix& gram() const { return gram_; }
  [[nodiscard]] std::size_t dim() const { return gram_.rows(); }

  [[nodiscard]] Vector pair_coords() const {
    SymmetricPairs sp(dim());
    Vector v(sp.size());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i; j < dim(); ++j) v[sp.index(i, j)] = gram_(i, j);
    return v;
  }

  /// B([z,x],y) = -B(x,[z,y]) on all basis triples.
  [[nodiscard]] bool is_invariant(const AlgebraSpec& g) const {
    const std::size_t d = dim();
    for (std::size_t z = 0; z < d; ++z)
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
          Scalar s;
          for (std::size_t k = 0; k < d; ++k) {
            if (!g.c(z, x, k).is_zero()) s += g.c(z, x, k) * gram_(k, y);
            if (!g.c(z, y, k).is_zero()) s += g.c(z, y, k) * gram_(x, k);
          }
          if (!s.is_zero()) return false;
        }
    return true;
  }

  /// B as a trivial 2-cochain.
  [[nodiscard]] Cochain as_cochain() const {
    Cochain c(CochainScheme{2, Coefficients::trivial, dim()});
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) c.at(0, {i, j}) = gram_(i, j);
    return c;
  }

  /// I_B(x,y,z) = B([x,y],z) as a full trivial 3-cochain.
  [[nodiscard]] Cochain koszul_tensor(const AlgebraSpec& g) const {
    const std::size_t d = dim();
    Cochain c(CochainScheme{3, Coefficients::trivial, d});
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
          Scalar s;
          for (std::size_t k = 0; k < d; ++k)
            if (!g.c(x, y, k).is_zero()) s += g.c(x, y, k) * gram_(k, z);
          c.at(0, {x, y, z}) = s;
        }
    return c;
  }

private:
  Matrix gram_;
};

/// (S²g*)^g in SymmetricPairs coordinates: solutions of
/// B([z,x],y) + B(x,[z,y]) = 0.
inline Subspace invariant_forms(const AlgebraSpec& g) {
  const std::size_t d = g.dim();
  SymmetricPairs sp(d);
  SparseMatrix m(d * d * d, sp.size());
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        std::vector<Scalar> row(sp.size());
        for (std::size_t k = 0; k < d; ++k) {
          if (!g.c(z, x, k).is_zero()) row[sp.index(k, y)] += g.c(z, x, k);
          if (!g.c(z, y, k).is_zero()) row[sp.index(x, k)] += g.c(z, y, k);
        }
        m.row((z * d + x) * d + y) = to_sparse(row);
      }
  return kernel(m);
}

/// The Koszul map I: (S²g*)^g -> Λ³g*, B ↦ I_B, written in the RREF basis
/// of the invariant forms (columns) and the wedge basis ω^{i,j,k} (rows).
struct KoszulMap {
  Subspace inv_forms;
  Matrix matrix;
  bool images_alternating = true;  ///< every I_B is fully antisymmetric

  [[nodiscard]] std::size_t wedge_dim() const { return matrix.rows(); }
};

inline Vector koszul_image(const AlgebraSpec& g, const BilinearForm& b) {
  WedgeScheme w(g.dim(), 3, Coefficients::trivial);
  return tensor_to_wedge(w, b.koszul_tensor(g));
}

inline KoszulMap koszul_map(const AlgebraSpec& g) {
  KoszulMap km;
  km.inv_forms = invariant_forms(g);
  SymmetricPairs sp(g.dim());
  WedgeScheme w(g.dim(), 3, Coefficients::trivial);
  km.matrix = Matrix(w.total_dim(), km.inv_forms.dim());
  for (std::size_t a = 0; a < km.inv_forms.dim(); ++a) {
    BilinearForm b = BilinearForm::from_pairs(sp, km.inv_forms.basis().row(a));
    Cochain t = b.koszul_tensor(g);
    if (!is_antisymmetric(t)) km.images_alternating = false;
    Vector v = tensor_to_wedge(w, t);
    for (std::size_t r = 0; r < v.size(); ++r) km.matrix(r, a) = v[r];
  }
  return km;
}

struct KoszulReport {
  Subspace inv_forms;  ///< SymmetricPairs coordinates
  Subspace ker_I;      ///< SymmetricPairs coordinates
  Subspace im_I;       ///< Λ³ wedge coordinates
  Subspace im_I_cap_B3_trivial;
  Subspace c_tensor_imI_cap_B3_adjoint;  ///< g ⊗ Λ³ wedge coordinates
  bool is_I_null = false;
  bool is_I_exact = false;
  bool adjoint_uncoupling = false;
  bool trivial_uncoupling = false;
  std::size_t p = 0;
  std::size_t c = 0;

  // Identities checked while building the report.
  bool images_alternating = true;
  bool dimension_identity = false;      ///< dim inv = p(p+1)/2 + dim Im I
  bool restriction_is_minus_I = false;  ///< δ_C restricted to (S²g*)^g equals -I
  bool uncoupling_implication = true;   ///< adjoint ⇒ trivial, checked when c != 0
};

/// c ⊗ V inside g ⊗ Λ³g*, V given in Λ³ wedge coordinates.
inline Subspace center_tensor(const Subspace& center, const Subspace& v, std::size_t d) {
  const std::size_t w = v.ambient_dim();
  std::vector<SparseRow> rows;
  for (std::size_t a = 0; a < center.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b) {
      SparseRow r;
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& z = center.basis()(a, k);
        if (z.is_zero()) continue;
        for (std::size_t i = 0; i < w; ++i)
          if (!v.basis()(b, i).is_zero()) r.emplace_back(k * w + i, z * v.basis()(b, i));
      }
      rows.push_back(std::move(r));
    }
  return Subspace::span_sparse(d * w, rows);
}

inline KoszulReport koszul_report(const AlgebraSpec& g) {
  const std::size_t d = g.dim();
  StructureReport st = validate(g);
  KoszulMap km = koszul_map(g);
  KoszulReport rep;
  rep.p = st.p;
  rep.c = st.c;
  rep.inv_forms = km.inv_forms;
  rep.images_alternating = km.images_alternating;

  Subspace coeffs_ker = kernel(km.matrix);
  SymmetricPairs sp(d);
  std::vector<Vector> ker_vecs;
  for (std::size_t i = 0; i < coeffs_ker.dim(); ++i) {
    Vector v(sp.size());
    for (std::size_t a = 0; a < km.inv_forms.dim(); ++a) {
      const Scalar& alpha = coeffs_ker.basis()(i, a);
      if (alpha.is_zero()) continue;
      for (std::size_t j = 0; j < sp.size(); ++j) v[j] += alpha * km.inv_forms.basis()(a, j);
    }
    ker_vecs.push_back(std::move(v));
  }
  rep.ker_I = Subspace::span(sp.size(), ker_vecs);
  rep.im_I = image(km.matrix);

  Subspace b3_triv = image(Coboundary(g, 2, Coefficients::trivial).lie_matrix());
  Subspace b3_adj = image(Coboundary(g, 2, Coefficients::adjoint).lie_matrix());
  rep.im_I_cap_B3_trivial = intersect(rep.im_I, b3_triv);
  rep.c_tensor_imI_cap_B3_adjoint = intersect(center_tensor(st.center, rep.im_I, d), b3_adj);

  rep.is_I_null = rep.im_I.dim() == 0;
  rep.is_I_exact = b3_triv.contains(rep.im_I);
  rep.trivial_uncoupling = rep.im_I_cap_B3_trivial.dim() == 0;
  rep.adjoint_uncoupling = rep.c_tensor_imI_cap_B3_adjoint.dim() == 0;
  if (rep.c != 0 && rep.adjoint_uncoupling && !rep.trivial_uncoupling) rep.uncoupling_implication = false;

  rep.dimension_identity = rep.inv_forms.dim() == rep.p * (rep.p + 1) / 2 + rep.im_I.dim();

  rep.restriction_is_minus_I = true;
  Coboundary delta_c(g, 2, Coefficients::trivial);
  for (std::size_t a = 0; a < km.inv_forms.dim(); ++a) {
    BilinearForm b = BilinearForm::from_pairs(sp, km.inv_forms.basis().row(a));
    Cochain lhs = delta_c.apply(b.as_cochain());
    Cochain rhs = Scalar(-1) * b.koszul_tensor(g);
    if (!(lhs == rhs)) rep.restriction_is_minus_I = false;
  }
  return rep;
}

/// Uncoupling predicates (adjoint, trivial).
inline std::pair<bool, bool> uncoupling_predicates(const AlgebraSpec& g) {
  KoszulReport r = koszul_report(g);
  return {r.adjoint_uncoupling, r.trivial_uncoupling};
}

/// HL² = H² ⊕ ZL²₀ ⊕ (coupled), with deterministic representatives.
struct HL2Decomposition {
  Coefficients coeff = Coefficients::adjoint;
  std::vector<Cochain> h2_part;
  std::vector<Cochain> symmetric_part;
  std::vector<Cochain> coupled_part;
  std::size_t hl2_dim = 0;           ///< from the direct quotient ZL²/BL²
  bool symmetric_meets_bl2 = false;  ///< ZL²₀ ∩ BL² ≠ 0 (never expected)

  [[nodiscard]] bool dims_consistent() const {
    return hl2_dim == h2_part.size() + symmetric_part.size() + coupled_part.size();
  }
};

namespace detail {

/// c-valued symmetric 2-cochain z ⊗ B (adjoint), or B itself (trivial).
inline Cochain valued_form(const Vector* z, const BilinearForm& b, Coefficients coeff) {
  const std::size_t d = b.dim();
  Cochain c(CochainScheme{2, coeff, d});
  for (std::size_t k = 0; k < c.scheme().outputs(); ++k) {
    Scalar zk = z != nullptr ? (*z)[k] : Scalar(1);
    if (zk.is_zero()) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!b.gram()(i, j).is_zero()) c.at(k, {i, j}) = zk * b.gram()(i, j);
  }
  return c;
}

}  // namespace detail

inline HL2Decomposition decompose_HL2(const AlgebraSpec& g, Coefficients coeff) {
  const std::size_t d = g.dim();
  HL2Decomposition out;
  out.coeff = coeff;

  Cohomology h2 = cohomology(g, coeff, 2, Complex::lie);
  out.h2_part = h2.representatives;

  LeibnizSpaces ls = leibniz_spaces(g, coeff);
  out.hl2_dim = ls.zl2.dim() - ls.bl2.dim();
  CochainScheme s2{2, coeff, d};
  for (std::size_t i = 0; i < ls.zl2_sym.dim(); ++i) out.symmetric_part.emplace_back(s2, ls.zl2_sym.basis_vector(i));
  out.symmetric_meets_bl2 = intersect(ls.zl2_sym, ls.bl2).dim() != 0;

  // W: complement of ker I in the invariant forms, by non-pivot completion.
  KoszulReport kr = koszul_report(g);
  std::vector<Vector> w_basis = quotient_reps(kr.inv_forms, kr.ker_I);
  if (w_basis.empty()) return out;
  SymmetricPairs sp(d);
  std::vector<BilinearForm> w_forms;
  std::vector<Vector> w_images;
  for (const auto& v : w_basis) {
    w_forms.push_back(BilinearForm::from_pairs(sp, v));
    w_images.push_back(koszul_image(g, w_forms.back()));
  }

  StructureReport st = validate(g);
  // Generators of F(c ⊗ W) (adjoint) or I(W) (trivial), with their sources.
  std::vector<Cochain> sources;
  std::vector<Vector> images;
  WedgeScheme w3(d, 3, coeff);
  if (coeff == Coefficients::trivial) {
    for (std::size_t j = 0; j < w_forms.size(); ++j) {
      sources.push_back(detail::valued_form(nullptr, w_forms[j], coeff));
      images.push_back(w_images[j]);
    }
  } else {
    const std::size_t wd = w3.basis.size();
    for (std::size_t a = 0; a < st.center.dim(); ++a) {
      Vector z = st.center.basis_vector(a);
      for (std::size_t j = 0; j < w_forms.size(); ++j) {
        sources.push_back(detail::valued_form(&z, w_forms[j], coeff));
        Vector img(w3.total_dim());
        for (std::size_t k = 0; k < d; ++k)
          if (!z[k].is_zero())
            for (std::size_t r = 0; r < wd; ++r)
              if (!w_images[j][r].is_zero()) img[k * wd + r] = z[k] * w_images[j][r];
        images.push_back(std::move(img));
      }
    }
  }
  if (images.empty()) return out;

  const Subspace& target = coeff == Coefficients::trivial ? kr.im_I_cap_B3_trivial : kr.c_tensor_imI_cap_B3_adjoint;
  Matrix f(w3.total_dim(), images.size());
  for (std::size_t col = 0; col < images.size(); ++col)
    for (std::size_t r = 0; r < w3.total_dim(); ++r) f(r, col) = images[col][r];
  SparseMatrix d2 = Coboundary(g, 2, coeff).lie_matrix();
  WedgeScheme w2(d, 2, coeff);
  for (std::size_t t = 0; t < target.dim(); ++t) {
    Vector v = target.basis_vector(t);
    auto alpha = solve_particular(f, v);
    auto omega = solve_particular(d2, v);
    if (!alpha || !omega) throw Error("coupled cocycle construction failed: target not in F(c⊗W) ∩ B³");
    Cochain rep(s2);
    for (std::size_t col = 0; col < sources.size(); ++col)
      if (!(*alpha)[col].is_zero()) rep += (*alpha)[col] * sources[col];
    rep += wedge_to_tensor(w2, *omega);
    out.coupled_part.push_back(std::move(rep));
  }
  return out;
}

}  // namespace leibcoh

#endif
