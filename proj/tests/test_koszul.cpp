#include <gtest/gtest.h>

#include "leibcoh/leibcoh.hpp"
#include "oracle.hpp"

using namespace leibcoh;

namespace {

constexpr Coefficients kBoth[] = {Coefficients::adjoint, Coefficients::trivial};

// Gram matrix from (i, j, value) entries, symmetrized; 1-based indices.
BilinearForm form(std::size_t d, std::initializer_list<std::tuple<std::size_t, std::size_t, long>> entries) {
  Matrix m(d, d);
  for (const auto& [i, j, v] : entries) {
    m(i - 1, j - 1) = v;
    m(j - 1, i - 1) = v;
  }
  return BilinearForm(m);
}

// B = ω¹⊙ω⁵ − ω²⊙ω⁴ + ω³⊗ω³ on g54.
BilinearForm g54_form() { return form(5, {{1, 5, 1}, {2, 4, -1}, {3, 3, 1}}); }

// B + ω^{1,5} as a trivial 2-cochain.
Cochain g54_g1() {
  Cochain c = g54_form().as_cochain();
  c.at(0, {0, 4}) += 1;
  c.at(0, {4, 0}) -= 1;
  return c;
}

Cochain valued(std::size_t k, const Cochain& psi) {
  const std::size_t d = psi.scheme().algebra_dim;
  Cochain out(CochainScheme{2, Coefficients::adjoint, d});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.at(k, {i, j}) = psi.at(0, {i, j});
  return out;
}

Subspace span_of(std::size_t n, const std::vector<Cochain>& cs) {
  std::vector<Vector> vs;
  for (const auto& c : cs) vs.push_back(c.coords());
  return Subspace::span(n, vs);
}

// Lie 2-cocycles + ZL²₀ + BL², the part of ZL² the coupled classes complement.
Subspace uncoupled(const AlgebraSpec& g, Coefficients c) {
  LeibnizSpaces ls = leibniz_spaces(g, c);
  return sum(sum(lie_spaces(g, c).z2, ls.zl2_sym), ls.bl2);
}

}  // namespace

TEST(InvariantForms, Abelian) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(invariant_forms(catalog::abelian(n)).dim(), n * (n + 1) / 2);
}

TEST(InvariantForms, HeisenbergVanishOnCenterPairings) {
  for (std::size_t n = 1; n <= 3; ++n) {
    AlgebraSpec g = catalog::heisenberg(n);
    const std::size_t d = 2 * n + 1;
    Subspace inv = invariant_forms(g);
    EXPECT_EQ(inv.dim(), n * (2 * n + 1));
    SymmetricPairs sp(d);
    for (std::size_t r = 0; r < inv.dim(); ++r) {
      BilinearForm b = BilinearForm::from_pairs(sp, inv.basis().row(r));
      EXPECT_TRUE(b.is_invariant(g));
      for (std::size_t i = 0; i < d; ++i) EXPECT_TRUE(b.gram()(i, d - 1).is_zero());
    }
  }
}

TEST(InvariantForms, DiamondContainsNondegenerateForm) {
  AlgebraSpec g = catalog::diamond_x();
  BilinearForm c = form(4, {{1, 4, 1}, {2, 2, 1}, {3, 3, 1}});
  EXPECT_TRUE(c.is_invariant(g));
  EXPECT_TRUE(invariant_forms(g).contains(c.pair_coords()));
  EXPECT_EQ(invariant_forms(g).dim(), 2u);
}

TEST(InvariantForms, MatchesDirectCheck) {
  oracle::Rng rng(31);
  for (const auto& [name, g] : oracle::catalog_algebras()) {
    Subspace inv = invariant_forms(g);
    SymmetricPairs sp(g.dim());
    for (std::size_t r = 0; r < inv.dim(); ++r)
      EXPECT_TRUE(BilinearForm::from_pairs(sp, inv.basis().row(r)).is_invariant(g)) << name;
    // A random symmetric form is invariant exactly when it lies in the space.
    Vector v = rng.vector(sp.size(), 0.3);
    EXPECT_EQ(BilinearForm::from_pairs(sp, v).is_invariant(g), inv.contains(v)) << name;
  }
}

TEST(KoszulMap, HeisenbergIsNull) {
  for (std::size_t n = 1; n <= 3; ++n) {
    KoszulMap km = koszul_map(catalog::heisenberg(n));
    EXPECT_TRUE(km.matrix.is_zero());
    EXPECT_TRUE(koszul_report(catalog::heisenberg(n)).is_I_null);
  }
}

TEST(KoszulMap, DiamondIsExact) {
  KoszulReport r = koszul_report(catalog::diamond_x());
  EXPECT_FALSE(r.is_I_null);
  EXPECT_TRUE(r.is_I_exact);
  EXPECT_EQ(r.im_I.dim(), 1u);
}

TEST(KoszulMap, G54ImageIsSpannedByB) {
  AlgebraSpec g = catalog::g54();
  BilinearForm b = g54_form();
  EXPECT_TRUE(b.is_invariant(g));
  KoszulReport r = koszul_report(g);
  Vector ib = koszul_image(g, b);
  EXPECT_EQ(r.im_I, Subspace::span(ib.size(), {ib}));
  EXPECT_EQ(r.im_I_cap_B3_trivial, r.im_I);
  EXPECT_EQ(r.inv_forms.dim(), 4u);
  EXPECT_EQ(r.ker_I.dim(), 3u);
  EXPECT_FALSE(r.is_I_null);
  EXPECT_TRUE(r.is_I_exact);
}

TEST(KoszulMap, KoszulTensorIsAlternatingAndMinusDelta) {
  for (const auto& [name, g] : oracle::catalog_algebras()) {
    Subspace inv = invariant_forms(g);
    SymmetricPairs sp(g.dim());
    for (std::size_t r = 0; r < inv.dim(); ++r) {
      BilinearForm b = BilinearForm::from_pairs(sp, inv.basis().row(r));
      Cochain ib = b.koszul_tensor(g);
      EXPECT_TRUE(is_antisymmetric(ib)) << name;
      EXPECT_EQ(oracle::delta(g, b.as_cochain()), Scalar(-1) * ib) << name;
    }
  }
}

TEST(Uncoupling, Predicates) {
  auto [sa, st] = uncoupling_predicates(catalog::sl2());
  EXPECT_TRUE(sa);
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_EQ(uncoupling_predicates(catalog::heisenberg(n)), std::make_pair(true, true));
  EXPECT_EQ(uncoupling_predicates(catalog::g54()), std::make_pair(false, false));
  (void)st;
}

TEST(KoszulReport, IdentitiesOnCatalog) {
  for (const auto& [name, g] : oracle::catalog_algebras()) {
    KoszulReport r = koszul_report(g);
    EXPECT_TRUE(r.images_alternating) << name;
    EXPECT_TRUE(r.restriction_is_minus_I) << name;
    EXPECT_TRUE(r.dimension_identity) << name;
    EXPECT_TRUE(r.uncoupling_implication) << name;
    EXPECT_EQ(r.inv_forms.dim(), r.ker_I.dim() + r.im_I.dim()) << name;
  }
}

TEST(Decomposition, DimensionSumOnCatalog) {
  for (const auto& [name, g] : oracle::catalog_algebras()) {
    KoszulReport kr = koszul_report(g);
    for (Coefficients c : kBoth) {
      HL2Decomposition dec = decompose_HL2(g, c);
      EXPECT_TRUE(dec.dims_consistent()) << name << " " << to_string(c);
      EXPECT_FALSE(dec.symmetric_meets_bl2) << name;
      // ZL²₀ = c ⊗ ker I (adjoint) or ker I (trivial).
      const std::size_t sym = c == Coefficients::adjoint ? kr.c * kr.ker_I.dim() : kr.ker_I.dim();
      EXPECT_EQ(dec.symmetric_part.size(), sym) << name;
      const std::size_t coupled =
          c == Coefficients::adjoint ? kr.c_tensor_imI_cap_B3_adjoint.dim() : kr.im_I_cap_B3_trivial.dim();
      EXPECT_EQ(dec.coupled_part.size(), coupled) << name;
      for (const auto& psi : dec.coupled_part) EXPECT_TRUE(apply_leibniz_coboundary(g, psi).is_zero()) << name;
    }
  }
}

TEST(Decomposition, G54Trivial) {
  AlgebraSpec g = catalog::g54();
  HL2Decomposition dec = decompose_HL2(g, Coefficients::trivial);
  EXPECT_EQ(dec.h2_part.size(), 3u);
  EXPECT_EQ(dec.symmetric_part.size(), 3u);
  ASSERT_EQ(dec.coupled_part.size(), 1u);
  EXPECT_EQ(dec.hl2_dim, 7u);
  Subspace base = uncoupled(g, Coefficients::trivial);
  const std::size_t n = base.ambient_dim();
  EXPECT_FALSE(base.contains(g54_g1().coords()));
  EXPECT_EQ(sum(base, span_of(n, dec.coupled_part)), sum(base, span_of(n, {g54_g1()})));
}

TEST(Decomposition, G54Adjoint) {
  AlgebraSpec g = catalog::g54();
  HL2Decomposition dec = decompose_HL2(g, Coefficients::adjoint);
  EXPECT_EQ(dec.h2_part.size(), 9u);
  EXPECT_EQ(dec.symmetric_part.size(), 6u);
  EXPECT_EQ(dec.coupled_part.size(), 2u);
  EXPECT_EQ(dec.hl2_dim, 17u);
  Cochain g1 = valued(4, g54_g1()), g2 = valued(3, g54_g1());
  for (const auto& gk : {g1, g2}) EXPECT_TRUE(apply_leibniz_coboundary(g, gk).is_zero());
  Subspace base = uncoupled(g, Coefficients::adjoint);
  const std::size_t n = base.ambient_dim();
  EXPECT_EQ(sum(base, span_of(n, dec.coupled_part)), sum(base, span_of(n, {g1, g2})));
  EXPECT_EQ(sum(base, span_of(n, {g1, g2})).dim(), base.dim() + 2);
}

TEST(Decomposition, DiamondPhiList) {
  AlgebraSpec g = catalog::diamond_e();
  HL2Decomposition dec = decompose_HL2(g, Coefficients::adjoint);
  EXPECT_EQ(dec.h2_part.size(), 2u);
  EXPECT_EQ(dec.symmetric_part.size(), 1u);
  EXPECT_EQ(dec.coupled_part.size(), 1u);
  EXPECT_EQ(dec.hl2_dim, 4u);
  auto phis = catalog::diamond_e_cocycles();
  const Cochain& phi11 = phis[2].second;
  const Cochain& phi14 = phis[3].second;
  LeibnizSpaces ls = leibniz_spaces(g, Coefficients::adjoint);
  EXPECT_EQ(ls.zl2_sym, span_of(ls.zl2_sym.ambient_dim(), {phi14}));
  Subspace base = uncoupled(g, Coefficients::adjoint);
  EXPECT_FALSE(base.contains(phi11.coords()));
  auto [anti, sym] = split_degree2(phi11);
  EXPECT_FALSE(apply_leibniz_coboundary(g, anti).is_zero());
  EXPECT_FALSE(apply_leibniz_coboundary(g, sym).is_zero());
  const std::size_t n = base.ambient_dim();
  EXPECT_EQ(sum(base, span_of(n, dec.coupled_part)), sum(base, span_of(n, {phi11})));
}

TEST(Decomposition, Heisenberg) {
  const std::size_t hl2[] = {8, 30};
  for (std::size_t n = 1; n <= 2; ++n) {
    HL2Decomposition dec = decompose_HL2(catalog::heisenberg(n), Coefficients::adjoint);
    EXPECT_EQ(dec.symmetric_part.size(), n * (2 * n + 1));
    EXPECT_EQ(dec.hl2_dim, hl2[n - 1]);
    EXPECT_TRUE(dec.coupled_part.empty());
  }
}

TEST(Decomposition, Reductive) {
  // gl(2): c = 1, H² = 0 and HL² = ZL²₀, spanned by x4 ⊗ ω⁴⊗ω⁴.
  AlgebraSpec gl = catalog::gl(2);
  HL2Decomposition dec = decompose_HL2(gl, Coefficients::adjoint);
  EXPECT_EQ(dec.h2_part.size(), 0u);
  EXPECT_EQ(dec.hl2_dim, 1u);
  ASSERT_EQ(dec.symmetric_part.size(), 1u);
  Cochain x4(CochainScheme{2, Coefficients::adjoint, 4});
  x4.at(3, {3, 3}) = 1;
  EXPECT_TRUE(apply_leibniz_coboundary(gl, x4).is_zero());
  EXPECT_EQ(span_of(64, dec.symmetric_part), span_of(64, {x4}));

  AlgebraSpec s2 = catalog::sl2_plus_abelian(2);
  HL2Decomposition d2 = decompose_HL2(s2, Coefficients::adjoint);
  EXPECT_EQ(d2.h2_part.size(), 2u);  // c²(c−1)/2
  EXPECT_EQ(d2.hl2_dim, 8u);         // + c·c(c+1)/2

  HL2Decomposition sl = decompose_HL2(catalog::sl2(), Coefficients::adjoint);
  EXPECT_EQ(sl.hl2_dim, 0u);
  EXPECT_EQ(sl.h2_part.size(), 0u);
}

TEST(SymmetricPairs, Indexing) {
  SymmetricPairs sp(3);
  EXPECT_EQ(sp.size(), 6u);
  EXPECT_EQ(sp.index(0, 0), 0u);
  EXPECT_EQ(sp.index(2, 1), sp.index(1, 2));
  EXPECT_THROW(BilinearForm(Matrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}}, 2)), DimensionMismatch);
}
