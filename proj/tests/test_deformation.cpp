#include <gtest/gtest.h>

#include "leibcoh/leibcoh.hpp"
#include "oracle.hpp"

using namespace leibcoh;

namespace {

const AlgebraSpec& diamond() {
  static const AlgebraSpec g = catalog::diamond_e();
  return g;
}

const std::vector<Cochain>& phis() {
  static const std::vector<Cochain> v = [] {
    std::vector<Cochain> out;
    for (auto& [name, c] : catalog::diamond_e_cocycles()) out.push_back(c);
    return out;
  }();
  return v;
}

enum { P3, P7, P11, P14 };

const ObstructionCalculus& diamond_calc() {
  static const ObstructionCalculus calc(diamond());
  return calc;
}

Verdict bracket_verdict(int a, int b) { return diamond_calc().classify3(bracket(phis()[a], phis()[b])).verdict; }

Monomial mono(const char* text) { return Monomial::parse(text); }

}  // namespace

TEST(Comp, MatchesVectorLevelOracle) {
  oracle::Rng rng(41);
  for (const auto& [name, g] : oracle::catalog_algebras()) {
    CochainScheme s{2, Coefficients::adjoint, g.dim()};
    Cochain a = rng.cochain(s, 0.2), b = rng.cochain(s, 0.2);
    EXPECT_EQ(comp(a, b), oracle::comp(a, b)) << name;
    EXPECT_EQ(bracket(a, b), bracket(b, a)) << name;
    EXPECT_EQ(bracket(a, a), Scalar(2) * leibcoh::comp(a, a)) << name;
  }
  EXPECT_THROW((void)leibcoh::comp(Cochain(CochainScheme{2, Coefficients::trivial, 2}), Cochain(CochainScheme{2, Coefficients::trivial, 2})),
               UnsupportedDegree);
}

TEST(Defect, VanishesOnCatalogBrackets) {
  for (const auto& [name, g] : oracle::catalog_algebras()) EXPECT_TRUE(defect(bracket_cochain(g)).is_zero()) << name;
  ParamAlgebra phi14 = families::diamond_phi14();
  AlgebraSpec leib = specialize(phi14, {{"t", Scalar(3)}});
  EXPECT_TRUE(defect(bracket_cochain(leib)).is_zero());
}

TEST(Defect, DetectsBrokenIdentity) {
  Cochain mu = bracket_cochain(diamond()) + phis()[P14];
  ASSERT_TRUE(defect(mu).is_zero());
  mu.at(1, {2, 3}) = -mu.at(1, {2, 3});  // [e3,e4] = -e2 - e3
  EXPECT_FALSE(defect(mu).is_zero());
}

TEST(Defect, CoefficientIdentityOnRandomCochains) {
  oracle::Rng rng(43);
  for (const auto& [name, g] : oracle::catalog_algebras()) {
    CochainScheme s{2, Coefficients::adjoint, g.dim()};
    for (int n = 0; n < 20; ++n) {
      Cochain phi = rng.cochain(s, n % 2 == 0 ? 0.15 : 0.4);
      EXPECT_EQ(oracle::defect_identity(g, phi, n < 2), "") << name << " sample " << n;
    }
  }
}

TEST(Classify, Verdicts) {
  const auto& calc = diamond_calc();
  EXPECT_EQ(calc.classify3(Cochain(CochainScheme{3, Coefficients::adjoint, 4})).verdict, Verdict::zero);
  EXPECT_EQ(bracket_verdict(P3, P3), Verdict::zero);
  EXPECT_EQ(bracket_verdict(P7, P7), Verdict::zero);
  EXPECT_EQ(bracket_verdict(P14, P14), Verdict::zero);
  EXPECT_EQ(bracket_verdict(P11, P11), Verdict::nontrivial);
  EXPECT_EQ(bracket_verdict(P3, P11), Verdict::nontrivial);
  EXPECT_EQ(bracket_verdict(P3, P14), Verdict::nontrivial);
  EXPECT_EQ(bracket_verdict(P11, P14), Verdict::nontrivial);
  EXPECT_EQ(bracket_verdict(P7, P11), Verdict::coboundary);
  EXPECT_EQ(bracket_verdict(P7, P14), Verdict::coboundary);
  // Regression: under the defect-anchored bracket this pair is obstructed,
  // unlike the reference verdict list (README, "Known discrepancies").
  EXPECT_EQ(bracket_verdict(P3, P7), Verdict::nontrivial);
  EXPECT_THROW((void)calc.classify3(Cochain(CochainScheme{2, Coefficients::adjoint, 4})), UnsupportedDegree);
}

TEST(Classify, BracketsAreCocyclesAndWitnessesSolve) {
  const auto& calc = diamond_calc();
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      ObstructionClass cls = calc.classify3(bracket(phis()[a], phis()[b]));
      EXPECT_TRUE(cls.is_cocycle) << a << "," << b;
      if (cls.verdict == Verdict::coboundary) {
        ASSERT_TRUE(cls.witness);
        EXPECT_EQ(apply_leibniz_coboundary(diamond(), *cls.witness), cls.cochain);
      }
      if (cls.verdict == Verdict::nontrivial) EXPECT_FALSE(calc.bl3().contains(cls.cochain.coords()));
    }
}

TEST(Classify, InvariantUnderCoboundaryShift) {
  oracle::Rng rng(47);
  const auto& calc = diamond_calc();
  CochainScheme s1{1, Coefficients::adjoint, 4};
  for (int n = 0; n < 6; ++n) {
    Cochain g1 = rng.cochain(s1, 0.5);
    Cochain shift = apply_leibniz_coboundary(diamond(), g1);
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) {
        Verdict v0 = bracket_verdict(a, b);
        Verdict v1 = calc.classify3(bracket(phis()[a] + shift, phis()[b])).verdict;
        EXPECT_EQ(v0 == Verdict::nontrivial, v1 == Verdict::nontrivial) << a << "," << b;
      }
  }
}

TEST(Classify, ZeroVerdictMatchesSymbolicCoefficient) {
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      Deformation def = Deformation::first_order(diamond(), {"s", "t"}, {phis()[a], phis()[b]});
      Cochain coeff(CochainScheme{3, Coefficients::adjoint, 4});
      for (const auto& pd : symbolic_defect(def)) coeff.at(pd.k, {pd.i, pd.j, pd.l}) = pd.value.coefficient(mono("s*t"));
      Cochain br = bracket(phis()[a], phis()[b]);
      EXPECT_EQ(coeff, br);
      EXPECT_EQ(coeff.is_zero(), bracket_verdict(a, b) == Verdict::zero);
    }
}

TEST(Extend, Phi3LineIsFlat) {
  Deformation def = Deformation::first_order(diamond(), {"t"}, {phis()[P3]});
  EXPECT_TRUE(symbolic_defect(def).empty());
  ExtensionResult r = extend_order(def);
  EXPECT_TRUE(r.extended);
  EXPECT_EQ(r.classes.at(mono("t^2")).verdict, Verdict::zero);
  EXPECT_EQ(r.deformation.terms.size(), 2u);
  // The line is d(λ,μ) at λ = 1, μ = −1 + t.
  ParamAlgebra dlm = families::d_lambda_mu();
  for (long t : {-2L, 1L, 5L}) {
    AlgebraSpec expect = specialize(dlm, {{"lambda", Scalar(1)}, {"mu", Scalar(t - 1)}});
    AlgebraSpec got = algebra_from_cochain(bracket_cochain(diamond()) + Scalar(t) * phis()[P3], diamond());
    EXPECT_EQ(got, expect) << t;
  }
}

TEST(Extend, Phi11IsObstructedAtOrderTwo) {
  Deformation def = Deformation::first_order(diamond(), {"t"}, {phis()[P11]});
  ExtensionResult r = extend_order(def);
  EXPECT_FALSE(r.extended);
  EXPECT_EQ(r.classes.at(mono("t^2")).verdict, Verdict::nontrivial);
  EXPECT_EQ(r.deformation.max_order, 1u);
}

TEST(Extend, Phi14MatchesFamilyTable) {
  Deformation def = Deformation::first_order(diamond(), {"t"}, {phis()[P14]});
  ExtensionResult r = extend_order(def);
  ASSERT_TRUE(r.extended);
  EXPECT_EQ(r.classes.at(mono("t^2")).verdict, Verdict::zero);
  ParamAlgebra got = r.deformation.to_param_algebra();
  ParamAlgebra expect = families::diamond_phi14();
  EXPECT_EQ(got.tensor(), expect.tensor());
  EXPECT_TRUE(symbolic_defect(r.deformation).empty());
}

TEST(Extend, ObstructionCochainFormula) {
  // χ at s*t is the bracket when the only lower terms are the generators.
  Deformation def = Deformation::first_order(diamond(), {"s", "t"}, {phis()[P7], phis()[P11]});
  EXPECT_EQ(obstruction_cochain(def.terms, mono("s*t"), 4), bracket(phis()[P7], phis()[P11]));
  EXPECT_EQ(obstruction_cochain(def.terms, mono("t^2"), 4), leibcoh::comp(phis()[P11], phis()[P11]));
  ExtensionResult r = extend_order(Deformation::first_order(diamond(), {"s"}, {phis()[P7]}));
  ASSERT_TRUE(r.extended);
  // Each new term solves δψ_m = χ_m, so the order-2 defect vanishes.
  for (const auto& pd : symbolic_defect(r.deformation)) EXPECT_GE(pd.value.degree(), 3u);
}

TEST(Massey, DiamondLedgerRegression) {
  MasseyLedger ledger = massey_products(diamond(), phis(), 3, {"t", "s", "u", "w"});
  auto verdict = [&](const char* m) {
    const MasseyEntry* e = ledger.find(mono(m));
    return e == nullptr ? Verdict::undefined : e->cls.verdict;
  };
  EXPECT_EQ(verdict("t^2"), Verdict::zero);
  EXPECT_EQ(verdict("s^2"), Verdict::zero);
  EXPECT_EQ(verdict("w^2"), Verdict::zero);
  EXPECT_EQ(verdict("u^2"), Verdict::nontrivial);
  EXPECT_EQ(verdict("t*u"), Verdict::nontrivial);
  EXPECT_EQ(verdict("t*w"), Verdict::nontrivial);
  EXPECT_EQ(verdict("u*w"), Verdict::nontrivial);
  EXPECT_EQ(verdict("s*u"), Verdict::coboundary);
  EXPECT_EQ(verdict("s*w"), Verdict::coboundary);
  EXPECT_EQ(verdict("s*t"), Verdict::nontrivial);
  EXPECT_EQ(verdict("s^2*u"), Verdict::nontrivial);
  EXPECT_TRUE(ledger.find(mono("s^2*u"))->cls.nontrivial_mod_indeterminacy);
  EXPECT_EQ(verdict("s^2*w"), Verdict::coboundary);
  EXPECT_EQ(verdict("s*w^2"), Verdict::zero);
  EXPECT_EQ(verdict("s*t^2"), Verdict::undefined);
  EXPECT_EQ(verdict("s^2*t"), Verdict::undefined);
  // Ledger bookkeeping: every entry is present once, undefined ones have an
  // obstructed divisor, and every term solves its obstruction equation.
  EXPECT_EQ(ledger.entries.size(), 10u + 20u);
  for (const auto& e : ledger.entries) {
    bool divisible = false;
    for (const auto& o : ledger.obstructed) divisible = divisible || (o.divides(e.monomial) && !(o == e.monomial));
    EXPECT_EQ(e.cls.verdict == Verdict::undefined, divisible) << e.monomial.to_string();
    if (e.cls.witness && e.cls.verdict != Verdict::zero)
      EXPECT_EQ(apply_leibniz_coboundary(diamond(), *e.cls.witness), e.cls.cochain);
  }
}

TEST(Massey, RejectsNonCocycles) {
  Cochain bad(CochainScheme{2, Coefficients::adjoint, 4});
  bad.at(0, {0, 0}) = 1;
  EXPECT_FALSE(apply_leibniz_coboundary(diamond(), bad).is_zero());
  EXPECT_THROW((void)massey_products(diamond(), {bad}, 2), Error);
}

TEST(Versal, BaseAndReferenceIdeal) {
  ParamAlgebra base(diamond());
  EXPECT_TRUE(verify_versal(base, {}).ok);

  ParamAlgebra versal = families::diamond_versal();
  VersalCheck empty = verify_versal(versal, {});
  EXPECT_FALSE(empty.ok);
  EXPECT_FALSE(empty.violating.empty());

  std::vector<Polynomial> ideal;
  for (const char* m : {"t*u", "t*w", "u*w", "t^2*s", "t*s^2*u", "t*s^2*w", "s^2*u*w", "s^2*w^2"})
    ideal.push_back(Polynomial::parse(m));
  VersalCheck pub = verify_versal(versal, ideal);
  // Regression: the versal table leaves these monomials outside the ideal
  // (README, "Known discrepancies").
  std::vector<Monomial> expect = {mono("s*t"), mono("s*u"), mono("s*w"), mono("u^2")};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(pub.violating, expect);
  EXPECT_FALSE(pub.ok);

  EXPECT_THROW((void)verify_versal(versal, {Polynomial::parse("t + s")}), NonMonomialGenerator);
}

TEST(Versal, ExtendedDeformationIsVersalModuloObstructions) {
  // The defect of the order-2 extension along φ7 and φ14 lies in degree >= 3.
  Deformation def = Deformation::first_order(diamond(), {"s", "w"}, {phis()[P7], phis()[P14]});
  ExtensionResult r = extend_order(def);
  ASSERT_TRUE(r.extended);
  std::vector<Polynomial> cubes;
  for (const auto& m : Monomial::of_degree({"s", "w"}, 3)) cubes.emplace_back(m);
  EXPECT_TRUE(verify_versal(r.deformation, cubes).ok);
}
