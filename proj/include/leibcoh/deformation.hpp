#ifndef LEIBCOH_DEFORMATION_HPP
#define LEIBCOH_DEFORMATION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/linalg.hpp"
#include "leibcoh/polynomial.hpp"
#include "leibcoh/polyverify.hpp"

namespace leibcoh {

struct NonMonomialGenerator : Error {
  using Error::Error;
};

namespace detail {

inline void require_adjoint2(const Cochain& c, const char* what) {
  if (c.scheme().degree != 2 || c.scheme().coeff != Coefficients::adjoint)
    throw UnsupportedDegree(std::string(what) + ": expected an adjoint 2-cochain");
}

}  // namespace detail

/// comp(φ,ψ)(x,y,z) = φ(ψ(x,y),z) - φ(ψ(x,z),y) - φ(x,ψ(y,z)).
inline Cochain comp(const Cochain& phi, const Cochain& psi) {
  detail::require_adjoint2(phi, "comp");
  detail::require_adjoint2(psi, "comp");
  const std::size_t d = phi.scheme().algebra_dim;
  if (psi.scheme().algebra_dim != d) throw DimensionMismatch("comp: cochains over different algebras");
  Cochain out(CochainScheme{3, Coefficients::adjoint, d});

  // phi_at(m, z, k) = φ(e_m, e_z)^k and friends, read straight from coords.
  auto phi_at = [&](std::size_t a, std::size_t b, std::size_t k) -> const Scalar& { return phi.at(k, {a, b}); };
  auto psi_at = [&](std::size_t a, std::size_t b, std::size_t k) -> const Scalar& { return psi.at(k, {a, b}); };

  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        for (std::size_t m = 0; m < d; ++m) {
          const Scalar& a = psi_at(x, y, m);
          const Scalar& b = psi_at(x, z, m);
          const Scalar& c = psi_at(y, z, m);
          if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
          for (std::size_t k = 0; k < d; ++k) {
            Scalar& o = out.at(k, {x, y, z});
            if (!a.is_zero() && !phi_at(m, z, k).is_zero()) o += a * phi_at(m, z, k);
            if (!b.is_zero() && !phi_at(m, y, k).is_zero()) o -= b * phi_at(m, y, k);
            if (!c.is_zero() && !phi_at(x, m, k).is_zero()) o -= c * phi_at(x, m, k);
          }
        }
  return out;
}

/// Symmetric bracket of 2-cochains: comp(φ,ψ) + comp(ψ,φ).
inline Cochain bracket(const Cochain& phi, const Cochain& psi) { return comp(phi, psi) + comp(psi, phi); }

/// Right Leibniz defect of a bracket μ; zero iff μ is a Leibniz bracket.
inline Cochain defect(const Cochain& mu) { return comp(mu, mu); }

enum class Verdict { zero, coboundary, nontrivial, undefined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::zero: return "zero";
    case Verdict::coboundary: return "coboundary";
    case Verdict::nontrivial: return "nontrivial";
    case Verdict::undefined: return "undefined";
  }
  return "?";
}

struct ObstructionClass {
  Cochain cochain;
  Verdict verdict = Verdict::zero;
  std::optional<Cochain> witness;  ///< ψ with δψ = cochain, for zero/coboundary
  bool is_cocycle = true;
  std::size_t indeterminacy_dim = 0;
  bool nontrivial_mod_indeterminacy = false;
};

/// Classification of degree-3 adjoint cochains against BL³ for one algebra.
/// Holds the factored δ: CL² -> CL³ so repeated queries are cheap.
class ObstructionCalculus {
public:
  explicit ObstructionCalculus(const AlgebraSpec& g)
      : g_(g), delta2_(Coboundary(g, 2, Coefficients::adjoint).matrix()), solver_(delta2_) {}

  [[nodiscard]] const AlgebraSpec& algebra() const { return g_; }

  [[nodiscard]] ObstructionClass classify3(const Cochain& chi) const {
    if (chi.scheme() != CochainScheme{3, Coefficients::adjoint, g_.dim()})
      throw UnsupportedDegree("classify3: expected an adjoint 3-cochain");
    ObstructionClass out;
    out.cochain = chi;
    if (chi.is_zero()) {
      out.verdict = Verdict::zero;
      out.witness = Cochain(CochainScheme{2, Coefficients::adjoint, g_.dim()});
      return out;
    }
    out.is_cocycle = apply_leibniz_coboundary(g_, chi).is_zero();
    auto sol = solver_.solve(chi.coords());
    if (sol) {
      out.verdict = Verdict::coboundary;
      out.witness = Cochain(CochainScheme{2, Coefficients::adjoint, g_.dim()}, std::move(*sol));
    } else {
      out.verdict = Verdict::nontrivial;
      out.nontrivial_mod_indeterminacy = true;
    }
    return out;
  }

  [[nodiscard]] const Subspace& bl3() const {
    if (!bl3_) bl3_ = image(delta2_);
    return *bl3_;
  }
  [[nodiscard]] const Subspace& zl2() const {
    if (!zl2_) zl2_ = kernel(Coboundary(g_, 2, Coefficients::adjoint).matrix());
    return *zl2_;
  }

  /// span{[φ_a, η] : a in `gens`, η in a basis of ZL²} + BL³.
  [[nodiscard]] Subspace indeterminacy(const std::vector<Cochain>& gens) const {
    Echelon e = bl3().echelon();
    CochainScheme s2{2, Coefficients::adjoint, g_.dim()};
    for (const auto& phi : gens)
      for (std::size_t i = 0; i < zl2().dim(); ++i) e.insert(to_sparse(bracket(phi, Cochain(s2, zl2().basis_vector(i))).coords()));
    return Subspace::from_echelon(e);
  }

  /// Fills the indeterminacy fields of a classified class.
  void attach_indeterminacy(ObstructionClass& cls, const std::vector<Cochain>& gens) const {
    Subspace ind = indeterminacy(gens);
    cls.indeterminacy_dim = ind.dim() - bl3().dim();
    cls.nontrivial_mod_indeterminacy = cls.verdict == Verdict::nontrivial && !ind.contains(cls.cochain.coords());
  }

private:
  AlgebraSpec g_;
  SparseMatrix delta2_;
  LinearSolver solver_;
  mutable std::optional<Subspace> bl3_;
  mutable std::optional<Subspace> zl2_;
};

inline ObstructionClass classify3(const AlgebraSpec& g, const Cochain& chi) { return ObstructionCalculus(g).classify3(chi); }

/// μ = Σ_m m·ψ_m over parameter monomials, ψ_1 = μ₀.
struct Deformation {
  AlgebraSpec base;
  std::vector<std::string> params;
  std::map<Monomial, Cochain> terms;
  unsigned max_order = 1;

  /// μ₀ + Σ_a params[a]·gens[a].
  static Deformation first_order(const AlgebraSpec& g, std::vector<std::string> params, const std::vector<Cochain>& gens) {
    if (params.size() != gens.size()) throw DimensionMismatch("one parameter per generator");
    Deformation def;
    def.base = g;
    def.params = std::move(params);
    def.terms.emplace(Monomial(), bracket_cochain(g));
    for (std::size_t a = 0; a < gens.size(); ++a) {
      detail::require_adjoint2(gens[a], "deformation generator");
      if (!gens[a].is_zero()) def.terms.emplace(Monomial(def.params[a]), gens[a]);
    }
    return def;
  }

  [[nodiscard]] Cochain term(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Cochain(CochainScheme{2, Coefficients::adjoint, base.dim()}) : it->second;
  }

  [[nodiscard]] ParamAlgebra to_param_algebra() const {
    ParamAlgebra pa(base.dim(), params, AlgebraKind::leibniz, base.basis_names());
    const std::size_t d = base.dim();
    for (const auto& [m, psi] : terms)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k)
            if (!psi.at(k, {i, j}).is_zero()) pa.c(i, j, k).add_term(m, psi.at(k, {i, j}));
    return pa;
  }
};

/// Sum of comp(ψ_a, ψ_b) over factorizations m = a·b with both degrees >= 1.
/// Monomials absent from `terms` contribute zero.
inline Cochain obstruction_cochain(const std::map<Monomial, Cochain>& terms, const Monomial& m, std::size_t d) {
  Cochain chi(CochainScheme{3, Coefficients::adjoint, d});
  for (const auto& [a, psi_a] : terms) {
    if (a.is_one() || !a.divides(m) || a == m) continue;
    auto it = terms.find(a.cofactor(m));
    if (it == terms.end() || it->first.is_one()) continue;
    chi += comp(psi_a, it->second);
  }
  return chi;
}

struct ExtensionResult {
  bool extended = false;
  Deformation deformation;  ///< with new terms when extended
  std::map<Monomial, ObstructionClass> classes;  ///< every monomial of the new order
};

/// One extension step. The coefficient of m in defect(μ) is -δψ_m + χ_m,
/// so each new term solves δψ_m = χ_m.
inline ExtensionResult extend_order(const Deformation& def, const ObstructionCalculus& calc) {
  ExtensionResult res;
  res.deformation = def;
  const unsigned order = def.max_order + 1;
  const std::size_t d = def.base.dim();
  bool ok = true;
  for (const auto& m : Monomial::of_degree(def.params, order)) {
    ObstructionClass cls = calc.classify3(obstruction_cochain(def.terms, m, d));
    if (cls.verdict == Verdict::nontrivial) ok = false;
    res.classes.emplace(m, std::move(cls));
  }
  if (ok) {
    for (auto& [m, cls] : res.classes)
      if (cls.witness && !cls.witness->is_zero()) res.deformation.terms.emplace(m, *cls.witness);
    res.deformation.max_order = order;
    res.extended = true;
  }
  return res;
}

inline ExtensionResult extend_order(const Deformation& def) { return extend_order(def, ObstructionCalculus(def.base)); }

/// Defect components of the deformation as polynomials in its parameters.
inline std::vector<PolyDefect> symbolic_defect(const Deformation& def) {
  return leibniz_defect_sym(def.to_param_algebra());
}

struct MasseyEntry {
  Monomial monomial;
  std::vector<std::size_t> generators;  ///< generator indices with multiplicity, ascending
  ObstructionClass cls;
};

struct MasseyLedger {
  std::vector<std::string> params;
  std::vector<MasseyEntry> entries;        ///< ordered by monomial
  std::map<Monomial, Cochain> terms;       ///< the extension actually built
  std::vector<Monomial> obstructed;        ///< nontrivial monomials, minimal ones first

  [[nodiscard]] const MasseyEntry* find(const Monomial& m) const {
    for (const auto& e : entries)
      if (e.monomial == m) return &e;
    return nullptr;
  }
};

/// Multi-parameter extension μ₀ + Σ s_a φ_a through `through_order`. The
/// entry at a monomial of degree k records the class of its defect
/// coefficient (raw, no symmetrization factor). A monomial divisible by an
/// obstructed lower monomial is undefined and gets no term.
inline MasseyLedger massey_products(const AlgebraSpec& g, const std::vector<Cochain>& generators,
                                    unsigned through_order, std::vector<std::string> params = {}) {
  if (params.empty())
    for (std::size_t a = 0; a < generators.size(); ++a) params.push_back("s" + std::to_string(a + 1));
  if (params.size() != generators.size()) throw DimensionMismatch("one parameter name per generator");
  const std::size_t d = g.dim();
  ObstructionCalculus calc(g);
  for (std::size_t a = 0; a < generators.size(); ++a) {
    detail::require_adjoint2(generators[a], "Massey generator");
    if (!apply_leibniz_coboundary(g, generators[a]).is_zero())
      throw Error("Massey generator " + std::to_string(a + 1) + " is not a Leibniz 2-cocycle");
  }

  MasseyLedger ledger;
  ledger.params = params;
  ledger.terms.emplace(Monomial(), bracket_cochain(g));
  for (std::size_t a = 0; a < generators.size(); ++a)
    if (!generators[a].is_zero()) ledger.terms.emplace(Monomial(params[a]), generators[a]);

  std::map<std::set<std::size_t>, Subspace> ind_cache;
  for (unsigned order = 2; order <= through_order; ++order) {
    std::vector<std::pair<Monomial, Cochain>> new_terms;
    for (const auto& m : Monomial::of_degree(params, order)) {
      MasseyEntry entry;
      entry.monomial = m;
      std::set<std::size_t> support;
      for (std::size_t a = 0; a < params.size(); ++a)
        for (unsigned e = 0; e < m.exponent(params[a]); ++e) {
          entry.generators.push_back(a);
          support.insert(a);
        }
      bool undefined = false;
      for (const auto& o : ledger.obstructed)
        if (o.divides(m)) {
          undefined = true;
          break;
        }
      if (undefined) {
        entry.cls.verdict = Verdict::undefined;
        entry.cls.cochain = Cochain(CochainScheme{3, Coefficients::adjoint, d});
        ledger.entries.push_back(std::move(entry));
        continue;
      }
      entry.cls = calc.classify3(obstruction_cochain(ledger.terms, m, d));
      // Order-2 classes are plain brackets of the generators and carry no
      // indeterminacy.
      if (order >= 3 && entry.cls.verdict != Verdict::zero) {
        auto it = ind_cache.find(support);
        if (it == ind_cache.end()) {
          std::vector<Cochain> gens;
          for (std::size_t a : support) gens.push_back(generators[a]);
          it = ind_cache.emplace(support, calc.indeterminacy(gens)).first;
        }
        entry.cls.indeterminacy_dim = it->second.dim() - calc.bl3().dim();
        entry.cls.nontrivial_mod_indeterminacy =
            entry.cls.verdict == Verdict::nontrivial && !it->second.contains(entry.cls.cochain.coords());
      }
      if (entry.cls.verdict == Verdict::nontrivial) {
        ledger.obstructed.push_back(m);
      } else if (entry.cls.witness && !entry.cls.witness->is_zero()) {
        new_terms.emplace_back(m, *entry.cls.witness);
      }
      ledger.entries.push_back(std::move(entry));
    }
    for (auto& [m, c] : new_terms) ledger.terms.emplace(m, std::move(c));
  }
  return ledger;
}

struct VersalCheck {
  bool ok = false;
  std::vector<PolyDefect> defect;      ///< all nonzero defect components
  std::vector<Monomial> violating;     ///< defect monomials outside the ideal, sorted
};

/// Checks that every monomial in the symbolic Leibniz defect of `pa` lies in
/// the monomial ideal generated by `ideal`.
inline VersalCheck verify_versal(const ParamAlgebra& pa, const std::vector<Polynomial>& ideal) {
  std::vector<Monomial> gens;
  for (const auto& p : ideal) {
    if (p.terms().size() != 1)
      throw NonMonomialGenerator("ideal generator '" + p.to_string() + "' is not a monomial");
    gens.push_back(p.terms().begin()->first);
  }
  VersalCheck out;
  out.defect = leibniz_defect_sym(pa);
  std::set<Monomial> bad;
  for (const auto& pd : out.defect)
    for (auto& m : outside_monomial_ideal(pd.value, gens)) bad.insert(m);
  out.violating.assign(bad.begin(), bad.end());
  out.ok = out.violating.empty();
  return out;
}

inline VersalCheck verify_versal(const Deformation& def, const std::vector<Polynomial>& ideal) {
  return verify_versal(def.to_param_algebra(), ideal);
}

}  // namespace leibcoh

#endif
