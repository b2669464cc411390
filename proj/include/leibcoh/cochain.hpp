#ifndef LEIBCOH_COCHAIN_HPP
#define LEIBCOH_COCHAIN_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/error.hpp"
#include "leibcoh/linalg.hpp"

namespace leibcoh {

enum class Coefficients { adjoint, trivial };

inline const char* to_string(Coefficients c) { return c == Coefficients::adjoint ? "adjoint" : "trivial"; }

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Coordinates on CL^n(g,g) = Hom(g^{⊗n}, g) or CL^n(g,K).
///
/// The component "coefficient of e_k in psi(e_{i1},...,e_{in})" sits at
/// k*d^n + i1*d^{n-1} + ... + in: input slots big-endian, output index
/// outermost. Trivial coefficients drop the k term.
struct CochainScheme {
  std::size_t degree = 0;
  Coefficients coeff = Coefficients::adjoint;
  std::size_t algebra_dim = 0;

  [[nodiscard]] std::size_t slot_count() const { return ipow(algebra_dim, degree); }
  [[nodiscard]] std::size_t outputs() const { return coeff == Coefficients::adjoint ? algebra_dim : 1; }
  [[nodiscard]] std::size_t total_dim() const { return outputs() * slot_count(); }

  [[nodiscard]] std::size_t slot_index(std::span<const std::size_t> slots) const {
    std::size_t idx = 0;
    for (std::size_t s : slots) idx = idx * algebra_dim + s;
    return idx;
  }
  [[nodiscard]] std::size_t index(std::size_t k, std::span<const std::size_t> slots) const {
    return (coeff == Coefficients::adjoint ? k * slot_count() : 0) + slot_index(slots);
  }
  /// Inverse of index(): returns k and fills slots.
  std::size_t decode(std::size_t idx, std::vector<std::size_t>& slots) const {
    const std::size_t sc = slot_count();
    std::size_t k = coeff == Coefficients::adjoint ? idx / sc : 0;
    std::size_t rest = idx % sc;
    slots.assign(degree, 0);
    for (std::size_t p = degree; p-- > 0;) {
      slots[p] = rest % algebra_dim;
      rest /= algebra_dim;
    }
    return k;
  }

  friend bool operator==(const CochainScheme&, const CochainScheme&) = default;
};

/// A cochain: coordinates under a CochainScheme.
class Cochain {
public:
  Cochain() = default;
  explicit Cochain(CochainScheme s) : scheme_(s), coords_(s.total_dim()) {}
  Cochain(CochainScheme s, Vector coords) : scheme_(s), coords_(std::move(coords)) {
    if (coords_.size() != scheme_.total_dim()) throw DimensionMismatch("cochain coordinate count mismatch");
  }

  [[nodiscard]] const CochainScheme& scheme() const { return scheme_; }
  [[nodiscard]] const Vector& coords() const { return coords_; }
  Vector& coords() { return coords_; }

  [[nodiscard]] const Scalar& at(std::size_t k, std::span<const std::size_t> slots) const {
    return coords_[scheme_.index(k, slots)];
  }
  Scalar& at(std::size_t k, std::span<const std::size_t> slots) { return coords_[scheme_.index(k, slots)]; }
  const Scalar& at(std::size_t k, std::initializer_list<std::size_t> slots) const {
    return at(k, std::span<const std::size_t>(slots.begin(), slots.size()));
  }
  Scalar& at(std::size_t k, std::initializer_list<std::size_t> slots) {
    return at(k, std::span<const std::size_t>(slots.begin(), slots.size()));
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  Cochain& operator+=(const Cochain& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i];
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (!o.coords_[i].is_zero()) coords_[i] -= o.coords_[i];
    return *this;
  }
  Cochain& operator*=(const Scalar& s) {
    for (auto& x : coords_)
      if (!x.is_zero()) x *= s;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b) { return a.scheme_ == b.scheme_ && a.coords_ == b.coords_; }

private:
  void check(const Cochain& o) const {
    if (!(scheme_ == o.scheme_)) throw DimensionMismatch("cochain schemes differ");
  }
  CochainScheme scheme_;
  Vector coords_;
};

/// Lexicographic basis of strictly increasing index tuples, i.e. the
/// wedge basis ω^{i1,...,in} (i1 < ... < in) of Λ^n g*.
class WedgeBasis {
public:
  WedgeBasis(std::size_t d, std::size_t n) : d_(d), n_(n) {
    std::vector<std::size_t> cur(n);
    enumerate(cur, 0, 0);
  }
  [[nodiscard]] std::size_t size() const { return tuples_.size(); }
  [[nodiscard]] std::size_t degree() const { return n_; }
  [[nodiscard]] const std::vector<std::size_t>& tuple(std::size_t r) const { return tuples_[r]; }
  /// Rank of a strictly increasing tuple.
  [[nodiscard]] std::size_t rank(std::span<const std::size_t> t) const {
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t, [](const std::vector<std::size_t>& a, auto b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return static_cast<std::size_t>(it - tuples_.begin());
  }

private:
  void enumerate(std::vector<std::size_t>& cur, std::size_t pos, std::size_t start) {
    if (pos == n_) {
      tuples_.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < d_; ++i) {
      cur[pos] = i;
      enumerate(cur, pos + 1, i + 1);
    }
  }
  std::size_t d_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> tuples_;
};

/// Coordinates on the antisymmetric subcomplex C^n(g,g) = g ⊗ Λ^n g*
/// (or Λ^n g*): index k*C(d,n) + rank(i1<...<in).
struct WedgeScheme {
  WedgeScheme(std::size_t d, std::size_t n, Coefficients c) : basis(d, n), coeff(c), algebra_dim(d) {}
  WedgeBasis basis;
  Coefficients coeff;
  std::size_t algebra_dim;

  [[nodiscard]] std::size_t outputs() const { return coeff == Coefficients::adjoint ? algebra_dim : 1; }
  [[nodiscard]] std::size_t total_dim() const { return outputs() * basis.size(); }
  [[nodiscard]] std::size_t index(std::size_t k, std::size_t rank) const {
    return (coeff == Coefficients::adjoint ? k * basis.size() : 0) + rank;
  }
};

/// Sorts `t` in place; returns the permutation sign, or 0 on a repeated index.
inline int sort_with_sign(std::vector<std::size_t>& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

/// The alternating tensor of a wedge-coordinate vector: ω^{i1..in} becomes
/// Σ_σ sign(σ) ω^{iσ1}⊗...⊗ω^{iσn} (determinant convention, no 1/n!).
inline Cochain wedge_to_tensor(const WedgeScheme& w, std::span<const Scalar> v) {
  CochainScheme s{w.basis.degree(), w.coeff, w.algebra_dim};
  Cochain out(s);
  const std::size_t n = w.basis.degree();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < w.outputs(); ++k)
    for (std::size_t r = 0; r < w.basis.size(); ++r) {
      const Scalar& x = v[w.index(k, r)];
      if (x.is_zero()) continue;
      std::iota(perm.begin(), perm.end(), 0);
      const auto& t = w.basis.tuple(r);
      do {
        std::vector<std::size_t> slots(n);
        for (std::size_t p = 0; p < n; ++p) slots[p] = t[perm[p]];
        std::vector<std::size_t> tmp = perm;
        int sign = sort_with_sign(tmp);
        out.at(k, slots) += sign > 0 ? x : -x;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return out;
}

/// Reads an (antisymmetric) tensor cochain at the increasing tuples.
inline Vector tensor_to_wedge(const WedgeScheme& w, const Cochain& c) {
  Vector v(w.total_dim());
  for (std::size_t k = 0; k < w.outputs(); ++k)
    for (std::size_t r = 0; r < w.basis.size(); ++r) v[w.index(k, r)] = c.at(k, w.basis.tuple(r));
  return v;
}

inline bool is_antisymmetric(const Cochain& c) {
  const auto& s = c.scheme();
  std::vector<std::size_t> slots;
  for (std::size_t idx = 0; idx < s.total_dim(); ++idx) {
    std::size_t k = s.decode(idx, slots);
    for (std::size_t a = 0; a + 1 < slots.size(); ++a) {
      std::swap(slots[a], slots[a + 1]);
      const Scalar& other = c.at(k, slots);
      std::swap(slots[a], slots[a + 1]);
      if (c.coords()[idx] != -other) return false;
    }
  }
  return true;
}

/// Leibniz coboundary δ: CL^n -> CL^{n+1}.
///
///   (δψ)(X1..X_{n+1}) = [X1, ψ(X2..)] + Σ_{i≥2} (-1)^i [ψ(..X̂i..), Xi]
///                       + Σ_{i<j} (-1)^{j+1} ψ(.., [Xi,Xj] at i, .., X̂j, ..)
///
/// Trivial coefficients keep only the last sum. Every consumer (matrix
/// assembly, matrix-free application, the wedge subcomplex) goes through
/// terms(), so the three agree by construction.
class Coboundary {
public:
  Coboundary(const AlgebraSpec& g, std::size_t degree, Coefficients coeff)
      : table_(g), d_(g.dim()), n_(degree), coeff_(coeff) {}

  [[nodiscard]] CochainScheme source() const { return {n_, coeff_, d_}; }
  [[nodiscard]] CochainScheme target() const { return {n_ + 1, coeff_, d_}; }

  /// Calls emit(k_out, k_in, in_slots, coefficient) for every term of
  /// (δψ)(out)_{k_out} = Σ coefficient * ψ(in_slots)_{k_in}.
  template <class Emit>
  void terms(std::span<const std::size_t> out, Emit&& emit) const {
    std::vector<std::size_t> in(n_);
    if (coeff_ == Coefficients::adjoint) {
      std::copy(out.begin() + 1, out.end(), in.begin());
      for (std::size_t m = 0; m < d_; ++m)
        for (const auto& [k, c] : table_(out[0], m)) emit(k, m, std::span<const std::size_t>(in), c);
      for (std::size_t s = 1; s <= n_; ++s) {
        fill_without(out, s, in);
        const bool neg = (s + 1) % 2 == 1;
        for (std::size_t m = 0; m < d_; ++m)
          for (const auto& [k, c] : table_(m, out[s])) emit(k, m, std::span<const std::size_t>(in), neg ? -c : c);
      }
    }
    for (std::size_t a = 0; a <= n_; ++a)
      for (std::size_t b = a + 1; b <= n_; ++b) {
        const auto& br = table_(out[a], out[b]);
        if (br.empty()) continue;
        const bool neg = b % 2 == 1;
        fill_without(out, b, in);
        for (const auto& [m, c] : br) {
          in[a] = m;
          Scalar coef = neg ? -c : c;
          if (coeff_ == Coefficients::adjoint) {
            for (std::size_t k = 0; k < d_; ++k) emit(k, k, std::span<const std::size_t>(in), coef);
          } else {
            emit(0, 0, std::span<const std::size_t>(in), coef);
          }
        }
      }
  }

  /// Matrix-free application.
  [[nodiscard]] Cochain apply(const Cochain& psi) const {
    if (!(psi.scheme() == source())) throw DimensionMismatch("coboundary: cochain has the wrong scheme");
    const CochainScheme src = source();
    const CochainScheme tgt = target();
    Cochain out(tgt);
    std::vector<std::size_t> tuple(n_ + 1, 0);
    const std::size_t count = tgt.slot_count();
    for (std::size_t t = 0; t < count; ++t) {
      decode_slots(t, tuple);
      terms(tuple, [&](std::size_t ko, std::size_t ki, std::span<const std::size_t> in, const Scalar& c) {
        const Scalar& v = psi.coords()[src.index(ki, in)];
        if (!v.is_zero()) out.at(ko, tuple) += c * v;
      });
    }
    return out;
  }

  /// Materialized operator in tensor coordinates (rows: target, cols: source).
  [[nodiscard]] SparseMatrix matrix(unsigned threads = 1) const {
    const CochainScheme src = source();
    const CochainScheme tgt = target();
    SparseMatrix m(tgt.total_dim(), src.total_dim());
    const std::size_t count = tgt.slot_count();
    auto work = [&](std::size_t begin, std::size_t end) {
      std::vector<std::size_t> tuple(n_ + 1, 0);
      std::vector<SparseRow> acc(tgt.outputs());
      for (std::size_t t = begin; t < end; ++t) {
        decode_slots(t, tuple);
        terms(tuple, [&](std::size_t ko, std::size_t ki, std::span<const std::size_t> in, const Scalar& c) {
          acc[ko].emplace_back(src.index(ki, in), c);
        });
        for (std::size_t k = 0; k < acc.size(); ++k) {
          m.row(tgt.index(k, tuple)) = consolidate(acc[k]);
          acc[k].clear();
        }
      }
    };
    run_chunked(count, threads, work);
    return m;
  }

  /// The operator restricted to the antisymmetric subcomplex, in wedge
  /// coordinates. Valid for Lie algebras, where δ preserves alternation.
  [[nodiscard]] SparseMatrix lie_matrix() const {
    WedgeScheme src(d_, n_, coeff_);
    WedgeScheme tgt(d_, n_ + 1, coeff_);
    SparseMatrix m(tgt.total_dim(), src.total_dim());
    std::vector<SparseRow> acc(tgt.outputs());
    std::vector<std::size_t> sorted;
    for (std::size_t r = 0; r < tgt.basis.size(); ++r) {
      const auto& tuple = tgt.basis.tuple(r);
      terms(tuple, [&](std::size_t ko, std::size_t ki, std::span<const std::size_t> in, const Scalar& c) {
        sorted.assign(in.begin(), in.end());
        int sign = sort_with_sign(sorted);
        if (sign == 0) return;
        acc[ko].emplace_back(src.index(ki, src.basis.rank(sorted)), sign > 0 ? c : -c);
      });
      for (std::size_t k = 0; k < acc.size(); ++k) {
        m.row(tgt.index(k, r)) = consolidate(acc[k]);
        acc[k].clear();
      }
    }
    return m;
  }

private:
  void decode_slots(std::size_t t, std::vector<std::size_t>& tuple) const {
    for (std::size_t p = tuple.size(); p-- > 0;) {
      tuple[p] = t % d_;
      t /= d_;
    }
  }
  static void fill_without(std::span<const std::size_t> out, std::size_t skip, std::vector<std::size_t>& in) {
    std::size_t w = 0;
    for (std::size_t p = 0; p < out.size(); ++p)
      if (p != skip) in[w++] = out[p];
  }
  static SparseRow consolidate(SparseRow& r) {
    std::stable_sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& e : r) {
      if (!out.empty() && out.back().first == e.first) {
        out.back().second += e.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(e));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    return out;
  }
  template <class F>
  static void run_chunked(std::size_t count, unsigned threads, F& work) {
    if (threads <= 1 || count < 64) {
      work(std::size_t{0}, count);
      return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t b = 0; b < count; b += chunk) pool.emplace_back(work, b, std::min(count, b + chunk));
    for (auto& t : pool) t.join();
  }

  BracketTable table_;
  std::size_t d_;
  std::size_t n_;
  Coefficients coeff_;
};

inline SparseMatrix leibniz_coboundary_matrix(const AlgebraSpec& g, std::size_t degree, Coefficients coeff,
                                              unsigned threads = 1) {
  if (degree > 4) throw UnsupportedDegree("coboundary matrices are materialized for degree <= 4 only");
  return Coboundary(g, degree, coeff).matrix(threads);
}

inline Cochain apply_leibniz_coboundary(const AlgebraSpec& g, const Cochain& psi) {
  if (psi.scheme().degree > 5) throw UnsupportedDegree("matrix-free coboundary supports degree <= 5");
  return Coboundary(g, psi.scheme().degree, psi.scheme().coeff).apply(psi);
}

/// ψ = ψ1 + ψ0 with ψ1 alternating and ψ0 symmetric.
inline std::pair<Cochain, Cochain> split_degree2(const Cochain& psi) {
  const auto& s = psi.scheme();
  if (s.degree != 2) throw UnsupportedDegree("split_degree2 needs a 2-cochain");
  Cochain anti(s);
  Cochain sym(s);
  const Scalar half = Scalar::rational(1, 2);
  for (std::size_t k = 0; k < s.outputs(); ++k)
    for (std::size_t i = 0; i < s.algebra_dim; ++i)
      for (std::size_t j = 0; j < s.algebra_dim; ++j) {
        const Scalar& a = psi.at(k, {i, j});
        const Scalar& b = psi.at(k, {j, i});
        anti.at(k, {i, j}) = half * (a - b);
        sym.at(k, {i, j}) = half * (a + b);
      }
  return {anti, sym};
}

/// Symmetric 2-cochains ψ(x,y) = ψ(y,x), as a subspace of CL^2.
inline Subspace symmetric_cochains(std::size_t d, Coefficients coeff) {
  CochainScheme s{2, coeff, d};
  std::vector<SparseRow> rows;
  for (std::size_t k = 0; k < s.outputs(); ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        SparseRow r;
        r.emplace_back(s.index(k, std::vector<std::size_t>{i, j}), Scalar(1));
        if (i != j) r.emplace_back(s.index(k, std::vector<std::size_t>{j, i}), Scalar(1));
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(r));
      }
  return Subspace::span_sparse(s.total_dim(), rows);
}

/// Maps a subspace given in wedge coordinates into tensor coordinates.
inline Subspace wedge_subspace_to_tensor(const WedgeScheme& w, const Subspace& sub) {
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < sub.dim(); ++i) rows.push_back(to_sparse(wedge_to_tensor(w, sub.basis().row(i)).coords()));
  CochainScheme s{w.basis.degree(), w.coeff, w.algebra_dim};
  return Subspace::span_sparse(s.total_dim(), rows);
}

enum class Complex { lie, leibniz };

inline const char* to_string(Complex c) { return c == Complex::lie ? "lie" : "leibniz"; }

struct CohomologyOptions {
  /// Largest algebra dimension for which the full-tensor δ: CL^3 -> CL^4 is
  /// materialized.
  std::size_t max_dim_degree3 = 5;
  unsigned threads = 1;
};

/// Cocycles, coboundaries and class representatives in one degree.
///
/// Leibniz spaces live in tensor coordinates (CochainScheme); Lie spaces in
/// wedge coordinates (WedgeScheme). Representatives are always tensor cochains.
struct Cohomology {
  Complex complex = Complex::leibniz;
  Coefficients coeff = Coefficients::adjoint;
  std::size_t degree = 0;
  Subspace cocycles;
  Subspace coboundaries;
  std::vector<Cochain> representatives;

  [[nodiscard]] std::size_t z_dim() const { return cocycles.dim(); }
  [[nodiscard]] std::size_t b_dim() const { return coboundaries.dim(); }
  [[nodiscard]] std::size_t h_dim() const { return cocycles.dim() - coboundaries.dim(); }
};

inline Cohomology cohomology(const AlgebraSpec& g, Coefficients coeff, std::size_t degree, Complex complex,
                             const CohomologyOptions& opt = {}) {
  if (degree < 1 || degree > 3) throw UnsupportedDegree("cohomology is computed in degrees 1..3");
  Cohomology h;
  h.complex = complex;
  h.coeff = coeff;
  h.degree = degree;
  const std::size_t d = g.dim();
  if (complex == Complex::leibniz) {
    if (degree == 3 && d > opt.max_dim_degree3)
      throw UnsupportedDegree("degree-3 Leibniz cohomology materializes CL^3 -> CL^4; dimension " +
                              std::to_string(d) + " exceeds the cap of " + std::to_string(opt.max_dim_degree3));
    h.cocycles = kernel(Coboundary(g, degree, coeff).matrix(opt.threads));
    h.coboundaries = image(Coboundary(g, degree - 1, coeff).matrix(opt.threads));
    CochainScheme s{degree, coeff, d};
    for (auto& v : quotient_reps(h.cocycles, h.coboundaries)) h.representatives.emplace_back(s, std::move(v));
  } else {
    WedgeScheme w(d, degree, coeff);
    h.cocycles = kernel(Coboundary(g, degree, coeff).lie_matrix());
    h.coboundaries = image(Coboundary(g, degree - 1, coeff).lie_matrix());
    for (auto& v : quotient_reps(h.cocycles, h.coboundaries)) h.representatives.push_back(wedge_to_tensor(w, v));
  }
  return h;
}

/// Chevalley-Eilenberg spaces. Z²/B² are given in tensor coordinates so
/// they compare directly with the Leibniz spaces; Z³/B³ stay in wedge
/// coordinates (g ⊗ Λ³g* or Λ³g*).
struct LieSpaces {
  Subspace z2;
  Subspace b2;
  std::vector<Cochain> h2_reps;
  Subspace z3;
  Subspace b3;
};

inline LieSpaces lie_spaces(const AlgebraSpec& g, Coefficients coeff) {
  const std::size_t d = g.dim();
  Cohomology h2 = cohomology(g, coeff, 2, Complex::lie);
  WedgeScheme w2(d, 2, coeff);
  LieSpaces out;
  out.z2 = wedge_subspace_to_tensor(w2, h2.cocycles);
  out.b2 = wedge_subspace_to_tensor(w2, h2.coboundaries);
  out.h2_reps = std::move(h2.representatives);
  out.z3 = kernel(Coboundary(g, 3, coeff).lie_matrix());
  out.b3 = image(Coboundary(g, 2, coeff).lie_matrix());
  return out;
}

struct LeibnizSpaces {
  Subspace zl2;
  Subspace bl2;
  Subspace zl2_sym;  ///< symmetric Leibniz 2-cocycles, ZL²₀
  std::vector<Cochain> hl2_reps;
};

inline LeibnizSpaces leibniz_spaces(const AlgebraSpec& g, Coefficients coeff, unsigned threads = 1) {
  Cohomology h = cohomology(g, coeff, 2, Complex::leibniz, {5, threads});
  LeibnizSpaces out;
  out.zl2 = std::move(h.cocycles);
  out.bl2 = std::move(h.coboundaries);
  out.hl2_reps = std::move(h.representatives);
  out.zl2_sym = intersect(out.zl2, symmetric_cochains(g.dim(), coeff));
  return out;
}

/// The structure constants of g as an adjoint 2-cochain μ(e_i,e_j) = [e_i,e_j].
inline Cochain bracket_cochain(const AlgebraSpec& g) {
  CochainScheme s{2, Coefficients::adjoint, g.dim()};
  Cochain mu(s);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) mu.at(k, {i, j}) = g.c(i, j, k);
  return mu;
}

inline AlgebraSpec algebra_from_cochain(const Cochain& mu, const AlgebraSpec& like) {
  AlgebraSpec g(like.dim(), like.kind(), like.basis_names());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) g.c(i, j, k) = mu.at(k, {i, j});
  return g;
}

}  // namespace leibcoh

#endif
