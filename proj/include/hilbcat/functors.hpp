#pragma once

// The embedding chain: the hom functor into modules over the scalars
// (with its Riesz-style witness), extension of scalars along a shipped
// homomorphism, and the boundedness machinery.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbcat/dagcat.hpp"
#include "hilbcat/generator.hpp"
#include "hilbcat/hmorphism.hpp"
#include "hilbcat/semiring_hom.hpp"

namespace hilbcat {

// ---- hom-embedding H(I,-) ----

/// H(S, X) together with the dagger-iso witness pair onto X. In the free
/// matrix model the hom module carries the same gram, so both directions
/// are identity matrices; the constructor verifies the witness equations
/// rather than assuming them.
struct HomModule {
  HObject object;
  HMorphism fwd;  // X -> H(S,X)
  HMorphism bwd;  // H(S,X) -> X, equal to fwd†
};

inline HomModule hom_module(const HObject& x) {
  HObject h = x;  // <f,g> = f† . g(1) reproduces the gram of X
  HMorphism fwd(x, h, Matrix::identity(x.ring(), x.dim()));
  HMorphism bwd(h, x, Matrix::identity(x.ring(), x.dim()));
  if (compose(fwd, bwd) != identity(h) || compose(bwd, fwd) != identity(x) ||
      dagger(fwd) != bwd)
    throw error("hom module witness failed");
  return {std::move(h), std::move(fwd), std::move(bwd)};
}

inline HObject hom_embed(const HObject& x) { return hom_module(x).object; }

/// Morphism map f |-> f . (-); the identity action on matrices.
inline HMorphism hom_embed_mor(const HMorphism& f) {
  return HMorphism(hom_embed(f.dom()), hom_embed(f.cod()), f.mat());
}

/// phi_{X,Y}: H(I,X) (x) H(I,Y) -> H(I, X (x) Y), identity-shaped under
/// this representation; verified to be a dagger iso.
inline HMorphism monoidal_witness(const HObject& x, const HObject& y) {
  HObject lhs = tensor(hom_embed(x), hom_embed(y));
  HObject rhs = hom_embed(tensor(x, y));
  HMorphism phi(lhs, rhs, Matrix::identity(x.ring(), lhs.dim()));
  if (!is_dagger_iso(phi)) throw error("monoidal witness not a dagger iso");
  return phi;
}

// ---- extension of scalars ----

struct ScalarExtension {
  SemiringHom hom;
};

inline Matrix map_entries(const SemiringHom& h, const Matrix& m) {
  Matrix r(h.target, m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = hom_apply(h, m.at(i, j));
  return r;
}

inline HObject extend_object(const ScalarExtension& ext, const HObject& x) {
  if (x.ring() != ext.hom.source) throw error("object not over source ring");
  return HObject(ext.hom.target, x.dim(), map_entries(ext.hom, x.gram()));
}

inline HMorphism extend_mor(const ScalarExtension& ext, const HMorphism& f) {
  return HMorphism(extend_object(ext, f.dom()), extend_object(ext, f.cod()),
                   map_entries(ext.hom, f.mat()));
}

// ---- boundedness ----

struct Bound {
  Scalar value;
};

/// M bounds g iff M‡M G_X - F‡ᵀ G_Y F is positive-semidefinite, which is
/// the pointwise condition x†g†gx <= M†x†xM quantified over all x.
inline bool is_bound(const Bound& m, const HMorphism& g) {
  if (m.value.ring() != g.ring()) throw error("ring mismatch");
  Scalar mm = involute(m.value) * m.value;
  Matrix lhs = mm * g.dom().gram();
  Matrix rhs = conj_transpose(g.mat()) * g.cod().gram() * g.mat();
  return is_positive_semidefinite(lhs - rhs);
}

namespace detail {

/// Rational overestimate of the archimedean absolute value.
inline mpq_class magnitude_bound(const Scalar& s) {
  mpq_class r = abs(s.re());
  if (s.ring().tag == RingTag::GaussRat) r += abs(s.im());
  if (s.ring().tag == RingTag::QuadExt)
    r += abs(s.im()) * s.ring().quad_d;  // sqrt(d) <= d for d >= 1
  return r;
}

}  // namespace detail

/// Some valid bound for g: a Gershgorin-style row-sum estimate on
/// G_X⁻¹ F‡ᵀ G_Y F seeds the search, then rational bisection tightens it
/// for a fixed number of steps. Always exists in finite dimension.
inline Bound find_bound(const HMorphism& g, int bisection_steps = 24) {
  ScalarRing ring = g.ring();
  auto bound_of = [&](const mpq_class& q) { return Bound{Scalar(ring, q)}; };
  if (g.mat().is_zero()) return bound_of(0);

  Matrix b = g.dom().gram_inverse() * conj_transpose(g.mat()) *
             g.cod().gram() * g.mat();
  mpq_class radius = 0;
  for (size_t i = 0; i < b.rows(); ++i) {
    mpq_class row = 0;
    for (size_t j = 0; j < b.cols(); ++j)
      row += detail::magnitude_bound(b.at(i, j));
    if (row > radius) radius = row;
  }
  // M^2 >= spectral radius suffices; take M = max(1, radius)
  mpq_class hi = radius < 1 ? mpq_class(1) : radius;
  while (!is_bound(bound_of(hi), g)) hi *= 2;  // safety; estimate is valid
  mpq_class lo = 0;
  for (int i = 0; i < bisection_steps; ++i) {
    mpq_class mid = (lo + hi) / 2;
    if (is_bound(bound_of(mid), g))
      hi = mid;
    else
      lo = mid;
  }
  return bound_of(hi);
}

/// Lemma-style preservation: a bound for g maps to a bound for the
/// extension of g.
inline bool verify_bound_preserved(const ScalarExtension& ext, const Bound& m,
                                   const HMorphism& g) {
  if (!is_bound(m, g)) throw error("precondition: M does not bound g");
  return is_bound(Bound{hom_apply(ext.hom, m.value)}, extend_mor(ext, g));
}

// ---- non-fullness of extension along N -> Z, at table level ----

/// A small commutative monoid given by its addition table; 0 is neutral.
struct CMonoid {
  std::string name;
  std::vector<std::vector<int>> add;

  size_t size() const { return add.size(); }

  static CMonoid trivial() { return {"trivial", {{0}}}; }
  static CMonoid boolean() { return {"bool", {{0, 1}, {1, 1}}}; }
  /// {0,1,2} with addition saturating at 2.
  static CMonoid saturating3() {
    return {"sat3", {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}};
  }
};

struct NonFullnessReport {
  CMonoid monoid;
  bool witness_found = false;
  /// For each candidate g: X -> X, one (x, x') where (g x, g x') differs
  /// from the swap (x', x); empty entry means the candidate matched.
  std::vector<std::string> candidate_outcomes;
};

/// Reproduces the counterexample: on X ∐ X the swap (x, x') |-> (x', x)
/// has no preimage (g x, g x') among any map g: X -> X once |X| > 1.
/// Exhaustive over all |X|^|X| candidate maps.
inline NonFullnessReport non_fullness_demo(const CMonoid& x) {
  NonFullnessReport rep{x};
  size_t n = x.size();
  std::vector<int> g(n, 0);
  bool any_match = false;
  for (;;) {
    std::optional<std::pair<size_t, size_t>> mismatch;
    for (size_t a = 0; a < n && !mismatch; ++a)
      for (size_t b = 0; b < n; ++b)
        if (g[a] != static_cast<int>(b) || g[b] != static_cast<int>(a)) {
          mismatch = {a, b};
          break;
        }
    std::string desc = "g=[";
    for (size_t i = 0; i < n; ++i)
      desc += std::to_string(g[i]) + (i + 1 < n ? "," : "");
    desc += "]";
    if (mismatch) {
      rep.candidate_outcomes.push_back(
          desc + " differs from swap at (" + std::to_string(mismatch->first) +
          "," + std::to_string(mismatch->second) + ")");
    } else {
      rep.candidate_outcomes.push_back(desc + " matches swap");
      any_match = true;
    }
    size_t i = 0;
    while (i < n && g[i] == static_cast<int>(n) - 1) g[i++] = 0;
    if (i == n) break;
    ++g[i];
  }
  rep.witness_found = !any_match;
  return rep;
}

}  // namespace hilbcat
