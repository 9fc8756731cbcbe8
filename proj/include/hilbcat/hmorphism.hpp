#pragma once

// Morphisms between Hilbert modules: a matrix plus its domain and
// codomain objects. The dagger is the Gram-twisted conjugate transpose.

#include <utility>

#include "hilbcat/hobject.hpp"

namespace hilbcat {

class HMorphism {
 public:
  HMorphism(HObject dom, HObject cod, Matrix mat)
      : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(mat)) {
    if (dom_.ring() != cod_.ring()) throw error("ring mismatch");
    if (mat_.rows() != cod_.dim() || mat_.cols() != dom_.dim())
      throw error("morphism matrix shape mismatch");
  }

  const HObject& dom() const { return dom_; }
  const HObject& cod() const { return cod_; }
  const Matrix& mat() const { return mat_; }
  const ScalarRing& ring() const { return dom_.ring(); }

  friend bool operator==(const HMorphism& f, const HMorphism& g) {
    return f.dom_ == g.dom_ && f.cod_ == g.cod_ && f.mat_ == g.mat_;
  }
  friend bool operator!=(const HMorphism& f, const HMorphism& g) {
    return !(f == g);
  }

 private:
  HObject dom_, cod_;
  Matrix mat_;
};

inline HMorphism identity(const HObject& x) {
  return HMorphism(x, x, Matrix::identity(x.ring(), x.dim()));
}

inline HMorphism zero_morphism(const HObject& x, const HObject& y) {
  return HMorphism(x, y, Matrix(x.ring(), y.dim(), x.dim()));
}

inline HMorphism compose(const HMorphism& g, const HMorphism& f) {
  if (f.cod() != g.dom()) throw error("objects do not match in composition");
  return HMorphism(f.dom(), g.cod(), g.mat() * f.mat());
}

/// f† = G_dom⁻¹ F‡ᵀ G_cod; satisfies <F x, y> = <x, F† y>.
inline HMorphism dagger(const HMorphism& f) {
  Matrix m = f.dom().gram_inverse() * conj_transpose(f.mat()) * f.cod().gram();
  return HMorphism(f.cod(), f.dom(), std::move(m));
}

/// Synonym matching the adjointable-map vocabulary.
inline HMorphism adjoint(const HMorphism& f) { return dagger(f); }

inline HMorphism add(const HMorphism& f, const HMorphism& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw error("morphisms not parallel");
  return HMorphism(f.dom(), f.cod(), f.mat() + g.mat());
}

inline HMorphism scalar_mul(const Scalar& s, const HMorphism& f) {
  if (s.ring() != f.ring()) throw error("ring mismatch");
  return HMorphism(f.dom(), f.cod(), s * f.mat());
}

inline HMorphism operator-(const HMorphism& f, const HMorphism& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw error("morphisms not parallel");
  return HMorphism(f.dom(), f.cod(), f.mat() - g.mat());
}

// ---- predicates ----

inline bool is_dagger_mono(const HMorphism& m) {
  return compose(dagger(m), m) == identity(m.dom());
}

inline bool is_dagger_epi(const HMorphism& e) {
  return compose(e, dagger(e)) == identity(e.cod());
}

inline bool is_dagger_iso(const HMorphism& f) {
  return is_dagger_mono(f) && is_dagger_epi(f);
}

/// Lemma-style characterization: mono iff the nullspace is trivial.
inline bool is_mono(const HMorphism& f) {
  return nullspace_basis(f.mat()).cols() == 0;
}

inline bool is_epi(const HMorphism& f) { return is_mono(dagger(f)); }

}  // namespace hilbcat
