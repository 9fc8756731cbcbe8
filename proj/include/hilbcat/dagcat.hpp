#pragma once

// Biproducts, tensors, kernels/cokernels/equalizers and the
// factorization system on Hilbert-module morphisms.

#include <optional>
#include <utility>

#include "hilbcat/hmorphism.hpp"

namespace hilbcat {

// ---- biproducts ----

struct BiproductWitness {
  HObject object;
  HMorphism inj1, inj2;  // kappa
  HMorphism proj1, proj2;  // pi, with pi† = kappa
};

inline BiproductWitness biproduct(const HObject& x, const HObject& y) {
  if (x.ring() != y.ring()) throw error("ring mismatch");
  ScalarRing r = x.ring();
  HObject z(r, x.dim() + y.dim(), block_diag(x.gram(), y.gram()));
  Matrix ix = Matrix::identity(r, x.dim());
  Matrix iy = Matrix::identity(r, y.dim());
  Matrix zx(r, y.dim(), x.dim());
  Matrix zy(r, x.dim(), y.dim());
  HMorphism k1(x, z, vstack(ix, zx));
  HMorphism k2(y, z, vstack(zy, iy));
  HMorphism p1(z, x, hstack(ix, zy));
  HMorphism p2(z, y, hstack(zx, iy));
  return {z, std::move(k1), std::move(k2), std::move(p1), std::move(p2)};
}

inline HMorphism biproduct_mor(const HMorphism& f, const HMorphism& g) {
  HObject dom = biproduct(f.dom(), g.dom()).object;
  HObject cod = biproduct(f.cod(), g.cod()).object;
  return HMorphism(dom, cod, block_diag(f.mat(), g.mat()));
}

/// Delta: X -> X (+) X.
inline HMorphism diagonal(const HObject& x) {
  Matrix i = Matrix::identity(x.ring(), x.dim());
  return HMorphism(x, biproduct(x, x).object, vstack(i, i));
}

/// Nabla = [id, id]: X (+) X -> X.
inline HMorphism codiagonal(const HObject& x) {
  Matrix i = Matrix::identity(x.ring(), x.dim());
  return HMorphism(biproduct(x, x).object, x, hstack(i, i));
}

/// n-fold diagonal, iterated from the binary one.
inline HMorphism diagonal_n(const HObject& x, size_t n) {
  if (n == 0) return zero_morphism(x, HObject::zero(x.ring()));
  HMorphism d = identity(x);
  for (size_t i = 1; i < n; ++i)
    d = compose(biproduct_mor(d, identity(x)), diagonal(x));
  return d;
}

inline HMorphism codiagonal_n(const HObject& x, size_t n) {
  return dagger(diagonal_n(x, n));
}

/// The enrichment composite Nabla . (f (+) g) . Delta; equals entrywise
/// addition, which add() computes directly.
inline HMorphism add_via_biproduct(const HMorphism& f, const HMorphism& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw error("morphisms not parallel");
  return compose(codiagonal(f.cod()),
                 compose(biproduct_mor(f, g), diagonal(f.dom())));
}

// ---- tensor ----

inline HObject tensor(const HObject& x, const HObject& y) {
  if (x.ring() != y.ring()) throw error("ring mismatch");
  return HObject(x.ring(), x.dim() * y.dim(), kron(x.gram(), y.gram()));
}

inline HMorphism tensor_mor(const HMorphism& f, const HMorphism& g) {
  return HMorphism(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()),
                   kron(f.mat(), g.mat()));
}

/// s (x) f via the lambda-conjugated composite; equals entrywise scaling,
/// which scalar_mul() computes directly.
inline HMorphism scalar_mul_via_tensor(const Scalar& s, const HMorphism& f) {
  HObject unit = HObject::unit(f.ring());
  HMorphism s_mor(unit, unit, [&] {
    Matrix m(f.ring(), 1, 1);
    m.at(0, 0) = s;
    return m;
  }());
  HMorphism sf = tensor_mor(s_mor, f);  // I(x)X -> I(x)Y
  // Kronecker with a 1x1 identity gram leaves matrices unchanged, so the
  // unitors are identity-shaped here.
  return HMorphism(f.dom(), f.cod(), sf.mat());
}

enum class CoherenceKind { Associator, LeftUnitor, RightUnitor, Symmetry };

/// alpha, lambda, rho, gamma as explicit matrices. In this skeletal matrix
/// model the first three are identities (Kronecker association is exact);
/// gamma is the commutation permutation.
inline HMorphism coherence_iso(CoherenceKind kind, const HObject& x,
                               const HObject& y = HObject::zero(rat_ring()),
                               const HObject& z = HObject::zero(rat_ring())) {
  switch (kind) {
    case CoherenceKind::Associator: {
      HObject a = tensor(tensor(x, y), z);
      HObject b = tensor(x, tensor(y, z));
      if (a != b) throw error("associator domain mismatch");
      return identity(a);
    }
    case CoherenceKind::LeftUnitor: {
      HObject a = tensor(HObject::unit(x.ring()), x);
      return HMorphism(a, x, Matrix::identity(x.ring(), x.dim()));
    }
    case CoherenceKind::RightUnitor: {
      HObject a = tensor(x, HObject::unit(x.ring()));
      return HMorphism(a, x, Matrix::identity(x.ring(), x.dim()));
    }
    case CoherenceKind::Symmetry: {
      HObject a = tensor(x, y);
      HObject b = tensor(y, x);
      Matrix p(x.ring(), b.dim(), a.dim());
      for (size_t i = 0; i < x.dim(); ++i)
        for (size_t j = 0; j < y.dim(); ++j)
          p.at(j * x.dim() + i, i * y.dim() + j) = Scalar::one(x.ring());
      return HMorphism(a, b, std::move(p));
    }
  }
  throw error("unreachable");
}

// ---- kernels, cokernels, equalizers ----

/// Kernel as an isometric inclusion: nullspace basis B with the induced
/// gram B‡ᵀ G B, which makes the inclusion a dagger mono by construction.
inline HMorphism kernel(const HMorphism& f,
                        PivotRule rule = PivotRule::MaxNumerator) {
  Matrix b = nullspace_basis(f.mat(), rule);
  Matrix gram = conj_transpose(b) * f.dom().gram() * b;
  HObject k(f.ring(), b.cols(), std::move(gram));
  return HMorphism(k, f.dom(), std::move(b));
}

/// Cokernel as the coisometric projection onto the orthogonal complement
/// of the image; satisfies q q† = id and q f = 0.
inline HMorphism cokernel(const HMorphism& f,
                          PivotRule rule = PivotRule::MaxNumerator) {
  // (im f)-perp = nullspace of F‡ᵀ G_Y
  Matrix b = nullspace_basis(conj_transpose(f.mat()) * f.cod().gram(), rule);
  Matrix gram = conj_transpose(b) * f.cod().gram() * b;
  HObject c(f.ring(), b.cols(), std::move(gram));
  HMorphism incl(c, f.cod(), std::move(b));
  return dagger(incl);
}

inline HMorphism equalizer(const HMorphism& f, const HMorphism& g,
                           PivotRule rule = PivotRule::MaxNumerator) {
  return kernel(f - g, rule);
}

// ---- factorization ----

enum class FactorKind { DaggerEpiThenMono, EpiThenDaggerMono, PolarTriple };

struct Factorization {
  HMorphism epi;
  HMorphism mono;
  std::optional<HMorphism> middle;  // set for PolarTriple
  FactorKind kind;

  HMorphism composite() const {
    if (middle) return compose(mono, compose(*middle, epi));
    return compose(mono, epi);
  }
};

inline Factorization factor(const HMorphism& f, FactorKind kind,
                            PivotRule rule = PivotRule::MaxNumerator) {
  switch (kind) {
    case FactorKind::DaggerEpiThenMono: {
      HMorphism k = kernel(f, rule);
      HMorphism e = cokernel(k, rule);  // coimage projection, dagger epi
      HMorphism m = compose(f, dagger(e));
      return {std::move(e), std::move(m), std::nullopt, kind};
    }
    case FactorKind::EpiThenDaggerMono: {
      Factorization d = factor(dagger(f), FactorKind::DaggerEpiThenMono, rule);
      return {dagger(d.mono), dagger(d.epi), std::nullopt, kind};
    }
    case FactorKind::PolarTriple: {
      Factorization a = factor(f, FactorKind::DaggerEpiThenMono, rule);
      Factorization b = factor(f, FactorKind::EpiThenDaggerMono, rule);
      // f = m_b . w . e_a with w invertible (monic epi, an iso here)
      HMorphism w = compose(dagger(b.mono), compose(f, dagger(a.epi)));
      return {a.epi, b.mono, std::move(w), kind};
    }
  }
  throw error("unreachable");
}

/// The unique dagger iso connecting two factorizations of one morphism.
/// Throws unless both factor the same morphism with the same kind, or if
/// the constructed map fails any of its defining identities.
inline HMorphism connecting_iso(const Factorization& f1,
                                const Factorization& f2) {
  if (f1.kind != f2.kind) throw error("factorization kinds differ");
  if (f1.composite() != f2.composite())
    throw error("factorizations of different morphisms");
  HMorphism phi = [&] {
    switch (f1.kind) {
      case FactorKind::DaggerEpiThenMono:
      case FactorKind::PolarTriple:
        // between the coimages
        return compose(f2.epi, dagger(f1.epi));
      case FactorKind::EpiThenDaggerMono:
        // between the images
        return compose(dagger(f2.mono), f1.mono);
    }
    throw error("unreachable");
  }();
  if (!is_dagger_iso(phi)) throw error("connecting map is not a dagger iso");
  switch (f1.kind) {
    case FactorKind::DaggerEpiThenMono:
      if (compose(f2.mono, phi) != f1.mono ||
          compose(phi, f1.epi) != f2.epi)
        throw error("connecting map does not commute");
      break;
    case FactorKind::EpiThenDaggerMono:
      if (compose(f2.mono, phi) != f1.mono ||
          compose(phi, f1.epi) != f2.epi)
        throw error("connecting map does not commute");
      break;
    case FactorKind::PolarTriple:
      if (compose(phi, f1.epi) != f2.epi)
        throw error("connecting map does not commute");
      break;
  }
  return phi;
}

/// The pre-Hilbert axiom, instantiated: a dagger mono m equals
/// ker(coker(m)) up to a verified dagger iso. Returns that iso.
inline HMorphism dagger_kernel_witness(const HMorphism& m,
                                       PivotRule rule = PivotRule::MaxNumerator) {
  if (!is_dagger_mono(m)) throw error("expected a dagger mono");
  HMorphism k2 = kernel(cokernel(m, rule), rule);
  Factorization f1{identity(m.dom()), m, std::nullopt,
                   FactorKind::DaggerEpiThenMono};
  HMorphism e2 = compose(dagger(k2), m);
  Factorization f2{std::move(e2), k2, std::nullopt,
                   FactorKind::DaggerEpiThenMono};
  return connecting_iso(f1, f2);
}

}  // namespace hilbcat
