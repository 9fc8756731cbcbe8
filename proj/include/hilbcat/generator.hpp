#pragma once

// Deterministic, seeded generation of scalars, positive-definite grams
// and morphisms. mt19937_64 is fully specified by the standard, and all
// bounded draws go through below(), so a fixed seed reproduces the exact
// same instances on every platform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hilbcat/dagcat.hpp"
#include "hilbcat/hmorphism.hpp"
#include "hilbcat/scalar.hpp"

namespace hilbcat {

class InstanceGenerator {
 public:
  explicit InstanceGenerator(uint64_t seed, size_t max_dim = 3,
                             long entry_height = 5)
      : rng_(seed), seed_(seed), max_dim_(max_dim), height_(entry_height) {}

  uint64_t seed() const { return seed_; }
  size_t max_dim() const { return max_dim_; }
  long entry_height() const { return height_; }

  uint64_t u64() { return rng_(); }
  size_t below(size_t n) { return n == 0 ? 0 : rng_() % n; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<size_t>(hi - lo + 1)));
  }
  bool chance(unsigned percent) { return below(100) < percent; }

  mpq_class rational(bool allow_negative = true) {
    long num = allow_negative ? range(-height_, height_) : range(0, height_);
    long den = range(1, height_);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  Scalar scalar(ScalarRing r) {
    switch (r.tag) {
      case RingTag::Nat: return Scalar(r, range(0, height_));
      case RingTag::Bool: return Scalar(r, range(0, 1));
      case RingTag::Int: return Scalar(r, range(-height_, height_));
      case RingTag::Rat: return Scalar(r, rational());
      case RingTag::GaussRat:
      case RingTag::QuadExt: return Scalar(r, rational(), rational());
    }
    throw error("unreachable");
  }

  Scalar nonzero_scalar(ScalarRing r) {
    for (;;) {
      Scalar s = scalar(r);
      if (!s.is_zero()) return s;
    }
  }

  Matrix matrix(ScalarRing r, size_t rows, size_t cols) {
    Matrix m(r, rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = scalar(r);
    return m;
  }

  /// B‡ᵀB + I: exactly positive-definite in every shipped field ring.
  Matrix pd_gram(ScalarRing r, size_t dim) {
    Matrix b = matrix(r, dim, dim);
    return conj_transpose(b) * b + Matrix::identity(r, dim);
  }

  HObject object(ScalarRing r) {
    size_t dim = 1 + below(max_dim_);
    return HObject(r, dim, pd_gram(r, dim));
  }

  HMorphism morphism(const HObject& x, const HObject& y) {
    return HMorphism(x, y, matrix(x.ring(), y.dim(), x.dim()));
  }

  /// Isometric inclusion of a random subspace, dagger mono by construction.
  HMorphism dagger_mono_into(const HObject& y) {
    size_t want = below(y.dim() + 1);
    Matrix cols = matrix(y.ring(), y.dim(), want);
    Matrix basis = column_space_basis(cols);
    Matrix gram = conj_transpose(basis) * y.gram() * basis;
    HObject sub(y.ring(), basis.cols(), std::move(gram));
    return HMorphism(sub, y, std::move(basis));
  }

  /// Biased morphism mix: dense / mono-epi products / rank-deficient /
  /// structured. Uniform random matrices over a field are almost always
  /// invertible, which would starve the kernel and factorization branches.
  HMorphism biased_morphism(ScalarRing r) {
    unsigned roll = static_cast<unsigned>(below(100));
    if (roll < 30) {
      return morphism(object(r), object(r));
    } else if (roll < 60) {
      // dagger epi X ->> T followed by the dagger mono T >-> T (+) Z
      HObject x = object(r);
      HMorphism e = dagger(dagger_mono_into(x));  // X ->> T
      HObject z = object(r);
      return compose(biproduct(e.cod(), z).inj1, e);
    } else if (roll < 80) {
      HObject x = object(r), y = object(r);
      size_t mid = below(std::min(x.dim(), y.dim()) + 1);
      Matrix a = matrix(r, y.dim(), mid);
      Matrix b = matrix(r, mid, x.dim());
      return HMorphism(x, y, a * b);
    } else {
      HObject x = object(r);
      if (chance(50)) {  // diagonal
        Matrix m(r, x.dim(), x.dim());
        for (size_t i = 0; i < x.dim(); ++i) m.at(i, i) = scalar(r);
        return HMorphism(x, x, std::move(m));
      }
      // permutation on the standard object
      HObject s = HObject::standard(r, x.dim());
      std::vector<size_t> perm(x.dim());
      for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      for (size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[below(i)]);
      Matrix m(r, x.dim(), x.dim());
      for (size_t i = 0; i < x.dim(); ++i)
        m.at(perm[i], i) = Scalar::one(r);
      return HMorphism(s, s, std::move(m));
    }
  }

 private:
  std::mt19937_64 rng_;
  uint64_t seed_;
  size_t max_dim_;
  long height_;
};

}  // namespace hilbcat
