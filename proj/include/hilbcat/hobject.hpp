#pragma once

// Finitely generated free Hilbert modules over the field rings: a
// dimension together with a Hermitian positive-definite Gram matrix.
// The zero-dimensional object is the zero object.

#include <utility>

#include "hilbcat/error.hpp"
#include "hilbcat/matrix.hpp"
#include "hilbcat/scalar.hpp"

namespace hilbcat {

class HObject {
 public:
  /// Validates Hermitian-ness and positive-definiteness.
  HObject(ScalarRing ring, size_t dim, Matrix gram)
      : ring_(ring), dim_(dim), gram_(std::move(gram)) {
    if (!ring.is_field()) throw error("Hilbert modules require a field ring");
    if (gram_.ring() != ring || gram_.rows() != dim || gram_.cols() != dim)
      throw error("gram shape mismatch");
    if (!is_hermitian(gram_)) throw error("gram not Hermitian");
    if (!is_positive_definite(gram_)) throw error("gram not positive-definite");
  }

  static HObject standard(ScalarRing ring, size_t dim) {
    return HObject(ring, dim, Matrix::identity(ring, dim));
  }
  static HObject unit(ScalarRing ring) { return standard(ring, 1); }
  static HObject zero(ScalarRing ring) { return standard(ring, 0); }

  const ScalarRing& ring() const { return ring_; }
  size_t dim() const { return dim_; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const {
    if (!gram_inv_) gram_inv_ = inverse(gram_);
    return *gram_inv_;
  }

  friend bool operator==(const HObject& a, const HObject& b) {
    return a.ring_ == b.ring_ && a.dim_ == b.dim_ && a.gram_ == b.gram_;
  }
  friend bool operator!=(const HObject& a, const HObject& b) {
    return !(a == b);
  }

 private:
  ScalarRing ring_;
  size_t dim_;
  Matrix gram_;
  mutable std::optional<Matrix> gram_inv_;
};

inline HObject make_object(ScalarRing ring, size_t dim, Matrix gram) {
  return HObject(ring, dim, std::move(gram));
}

/// A point of X, i.e. a morphism from the unit: a coordinate column.
struct Vector {
  HObject object;
  Matrix coords;  // dim x 1

  Vector(HObject obj, Matrix c) : object(std::move(obj)), coords(std::move(c)) {
    if (coords.rows() != object.dim() || coords.cols() != 1)
      throw error("vector length mismatch");
  }
};

/// <x, y> = x‡ᵀ G y; conjugate-linear in the first slot.
inline Scalar inner_product(const HObject& x_obj, const Vector& x,
                            const Vector& y) {
  if (x.object != x_obj || y.object != x_obj) throw error("object mismatch");
  if (x_obj.dim() == 0) return Scalar::zero(x_obj.ring());
  Matrix r = conj_transpose(x.coords) * x_obj.gram() * y.coords;
  return r.at(0, 0);
}

}  // namespace hilbcat
