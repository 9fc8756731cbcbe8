#pragma once

// The shipped injective homomorphisms of involutive semirings:
// Q -> Q(i), Q -> Q(sqrt 2), N -> Z. Selected by name from the CLI.

#include <optional>
#include <string>
#include <string_view>

#include "hilbcat/error.hpp"
#include "hilbcat/scalar.hpp"

namespace hilbcat {

struct SemiringHom {
  std::string name;
  ScalarRing source;
  ScalarRing target;

  static SemiringHom q_to_qi() {
    return {"q-to-qi", rat_ring(), gauss_ring()};
  }
  static SemiringHom q_to_qsqrt2() {
    return {"q-to-qsqrt2", rat_ring(), quad_ring(2)};
  }
  static SemiringHom nat_to_int() {
    return {"nat-to-int", nat_ring(), int_ring()};
  }

  static std::optional<SemiringHom> from_name(std::string_view s) {
    if (s == "q-to-qi") return q_to_qi();
    if (s == "q-to-qsqrt2") return q_to_qsqrt2();
    if (s == "nat-to-int") return nat_to_int();
    return std::nullopt;
  }
};

/// All shipped homs act as inclusions on the stored (a, b) pair.
inline Scalar hom_apply(const SemiringHom& h, const Scalar& s) {
  if (s.ring() != h.source) throw error("scalar not in source ring of " + h.name);
  return Scalar(h.target, s.re(), s.im());
}

}  // namespace hilbcat
