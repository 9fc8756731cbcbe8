#pragma once

// Witness-or-pass searches for the semiring hypotheses: zerosumfreeness,
// multiplicative cancellativity, characteristic zero. The templated
// searches also work for test-only fixtures (e.g. a ring product Q x Q)
// that are not ScalarRings.

#include <optional>
#include <utility>
#include <vector>

#include "hilbcat/generator.hpp"
#include "hilbcat/scalar.hpp"

namespace hilbcat {

template <typename T>
struct ZerosumWitness {
  T s, t;
};

template <typename T>
struct CancelWitness {
  T s, r, t;  // s*r == s*t, s != 0, r != t
};

/// Searches sampled pairs for s + t = 0 with (s, t) != (0, 0).
template <typename T, typename Sampler, typename Add, typename IsZero>
std::optional<ZerosumWitness<T>> zerosumfree_search(size_t budget,
                                                    Sampler sample, Add plus,
                                                    IsZero zero) {
  for (size_t i = 0; i < budget; ++i) {
    T s = sample();
    T t = sample();
    if (zero(s) && zero(t)) continue;
    if (zero(plus(s, t))) return ZerosumWitness<T>{std::move(s), std::move(t)};
  }
  return std::nullopt;
}

/// Searches sampled triples for s*r = s*t with s != 0 and r != t.
template <typename T, typename Sampler, typename Mul, typename IsZero,
          typename Eq>
std::optional<CancelWitness<T>> cancellative_search(size_t budget,
                                                    Sampler sample, Mul times,
                                                    IsZero zero, Eq eq) {
  for (size_t i = 0; i < budget; ++i) {
    T s = sample();
    T r = sample();
    T t = sample();
    if (zero(s) || eq(r, t)) continue;
    if (eq(times(s, r), times(s, t)))
      return CancelWitness<T>{std::move(s), std::move(r), std::move(t)};
  }
  return std::nullopt;
}

/// Bool is exhausted; rings with subtraction include (s, -s) candidates in
/// the sample stream, so the witness (1, -1) is found immediately.
inline std::optional<ZerosumWitness<Scalar>> is_zerosumfree(ScalarRing ring,
                                                            size_t budget,
                                                            uint64_t seed = 1) {
  if (ring.tag == RingTag::Bool) {
    for (long a = 0; a <= 1; ++a)
      for (long b = 0; b <= 1; ++b) {
        Scalar s(ring, a), t(ring, b);
        if (!(s.is_zero() && t.is_zero()) && (s + t).is_zero())
          return ZerosumWitness<Scalar>{s, t};
      }
    return std::nullopt;
  }
  InstanceGenerator gen(seed);
  bool flip = false;
  std::optional<Scalar> last;
  auto sample = [&]() {
    if (ring.has_negatives() && flip && last) {
      flip = false;
      return -*last;
    }
    Scalar s = gen.nonzero_scalar(ring);
    last = s;
    flip = true;
    return s;
  };
  return zerosumfree_search<Scalar>(
      budget, sample, [](const Scalar& a, const Scalar& b) { return a + b; },
      [](const Scalar& a) { return a.is_zero(); });
}

inline std::optional<CancelWitness<Scalar>> is_mult_cancellative(
    ScalarRing ring, size_t budget, uint64_t seed = 1) {
  if (ring.tag == RingTag::Bool) {
    for (long a = 0; a <= 1; ++a)
      for (long b = 0; b <= 1; ++b)
        for (long c = 0; c <= 1; ++c) {
          Scalar s(ring, a), r(ring, b), t(ring, c);
          if (!s.is_zero() && r != t && s * r == s * t)
            return CancelWitness<Scalar>{s, r, t};
        }
    return std::nullopt;
  }
  InstanceGenerator gen(seed);
  return cancellative_search<Scalar>(
      budget, [&] { return gen.scalar(ring); },
      [](const Scalar& a, const Scalar& b) { return a * b; },
      [](const Scalar& a) { return a.is_zero(); },
      [](const Scalar& a, const Scalar& b) { return a == b; });
}

/// Verifies n*1 != 0 for 1 <= n <= n_max; returns the failing n if any.
/// Note that 1+1 = 1 in Bool, so Bool passes: it is zerosumfree, not of
/// finite characteristic.
inline std::optional<long> char_zero_check(ScalarRing ring, long n_max) {
  if (n_max < 1) throw error("n_max must be positive");
  Scalar acc = Scalar::one(ring);
  for (long n = 1; n <= n_max; ++n) {
    if (acc.is_zero()) return n;
    acc = acc + Scalar::one(ring);
  }
  return std::nullopt;
}

}  // namespace hilbcat
