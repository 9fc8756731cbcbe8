#pragma once

// Exact scalars for the shipped involutive commutative semirings:
// natural numbers, booleans, integers, rationals, Gaussian rationals
// and real quadratic extensions Q(sqrt(d)). No floating point anywhere;
// values are canonical, so equality is syntactic.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "hilbcat/error.hpp"

namespace hilbcat {

enum class RingTag { Nat, Bool, Int, Rat, GaussRat, QuadExt };

struct ScalarRing {
  RingTag tag = RingTag::Rat;
  long quad_d = 0;  // square-free, >= 2; meaningful for QuadExt only

  friend bool operator==(const ScalarRing&, const ScalarRing&) = default;

  bool is_field() const {
    return tag == RingTag::Rat || tag == RingTag::GaussRat ||
           tag == RingTag::QuadExt;
  }
  bool has_negatives() const { return tag == RingTag::Int || is_field(); }
  /// True when the involution is complex conjugation rather than identity.
  bool conjugating() const { return tag == RingTag::GaussRat; }

  std::string name() const {
    switch (tag) {
      case RingTag::Nat: return "nat";
      case RingTag::Bool: return "bool";
      case RingTag::Int: return "int";
      case RingTag::Rat: return "rat";
      case RingTag::GaussRat: return "gauss";
      case RingTag::QuadExt: return "qsqrt" + std::to_string(quad_d);
    }
    return "?";
  }

  static std::optional<ScalarRing> from_name(std::string_view s) {
    if (s == "nat") return ScalarRing{RingTag::Nat};
    if (s == "bool") return ScalarRing{RingTag::Bool};
    if (s == "int") return ScalarRing{RingTag::Int};
    if (s == "rat") return ScalarRing{RingTag::Rat};
    if (s == "gauss") return ScalarRing{RingTag::GaussRat};
    if (s.substr(0, 5) == "qsqrt") {
      long d = 0;
      for (char c : s.substr(5)) {
        if (c < '0' || c > '9') return std::nullopt;
        d = d * 10 + (c - '0');
      }
      if (d < 2) return std::nullopt;
      return ScalarRing{RingTag::QuadExt, d};
    }
    return std::nullopt;
  }
};

inline ScalarRing nat_ring() { return {RingTag::Nat}; }
inline ScalarRing bool_ring() { return {RingTag::Bool}; }
inline ScalarRing int_ring() { return {RingTag::Int}; }
inline ScalarRing rat_ring() { return {RingTag::Rat}; }
inline ScalarRing gauss_ring() { return {RingTag::GaussRat}; }
inline ScalarRing quad_ring(long d = 2) { return {RingTag::QuadExt, d}; }

/// One element of a ScalarRing. Stored as a + b*u where u is i for
/// GaussRat, sqrt(d) for QuadExt, and absent otherwise. mpq_class keeps
/// fractions reduced, so representation is canonical.
class Scalar {
 public:
  Scalar() : ring_(rat_ring()) {}

  Scalar(ScalarRing ring, mpq_class a, mpq_class b = 0)
      : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
    validate();
  }

  static Scalar zero(ScalarRing r) { return Scalar(r, 0); }
  static Scalar one(ScalarRing r) { return Scalar(r, 1); }
  static Scalar from_int(ScalarRing r, long v) { return Scalar(r, v); }

  const ScalarRing& ring() const { return ring_; }
  const mpq_class& re() const { return a_; }
  const mpq_class& im() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    x.same_ring(y);
    if (x.ring_.tag == RingTag::Bool)
      return Scalar(x.ring_, (x.a_ != 0 || y.a_ != 0) ? 1 : 0);
    return Scalar(x.ring_, x.a_ + y.a_, x.b_ + y.b_);
  }

  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    x.same_ring(y);
    switch (x.ring_.tag) {
      case RingTag::Bool:
        return Scalar(x.ring_, (x.a_ != 0 && y.a_ != 0) ? 1 : 0);
      case RingTag::GaussRat:
        return Scalar(x.ring_, x.a_ * y.a_ - x.b_ * y.b_,
                      x.a_ * y.b_ + x.b_ * y.a_);
      case RingTag::QuadExt:
        return Scalar(x.ring_, x.a_ * y.a_ + x.b_ * y.b_ * x.ring_.quad_d,
                      x.a_ * y.b_ + x.b_ * y.a_);
      default:
        return Scalar(x.ring_, x.a_ * y.a_);
    }
  }

  friend Scalar operator-(const Scalar& x) {
    if (!x.ring_.has_negatives())
      throw error("no additive inverses in " + x.ring_.name());
    return Scalar(x.ring_, -x.a_, -x.b_);
  }

  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    return x + (-y);
  }

 private:
  ScalarRing ring_;
  mpq_class a_, b_;

  void same_ring(const Scalar& other) const {
    if (ring_ != other.ring_) throw error("ring mismatch");
  }

  void validate() const {
    switch (ring_.tag) {
      case RingTag::Nat:
        if (b_ != 0 || a_.get_den() != 1 || a_ < 0)
          throw error("not a natural number");
        break;
      case RingTag::Bool:
        if (b_ != 0 || (a_ != 0 && a_ != 1)) throw error("not a boolean");
        break;
      case RingTag::Int:
        if (b_ != 0 || a_.get_den() != 1) throw error("not an integer");
        break;
      case RingTag::Rat:
        if (b_ != 0) throw error("not a rational");
        break;
      default:
        break;
    }
  }
};

/// The semilinear involution: complex conjugation on Q(i), identity on
/// every other shipped ring (Q(sqrt d) carries the real embedding).
inline Scalar involute(const Scalar& s) {
  if (s.ring().conjugating()) return Scalar(s.ring(), s.re(), -s.im());
  return s;
}

/// True iff s lies in the additive closure of {t‡t}. Per ring this is:
/// everything (Nat, Bool), the nonnegatives (Int, Rat), the nonnegative
/// reals (GaussRat), the totally positive elements together with zero
/// (QuadExt).
inline bool is_positive(const Scalar& s) {
  switch (s.ring().tag) {
    case RingTag::Nat:
    case RingTag::Bool:
      return true;
    case RingTag::Int:
    case RingTag::Rat:
      return s.re() >= 0;
    case RingTag::GaussRat:
      return s.im() == 0 && s.re() >= 0;
    case RingTag::QuadExt:
      // a + b*sqrt(d) >= 0 under both real embeddings
      return s.re() >= 0 &&
             s.re() * s.re() >= s.im() * s.im() * s.ring().quad_d;
  }
  return false;
}

/// r <= s iff some positive p has r + p = s.
inline bool leq(const Scalar& r, const Scalar& s) {
  if (r.ring() != s.ring()) throw error("ring mismatch");
  switch (r.ring().tag) {
    case RingTag::Nat:
    case RingTag::Bool:
      return r.re() <= s.re();
    default:
      return is_positive(s - r);
  }
}

inline Scalar invert(const Scalar& s) {
  if (s.is_zero()) throw error("cannot invert zero");
  switch (s.ring().tag) {
    case RingTag::Bool:
      return s;  // 1 is its own inverse
    case RingTag::Nat:
    case RingTag::Int:
      if (s.re() == 1 || s.re() == -1) return s;
      throw error("no inverse in " + s.ring().name());
    case RingTag::Rat:
      return Scalar(s.ring(), 1 / s.re());
    case RingTag::GaussRat: {
      mpq_class n = s.re() * s.re() + s.im() * s.im();
      return Scalar(s.ring(), s.re() / n, -s.im() / n);
    }
    case RingTag::QuadExt: {
      mpq_class n = s.re() * s.re() - s.im() * s.im() * s.ring().quad_d;
      if (n == 0) throw error("no inverse");  // impossible for square-free d
      return Scalar(s.ring(), s.re() / n, -s.im() / n);
    }
  }
  throw error("unreachable");
}

// ---- string form ----
// nat/bool/int: decimal; rat: "p/q" (or "p" when q = 1);
// gauss: "a+b*i"; qsqrt(d): "a+b*sqrt(d)"; negative b folds into "-".

namespace detail {

inline std::string rat_str(const mpq_class& q) { return q.get_str(); }

inline mpq_class parse_rat(std::string_view s) {
  if (s.empty()) throw error("empty number");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw error("bad number '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

// Splits "a+b" / "a-b" at the first top-level sign after position 0.
inline std::pair<mpq_class, mpq_class> parse_pair(std::string_view s) {
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-') {
      mpq_class a = parse_rat(s.substr(0, i));
      mpq_class b = parse_rat(s.substr(s[i] == '+' ? i + 1 : i));
      return {a, b};
    }
  }
  throw error("expected two components in '" + std::string(s) + "'");
}

}  // namespace detail

inline std::string to_string(const Scalar& s) {
  switch (s.ring().tag) {
    case RingTag::Nat:
    case RingTag::Bool:
    case RingTag::Int:
    case RingTag::Rat:
      return detail::rat_str(s.re());
    case RingTag::GaussRat:
    case RingTag::QuadExt: {
      std::string unit = s.ring().tag == RingTag::GaussRat
                             ? "*i"
                             : "*sqrt(" + std::to_string(s.ring().quad_d) + ")";
      mpq_class b = s.im();
      std::string sign = b < 0 ? "-" : "+";
      if (b < 0) b = -b;
      return detail::rat_str(s.re()) + sign + detail::rat_str(b) + unit;
    }
  }
  return "?";
}

inline Scalar parse_scalar(ScalarRing ring, std::string_view text) {
  switch (ring.tag) {
    case RingTag::Nat:
    case RingTag::Bool:
    case RingTag::Int:
    case RingTag::Rat:
      return Scalar(ring, detail::parse_rat(text));
    case RingTag::GaussRat:
    case RingTag::QuadExt: {
      size_t star = text.rfind('*');
      if (star == std::string_view::npos)
        return Scalar(ring, detail::parse_rat(text));  // pure real part
      auto [a, b] = detail::parse_pair(text.substr(0, star));
      std::string_view unit = text.substr(star + 1);
      if (ring.tag == RingTag::GaussRat && unit != "i")
        throw error("expected '*i' in '" + std::string(text) + "'");
      if (ring.tag == RingTag::QuadExt &&
          unit != "sqrt(" + std::to_string(ring.quad_d) + ")")
        throw error("wrong radical in '" + std::string(text) + "'");
      return Scalar(ring, a, b);
    }
  }
  throw error("unreachable");
}

}  // namespace hilbcat
