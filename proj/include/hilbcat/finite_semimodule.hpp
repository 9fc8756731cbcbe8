#pragma once

// Explicit-table Hilbert semimodules over the Boolean semiring, for the
// constructions that make sense without subtraction: brute-force adjoint
// search, table-level biproducts, and the tensor-product quotient by the
// functional congruence.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hilbcat/error.hpp"
#include "hilbcat/scalar.hpp"

namespace hilbcat {

/// Carrier {0..size-1} with 0 the zero element; tables are exhaustive.
/// Scalars are Bool, so the scalar action is determined (0*m = 0, 1*m = m)
/// and the involution is trivial.
struct FiniteSemimodule {
  size_t size = 1;
  std::vector<std::vector<int>> add;    // size x size
  std::vector<std::vector<int>> inner;  // size x size, values 0/1
  bool strict = false;                  // <m,m> = 0 => m = 0, set by validate

  /// Checks the commutative-monoid equations, biadditivity of the inner
  /// product, symmetry and nondegeneracy; sets the strictness flag.
  /// The monoid triple checks are skipped above the given size cap (the
  /// pairwise Hilbert-semimodule checks always run exhaustively).
  void validate(size_t assoc_cap = 64) {
    size_t n = size;
    if (add.size() != n || inner.size() != n) throw error("table size mismatch");
    auto in_range = [n](int v) { return v >= 0 && static_cast<size_t>(v) < n; };
    for (size_t i = 0; i < n; ++i) {
      if (add[i].size() != n || inner[i].size() != n)
        throw error("table size mismatch");
      for (size_t j = 0; j < n; ++j) {
        if (!in_range(add[i][j])) throw error("add table out of range");
        if (inner[i][j] != 0 && inner[i][j] != 1)
          throw error("inner table not boolean");
      }
    }
    for (size_t i = 0; i < n; ++i) {
      if (add[0][i] != static_cast<int>(i)) throw error("0 is not neutral");
      for (size_t j = 0; j < n; ++j) {
        if (add[i][j] != add[j][i]) throw error("addition not commutative");
        if (inner[i][j] != inner[j][i])  // trivial involution
          throw error("inner product not symmetric");
      }
    }
    if (n <= assoc_cap)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          for (size_t k = 0; k < n; ++k)
            if (add[add[i][j]][k] != add[i][add[j][k]])
              throw error("addition not associative");
    // biadditivity: <m, n + n'> = <m,n> + <m,n'> (join in Bool)
    for (size_t m = 0; m < n; ++m)
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
          if (inner[m][add[a][b]] != (inner[m][a] | inner[m][b]))
            throw error("inner product not additive");
    // nondegeneracy: <m,-> = <n,-> => m = n
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (inner[a] == inner[b]) throw error("inner product degenerate");
    strict = true;
    for (size_t m = 1; m < n; ++m)
      if (inner[m][m] == 0) strict = false;
  }

  /// Free module on k generators: carrier = subsets as bitmasks,
  /// addition = union, <x,y> = [x meets y].
  static FiniteSemimodule free_bool(size_t k) {
    FiniteSemimodule m;
    m.size = size_t{1} << k;
    m.add.assign(m.size, std::vector<int>(m.size));
    m.inner.assign(m.size, std::vector<int>(m.size));
    for (size_t a = 0; a < m.size; ++a)
      for (size_t b = 0; b < m.size; ++b) {
        m.add[a][b] = static_cast<int>(a | b);
        m.inner[a][b] = (a & b) ? 1 : 0;
      }
    m.validate();
    return m;
  }
};

using MapTable = std::vector<int>;  // f: M -> N as a value table

inline bool fsm_is_homomorphism(const FiniteSemimodule& m,
                                const FiniteSemimodule& n, const MapTable& f) {
  if (f.size() != m.size) return false;
  for (int v : f)
    if (v < 0 || static_cast<size_t>(v) >= n.size) return false;
  if (f[0] != 0) return false;
  for (size_t a = 0; a < m.size; ++a)
    for (size_t b = 0; b < m.size; ++b)
      if (f[m.add[a][b]] != n.add[f[a]][f[b]]) return false;
  return true;
}

/// Brute-force search over every function N -> M for the (necessarily
/// unique) adjoint of f: M -> N. Throws if f is not a homomorphism.
inline std::optional<MapTable> find_adjoint_finite(const FiniteSemimodule& m,
                                                   const FiniteSemimodule& n,
                                                   const MapTable& f) {
  if (!fsm_is_homomorphism(m, n, f)) throw error("not a homomorphism");
  MapTable g(n.size, 0);
  auto adjoint_identity = [&] {
    for (size_t a = 0; a < m.size; ++a)
      for (size_t b = 0; b < n.size; ++b)
        if (n.inner[f[a]][b] != m.inner[a][g[b]]) return false;
    return true;
  };
  for (;;) {
    if (fsm_is_homomorphism(n, m, g) && adjoint_identity()) return g;
    // next candidate in lexicographic order
    size_t i = 0;
    while (i < g.size() && g[i] == static_cast<int>(m.size) - 1) g[i++] = 0;
    if (i == g.size()) return std::nullopt;
    ++g[i];
  }
}

/// M (+) N with pairwise addition and the summed (joined) inner product.
/// Pair (a, b) is indexed a * n.size + b.
inline FiniteSemimodule fsm_biproduct(const FiniteSemimodule& m,
                                      const FiniteSemimodule& n) {
  FiniteSemimodule r;
  r.size = m.size * n.size;
  r.add.assign(r.size, std::vector<int>(r.size));
  r.inner.assign(r.size, std::vector<int>(r.size));
  auto idx = [&](size_t a, size_t b) { return a * n.size + b; };
  for (size_t a = 0; a < m.size; ++a)
    for (size_t b = 0; b < n.size; ++b)
      for (size_t c = 0; c < m.size; ++c)
        for (size_t d = 0; d < n.size; ++d) {
          r.add[idx(a, b)][idx(c, d)] = static_cast<int>(idx(m.add[a][c], n.add[b][d]));
          r.inner[idx(a, b)][idx(c, d)] = m.inner[a][c] | n.inner[b][d];
        }
  r.validate();
  return r;
}

/// The tensor product M (x) N modulo the functional congruence
/// h (x) k ~ h' (x) k' iff <h,-><k,-> = <h',-><k',->, computed by closure
/// of generator functionals under join. Class inner products are computed
/// from decompositions and checked exhaustively against the functional,
/// which is exactly the congruence (well-definedness) condition.
inline FiniteSemimodule fsm_tensor_quotient(const FiniteSemimodule& m,
                                            const FiniteSemimodule& n) {
  size_t slots = m.size * n.size;
  if (slots > 64) throw error("tensor carrier too large");
  auto slot = [&](size_t a, size_t b) { return a * n.size + b; };

  // generator functional of h (x) k, evaluated at every pair (m', n')
  std::vector<uint64_t> gen_func(slots, 0);
  for (size_t h = 0; h < m.size; ++h)
    for (size_t k = 0; k < n.size; ++k) {
      uint64_t f = 0;
      for (size_t a = 0; a < m.size; ++a)
        for (size_t b = 0; b < n.size; ++b)
          if (m.inner[h][a] && n.inner[k][b]) f |= uint64_t{1} << slot(a, b);
      gen_func[slot(h, k)] = f;
    }

  // closure under join, remembering one decomposition per class
  std::map<uint64_t, std::vector<size_t>> classes;  // functional -> generators
  classes[0] = {};
  for (;;) {
    bool grew = false;
    std::vector<std::pair<uint64_t, std::vector<size_t>>> found;
    for (const auto& [func, dec] : classes)
      for (size_t g = 0; g < slots; ++g) {
        uint64_t joined = func | gen_func[g];
        if (!classes.count(joined)) {
          auto d = dec;
          d.push_back(g);
          found.emplace_back(joined, std::move(d));
        }
      }
    for (auto& [func, dec] : found)
      if (classes.emplace(func, std::move(dec)).second) grew = true;
    if (!grew) break;
  }

  std::vector<uint64_t> carrier;
  carrier.reserve(classes.size());
  for (const auto& [func, dec] : classes) carrier.push_back(func);
  std::sort(carrier.begin(), carrier.end());  // 0 comes first
  std::map<uint64_t, size_t> index;
  for (size_t i = 0; i < carrier.size(); ++i) index[carrier[i]] = i;

  // pair inner of generators g = (h,k), g' = (h',k') is <h,h'><k,k'>,
  // which equals func_g evaluated at the pair of g'
  auto pair_inner = [&](size_t g, size_t g2) {
    return (gen_func[g] >> g2) & 1;
  };

  // well-definedness: the decomposition-computed inner of u with a
  // generator must match evaluating u's functional at that generator
  for (uint64_t func : carrier) {
    const auto& dec = classes[func];
    for (size_t g = 0; g < slots; ++g) {
      uint64_t via_dec = 0;
      for (size_t d : dec) via_dec |= pair_inner(d, g);
      if (via_dec != ((func >> g) & 1))
        throw error("tensor inner product ill-defined");
    }
  }

  FiniteSemimodule r;
  r.size = carrier.size();
  r.add.assign(r.size, std::vector<int>(r.size));
  r.inner.assign(r.size, std::vector<int>(r.size));
  for (size_t i = 0; i < r.size; ++i)
    for (size_t j = 0; j < r.size; ++j) {
      r.add[i][j] = static_cast<int>(index[carrier[i] | carrier[j]]);
      uint64_t v = 0;
      for (size_t a : classes[carrier[i]])
        for (size_t b : classes[carrier[j]]) v |= pair_inner(a, b);
      r.inner[i][j] = static_cast<int>(v);
    }
  r.validate();
  return r;
}

}  // namespace hilbcat
