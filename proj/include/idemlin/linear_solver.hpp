#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "idemlin/errors.hpp"
#include "idemlin/hitting_sets.hpp"
#include "idemlin/matrix.hpp"
#include "idemlin/semiring.hpp"

namespace idemlin {

/*
 * Systems are stored in the "unknowns on the left" layout XA = Y:
 * A has one row per unknown i and one column per equation j, and a(i, j)
 * multiplies x_i in equation j. The column form AX = Y (rows = equations)
 * is converted once, at construction, by Orientation::ax.
 *
 * All indices are 0-based in the API; renderers add one.
 */

enum class Orientation {
  xa,  ///< matrix rows are unknowns
  ax,  ///< matrix rows are equations
};

template <PreSemiring R>
struct LinearSystem {
  using value_type = value_t<R>;

  R ring;
  Matrix<value_type> a;  ///< unknowns x equations
  std::vector<value_type> y;

  std::size_t unknowns() const noexcept { return a.rows(); }
  std::size_t equations() const noexcept { return a.cols(); }
  std::span<const value_type> coefficients(std::size_t i) const { return a.row(i); }
};

template <PreSemiring R>
LinearSystem<R> make_system(R ring, Matrix<value_t<R>> a, std::vector<value_t<R>> y, Orientation orientation) {
  if (orientation == Orientation::ax) a = a.transposed();
  if (a.rows() == 0 || a.cols() == 0) throw DimensionError("system needs at least one unknown and one equation");
  if (y.size() != a.cols()) {
    throw DimensionError("right-hand side has " + std::to_string(y.size()) + " entries, expected " +
                         std::to_string(a.cols()));
  }
  return LinearSystem<R>{std::move(ring), std::move(a), std::move(y)};
}

/// X.A for the system's coefficient matrix.
template <PreSemiring R>
std::vector<value_t<R>> evaluate(const LinearSystem<R>& sys, std::span<const value_t<R>> x) {
  return vec_mat_mul(sys.ring, x, sys.a);
}

template <class V>
struct Solved {
  std::vector<V> maximal;
};

struct Incompatible {
  std::size_t equation;  ///< first equation the candidate misses
};

template <class V>
using SolveOutcome = std::variant<Solved<V>, Incompatible>;

/// x in W_i  iff  x.A_i + Y = Y.
template <PreSemiring R>
bool in_feasible_set(const LinearSystem<R>& sys, std::size_t i, const value_t<R>& x) {
  const auto row = sys.coefficients(i);
  for (std::size_t j = 0; j < sys.equations(); ++j) {
    if (!sys.ring.eq(sys.ring.add(sys.ring.mul(x, row[j]), sys.y[j]), sys.y[j])) return false;
  }
  return true;
}

/// max W_i over a finite carrier: the sum of every qualifying element, which
/// is the maximum because W_i is closed under addition. W_i always holds zero.
template <Semiring R>
value_t<R> max_w_finite(const LinearSystem<R>& sys, std::size_t i, std::span<const value_t<R>> carrier) {
  value_t<R> acc = sys.ring.zero();
  for (const auto& x : carrier) {
    if (in_feasible_set(sys, i, x)) acc = sys.ring.add(acc, x);
  }
  return acc;
}

/// Candidate Z = (max W_1, ..., max W_n); Solved iff Z.A = Y, which by the
/// residuation argument is exactly when the system has any solution.
template <PreSemiring R, class Provider>
  requires std::is_invocable_r_v<std::optional<value_t<R>>, Provider, std::size_t>
SolveOutcome<value_t<R>> solve_general(const LinearSystem<R>& sys, Provider&& max_w) {
  std::vector<value_t<R>> z;
  z.reserve(sys.unknowns());
  for (std::size_t i = 0; i < sys.unknowns(); ++i) {
    std::optional<value_t<R>> c = max_w(i);
    if (!c) throw MaxUndefined(i);
    z.push_back(std::move(*c));
  }
  const auto image = evaluate(sys, std::span<const value_t<R>>(z));
  for (std::size_t j = 0; j < sys.equations(); ++j) {
    if (!sys.ring.eq(image[j], sys.y[j])) return Incompatible{j};
  }
  return Solved<value_t<R>>{std::move(z)};
}

template <Semiring R>
SolveOutcome<value_t<R>> solve_finite(const LinearSystem<R>& sys, std::span<const value_t<R>> carrier) {
  return solve_general(sys, [&](std::size_t i) -> std::optional<value_t<R>> { return max_w_finite(sys, i, carrier); });
}

// ---------------------------------------------------------------------------
// Generalized tropical semirings with a multiplicative group.

namespace detail {

template <TropicalGroup R>
value_t<R> quotient(const LinearSystem<R>& sys, std::size_t i, std::size_t j) {
  auto inv = sys.ring.inverse(sys.a(i, j));
  if (!inv) throw NonInvertibleEntry(i, j);
  return sys.ring.mul(sys.y[j], *inv);
}

}  // namespace detail

/// C_i = min_j y_j a_{i,j}^{-1}; C is itself a solution.
template <TropicalGroup R>
std::vector<value_t<R>> tropical_ceilings(const LinearSystem<R>& sys) {
  std::vector<value_t<R>> c;
  c.reserve(sys.unknowns());
  for (std::size_t i = 0; i < sys.unknowns(); ++i) {
    value_t<R> best = detail::quotient(sys, i, 0);
    for (std::size_t j = 1; j < sys.equations(); ++j) {
      auto q = detail::quotient(sys, i, j);
      if (sys.ring.compare(q, best) < 0) best = std::move(q);
    }
    c.push_back(std::move(best));
  }
  return c;
}

template <TropicalGroup R>
SolveOutcome<value_t<R>> solve_tropical(const LinearSystem<R>& sys) {
  auto c = tropical_ceilings(sys);
  return solve_general(sys, [&](std::size_t i) -> std::optional<value_t<R>> { return c[i]; });
}

/// Compressed description of every solution of a group-tropical system.
template <class V>
struct SolutionSet {
  Matrix<V> quotient;                  ///< unknowns x equations, entry y_j a_{i,j}^{-1}
  std::vector<V> ceilings;             ///< C_i
  std::vector<IndexSet> row_sets;      ///< Row(i): equations attaining C_i
  std::vector<IndexSet> index_sets;    ///< Index(j): unknowns whose ceiling is attained at j
  std::vector<IndexSet> minimal_families;  ///< minimal transversals of the Index sets
};

/// One pass over the n x m quotient matrix (n*m inversions, products and
/// comparisons), then Index by inverting Row, then minimal transversals.
template <TropicalGroup R>
SolutionSet<value_t<R>> solution_set(const LinearSystem<R>& sys) {
  using V = value_t<R>;
  const std::size_t n = sys.unknowns();
  const std::size_t m = sys.equations();

  std::vector<V> q;
  q.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) q.push_back(detail::quotient(sys, i, j));
  Matrix<V> quotient(n, m, std::move(q));

  std::vector<V> ceilings;
  ceilings.reserve(n);
  std::vector<IndexSet> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    V best = quotient(i, 0);
    rows[i] = {0};
    for (std::size_t j = 1; j < m; ++j) {
      const auto order = sys.ring.compare(quotient(i, j), best);
      if (order < 0) {
        best = quotient(i, j);
        rows[i] = {j};
      } else if (order == 0) {
        rows[i].push_back(j);
      }
    }
    ceilings.push_back(std::move(best));
  }

  std::vector<IndexSet> index(m);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : rows[i]) index[j].push_back(i);

  auto families = minimal_hitting_sets(index, n);
  return SolutionSet<V>{std::move(quotient), std::move(ceilings), std::move(rows), std::move(index),
                        std::move(families)};
}

/// Direct characterization, valid when addition is selective: every term
/// stays below its target, and each equation has a term that attains it.
template <PreSemiring R>
bool is_solution(const LinearSystem<R>& sys, std::span<const value_t<R>> x) {
  if (x.size() != sys.unknowns()) throw DimensionError("is_solution: length mismatch");
  const auto& ring = sys.ring;
  for (std::size_t j = 0; j < sys.equations(); ++j) {
    bool attained = false;
    for (std::size_t i = 0; i < sys.unknowns(); ++i) {
      const auto term = ring.mul(x[i], sys.a(i, j));
      if (!ring.eq(ring.add(term, sys.y[j]), sys.y[j])) return false;
      attained = attained || ring.eq(term, sys.y[j]);
    }
    if (!attained) return false;
  }
  return true;
}

/// Unknowns sitting exactly on their ceiling.
template <PreSemiring R>
IndexSet tight_set(const R& ring, const SolutionSet<value_t<R>>& set, std::span<const value_t<R>> x) {
  IndexSet tight;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (ring.eq(x[i], set.ceilings[i])) tight.push_back(i);
  return tight;
}

/// Ceiling characterization for the group case: x <= C and the tight set
/// meets every Index(j).
template <PreSemiring R>
bool satisfies_ceilings(const R& ring, const SolutionSet<value_t<R>>& set, std::span<const value_t<R>> x) {
  if (x.size() != set.ceilings.size()) throw DimensionError("satisfies_ceilings: length mismatch");
  if (!vec_leq(ring, x, std::span<const value_t<R>>(set.ceilings))) return false;
  std::vector<bool> tight(x.size(), false);
  for (auto i : tight_set(ring, set, x)) tight[i] = true;
  for (const auto& idx : set.index_sets) {
    bool hit = false;
    for (auto i : idx) hit = hit || tight[i];
    if (!hit) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace detail {

template <class Visitor, class V>
bool visit(Visitor& visitor, const std::vector<V>& x) {
  if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const std::vector<V>&>, bool>) {
    return visitor(x);
  } else {
    visitor(x);
    return true;
  }
}

}  // namespace detail

/// Streams every X in carrier^n with X.A = Y to `visitor` (which may return
/// false to stop). Works for any finite idempotent semiring: coordinates are
/// drawn from the down-sets W_i, and a branch is cut as soon as the partial
/// sums plus the best the remaining unknowns can contribute miss Y.
/// Returns the number of solutions visited.
template <Semiring R, class Visitor>
std::size_t enumerate_solutions(const LinearSystem<R>& sys, std::span<const value_t<R>> carrier, Visitor&& visitor) {
  using V = value_t<R>;
  const auto& ring = sys.ring;
  const std::size_t n = sys.unknowns();
  const std::size_t m = sys.equations();

  std::vector<std::vector<V>> feasible(n);
  std::vector<V> ceilings(n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : carrier) {
      if (in_feasible_set(sys, i, x)) {
        feasible[i].push_back(x);
        ceilings[i] = ring.add(ceilings[i], x);
      }
    }
  }
  // reach[i][j]: sum over unknowns i.. of C_i a_{i,j}.
  std::vector<std::vector<V>> reach(n + 1, std::vector<V>(m, ring.zero()));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = 0; j < m; ++j) reach[i][j] = ring.add(reach[i + 1][j], ring.mul(ceilings[i], sys.a(i, j)));

  std::vector<V> x(n, ring.zero());
  std::vector<std::vector<V>> partial(n + 1, std::vector<V>(m, ring.zero()));
  std::size_t count = 0;
  bool stop = false;

  std::function<void(std::size_t)> descend = [&](std::size_t i) {
    if (stop) return;
    for (std::size_t j = 0; j < m; ++j)
      if (!ring.eq(ring.add(partial[i][j], reach[i][j]), sys.y[j])) return;
    if (i == n) {
      ++count;
      if (!detail::visit(visitor, x)) stop = true;
      return;
    }
    for (const auto& v : feasible[i]) {
      x[i] = v;
      for (std::size_t j = 0; j < m; ++j) partial[i + 1][j] = ring.add(partial[i][j], ring.mul(v, sys.a(i, j)));
      descend(i + 1);
      if (stop) return;
    }
  };
  descend(0);
  return count;
}

/// Materializes the solutions of a group-tropical system whose free
/// coordinates range over finite candidate lists: for each minimal family T,
/// coordinates in T sit on their ceiling and the others take any candidate
/// not above it. A vector is emitted only under the first family its tight
/// set contains, so overlaps are not repeated. Returns the count visited.
template <PreSemiring R, class Visitor>
std::size_t enumerate_family_solutions(const R& ring, const SolutionSet<value_t<R>>& set,
                                       const std::vector<std::vector<value_t<R>>>& candidates, Visitor&& visitor) {
  using V = value_t<R>;
  const std::size_t n = set.ceilings.size();
  if (candidates.size() != n) throw DimensionError("enumerate_family_solutions: one candidate list per unknown");

  // Candidates not above the ceiling, with the ceiling itself always present.
  std::vector<std::vector<V>> below(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool has_ceiling = false;
    for (const auto& v : candidates[i]) {
      if (!nat_leq(ring, v, set.ceilings[i])) continue;
      if (ring.eq(v, set.ceilings[i])) {
        if (has_ceiling) continue;
        has_ceiling = true;
      }
      below[i].push_back(v);
    }
    if (!has_ceiling) below[i].push_back(set.ceilings[i]);
  }

  auto contains_all = [](const IndexSet& tight, const IndexSet& family) {
    return std::includes(tight.begin(), tight.end(), family.begin(), family.end());
  };

  std::size_t count = 0;
  bool stop = false;
  std::vector<V> x = set.ceilings;
  for (std::size_t f = 0; f < set.minimal_families.size() && !stop; ++f) {
    const auto& family = set.minimal_families[f];
    std::vector<bool> fixed(n, false);
    for (auto i : family) fixed[i] = true;

    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (stop) return;
      if (i == n) {
        const auto tight = tight_set(ring, set, std::span<const V>(x));
        for (std::size_t g = 0; g < f; ++g)
          if (contains_all(tight, set.minimal_families[g])) return;
        ++count;
        if (!detail::visit(visitor, x)) stop = true;
        return;
      }
      if (fixed[i]) {
        x[i] = set.ceilings[i];
        fill(i + 1);
        return;
      }
      for (const auto& v : below[i]) {
        x[i] = v;
        fill(i + 1);
        if (stop) return;
      }
    };
    fill(0);
  }
  return count;
}

}  // namespace idemlin
