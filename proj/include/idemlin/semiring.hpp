#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "idemlin/errors.hpp"

namespace idemlin {

/*
 * A semiring descriptor is a small value type that interprets opaque
 * elements. Descriptors carry the operations; elements carry no behaviour.
 *
 *   PreSemiring       add, mul, eq                   (no identities required)
 *   Semiring          + zero(), one()
 *   TotallyOrdered    + compare(a, b) consistent with add-as-max
 *   TropicalGroup     + inverse(a) -> optional<value_type>
 *
 * The infinite tropical carriers (Z, Q, N>=1 and tropicalized semigroups)
 * have no additive identity, so every generic algorithm that can fold over a
 * nonempty range only asks for PreSemiring.
 */

template <class R>
using value_t = typename R::value_type;

template <class R>
concept PreSemiring = std::copy_constructible<R> && requires(const R& r, const value_t<R>& a) {
  { r.add(a, a) } -> std::convertible_to<value_t<R>>;
  { r.mul(a, a) } -> std::convertible_to<value_t<R>>;
  { r.eq(a, a) } -> std::convertible_to<bool>;
};

template <class R>
concept HasZero = PreSemiring<R> && requires(const R& r) {
  { r.zero() } -> std::convertible_to<value_t<R>>;
};

template <class R>
concept HasOne = PreSemiring<R> && requires(const R& r) {
  { r.one() } -> std::convertible_to<value_t<R>>;
};

template <class R>
concept Semiring = HasZero<R> && HasOne<R>;

template <class R>
concept TotallyOrdered = PreSemiring<R> && requires(const R& r, const value_t<R>& a) {
  { r.compare(a, a) } -> std::convertible_to<std::weak_ordering>;
};

template <class R>
concept TropicalGroup = TotallyOrdered<R> && requires(const R& r, const value_t<R>& a) {
  { r.inverse(a) } -> std::convertible_to<std::optional<value_t<R>>>;
};

/// Natural order of an additively idempotent semiring: a <= b iff a + b = b.
template <PreSemiring R>
bool nat_leq(const R& ring, const value_t<R>& a, const value_t<R>& b) {
  return ring.eq(ring.add(a, b), b);
}

/// Componentwise natural order on vectors.
template <PreSemiring R>
bool vec_leq(const R& ring, std::span<const value_t<R>> x, std::span<const value_t<R>> y) {
  if (x.size() != y.size()) throw DimensionError("vec_leq: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!nat_leq(ring, x[i], y[i])) return false;
  }
  return true;
}

template <PreSemiring R>
bool vec_eq(const R& ring, std::span<const value_t<R>> x, std::span<const value_t<R>> y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!ring.eq(x[i], y[i])) return false;
  }
  return true;
}

struct OpCounts {
  std::uint64_t add = 0;
  std::uint64_t mul = 0;
  std::uint64_t inverse = 0;
  std::uint64_t compare = 0;
  std::uint64_t eq = 0;

  std::uint64_t total() const noexcept { return add + mul + inverse + compare + eq; }
};

/// Descriptor wrapper that tallies every operation into an external OpCounts.
/// Not thread-safe: give each thread its own counter.
template <PreSemiring R>
class Counted {
 public:
  using value_type = value_t<R>;

  Counted(R base, OpCounts& counts) : base_(std::move(base)), counts_(&counts) {}

  value_type add(const value_type& a, const value_type& b) const {
    ++counts_->add;
    return base_.add(a, b);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    ++counts_->mul;
    return base_.mul(a, b);
  }
  bool eq(const value_type& a, const value_type& b) const {
    ++counts_->eq;
    return base_.eq(a, b);
  }
  value_type zero() const
    requires HasZero<R>
  {
    return base_.zero();
  }
  value_type one() const
    requires HasOne<R>
  {
    return base_.one();
  }
  std::weak_ordering compare(const value_type& a, const value_type& b) const
    requires TotallyOrdered<R>
  {
    ++counts_->compare;
    return base_.compare(a, b);
  }
  std::optional<value_type> inverse(const value_type& a) const
    requires TropicalGroup<R>
  {
    ++counts_->inverse;
    return base_.inverse(a);
  }

  const R& base() const noexcept { return base_; }
  const OpCounts& counts() const noexcept { return *counts_; }

 private:
  R base_;
  OpCounts* counts_;
};

}  // namespace idemlin
