#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "idemlin/errors.hpp"
#include "idemlin/semiring.hpp"

namespace idemlin {

using Rational = boost::multiprecision::cpp_rational;

/// Selective addition: a + b is a or b.
template <PreSemiring R>
bool is_selective_pair(const R& ring, const value_t<R>& a, const value_t<R>& b) {
  const auto s = ring.add(a, b);
  return ring.eq(s, a) || ring.eq(s, b);
}

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("max-plus product overflows int64");
  return out;
}

inline std::int64_t checked_neg(std::int64_t a) {
  std::int64_t out;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &out)) throw std::overflow_error("max-plus inverse overflows int64");
  return out;
}

}  // namespace detail

/// (Z, max, +). Multiplicative group; no additive identity.
struct MaxPlusInt {
  using value_type = std::int64_t;

  value_type add(value_type a, value_type b) const { return a < b ? b : a; }
  value_type mul(value_type a, value_type b) const { return detail::checked_add(a, b); }
  bool eq(value_type a, value_type b) const { return a == b; }
  value_type one() const { return 0; }
  std::weak_ordering compare(value_type a, value_type b) const { return a <=> b; }
  std::optional<value_type> inverse(value_type a) const { return detail::checked_neg(a); }
  bool is_cancellative() const { return true; }
  std::optional<value_type> divide_exact(value_type a, value_type b) const {
    return detail::checked_add(a, detail::checked_neg(b));
  }
};

/// (Q, max, +) over exact rationals.
struct MaxPlusRat {
  using value_type = Rational;

  value_type add(const value_type& a, const value_type& b) const { return a < b ? b : a; }
  value_type mul(const value_type& a, const value_type& b) const { return a + b; }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  value_type one() const { return 0; }
  std::weak_ordering compare(const value_type& a, const value_type& b) const {
    if (a < b) return std::weak_ordering::less;
    if (b < a) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }
  std::optional<value_type> inverse(const value_type& a) const { return value_type(-a); }
  bool is_cancellative() const { return true; }
};

/// (N>=1, max, *). Cancellative but not a group; elements must be positive.
struct MaxTimesNat {
  using value_type = std::uint64_t;

  value_type add(value_type a, value_type b) const { return a < b ? b : a; }
  value_type mul(value_type a, value_type b) const {
    value_type out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("max-times product overflows uint64");
    return out;
  }
  bool eq(value_type a, value_type b) const { return a == b; }
  value_type one() const { return 1; }
  std::weak_ordering compare(value_type a, value_type b) const { return a <=> b; }
  bool is_cancellative() const { return true; }
  std::optional<value_type> divide_exact(value_type a, value_type b) const {
    if (b == 0 || a % b != 0) return std::nullopt;
    return a / b;
  }
};

// ---------------------------------------------------------------------------
// Tropicalization of a totally ordered semigroup.

template <class S>
concept OrderedSemigroup = std::copy_constructible<S> && requires(const S& s, const typename S::value_type& a) {
  typename S::value_type;
  { s.op(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.compare(a, a) } -> std::convertible_to<std::weak_ordering>;
};

/// (Z, +) as an ordered group.
struct IntegerAddition {
  using value_type = std::int64_t;
  value_type op(value_type a, value_type b) const { return detail::checked_add(a, b); }
  std::weak_ordering compare(value_type a, value_type b) const { return a <=> b; }
  value_type identity() const { return 0; }
  std::optional<value_type> inverse(value_type a) const { return detail::checked_neg(a); }
};

/// Either a finite payload or the adjoined infinity.
template <class T>
class TropValue {
 public:
  TropValue(T finite) : value_(std::move(finite)) {}  // NOLINT(google-explicit-constructor)
  static TropValue infinity() { return TropValue(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const T& finite() const { return *value_; }

  friend bool operator==(const TropValue&, const TropValue&) = default;

 private:
  TropValue() = default;
  std::optional<T> value_;
};

/// Trop(S) = S u {inf}: max as addition, the semigroup operation as
/// multiplication, inf absorbing for both. There is no additive identity
/// unless S has a minimum, so this is a PreSemiring only.
template <OrderedSemigroup S>
class Tropicalized {
 public:
  using value_type = TropValue<typename S::value_type>;

  Tropicalized() = default;
  explicit Tropicalized(S semigroup) : s_(std::move(semigroup)) {}

  value_type add(const value_type& a, const value_type& b) const {
    if (a.is_infinite() || b.is_infinite()) return value_type::infinity();
    return s_.compare(a.finite(), b.finite()) < 0 ? b : a;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.is_infinite() || b.is_infinite()) return value_type::infinity();
    return value_type(s_.op(a.finite(), b.finite()));
  }
  bool eq(const value_type& a, const value_type& b) const {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
    return s_.compare(a.finite(), b.finite()) == 0;
  }
  std::weak_ordering compare(const value_type& a, const value_type& b) const {
    if (a.is_infinite()) return b.is_infinite() ? std::weak_ordering::equivalent : std::weak_ordering::greater;
    if (b.is_infinite()) return std::weak_ordering::less;
    return s_.compare(a.finite(), b.finite());
  }
  value_type one() const
    requires requires(const S& s) { s.identity(); }
  {
    return value_type(s_.identity());
  }
  std::optional<value_type> inverse(const value_type& a) const
    requires requires(const S& s, const typename S::value_type& v) { s.inverse(v); }
  {
    if (a.is_infinite()) return std::nullopt;
    auto inv = s_.inverse(a.finite());
    if (!inv) return std::nullopt;
    return value_type(*inv);
  }
  bool is_cancellative() const { return false; }

  const S& semigroup() const noexcept { return s_; }

 private:
  S s_{};
};

template <OrderedSemigroup S>
Tropicalized<S> tropicalize(S semigroup) {
  return Tropicalized<S>(std::move(semigroup));
}

// ---------------------------------------------------------------------------
// Fractions of a cancellative, commutative generalized tropical semiring.

template <class V>
struct Fraction {
  V num;
  V den;
};

template <class R>
concept CancellativeTropical = TotallyOrdered<R> && HasOne<R> && requires(const R& r) {
  { r.is_cancellative() } -> std::convertible_to<bool>;
};

/// Q(R): representatives are kept unreduced; equality and order go through
/// cross multiplication, a/b <= c/d iff a*d <= b*c.
template <CancellativeTropical R>
class FractionSemiring {
 public:
  using base_value = value_t<R>;
  using value_type = Fraction<base_value>;

  explicit FractionSemiring(R base) : base_(std::move(base)) {
    if (!base_.is_cancellative()) throw NotCancellative();
  }

  value_type add(const value_type& a, const value_type& b) const { return compare(a, b) < 0 ? b : a; }
  value_type mul(const value_type& a, const value_type& b) const {
    return {base_.mul(a.num, b.num), base_.mul(a.den, b.den)};
  }
  bool eq(const value_type& a, const value_type& b) const {
    return base_.eq(base_.mul(a.num, b.den), base_.mul(a.den, b.num));
  }
  std::weak_ordering compare(const value_type& a, const value_type& b) const {
    return base_.compare(base_.mul(a.num, b.den), base_.mul(a.den, b.num));
  }
  value_type one() const { return {base_.one(), base_.one()}; }
  std::optional<value_type> inverse(const value_type& a) const { return value_type{a.den, a.num}; }
  bool is_cancellative() const { return true; }

  value_type embed(const base_value& a) const { return {a, base_.one()}; }

  /// The base element equal to a, if there is one.
  std::optional<base_value> restrict(const value_type& a) const
    requires requires(const R& r, const base_value& v) {
      { r.divide_exact(v, v) } -> std::convertible_to<std::optional<base_value>>;
    }
  {
    return base_.divide_exact(a.num, a.den);
  }

  const R& base() const noexcept { return base_; }

 private:
  R base_;
};

}  // namespace idemlin
