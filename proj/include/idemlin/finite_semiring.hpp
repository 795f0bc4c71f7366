#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idemlin/errors.hpp"
#include "idemlin/semiring.hpp"

namespace idemlin {

enum class Axiom {
  add_associativity,
  add_commutativity,
  add_identity,
  add_idempotency,
  mul_associativity,
  mul_identity,
  left_distributivity,
  right_distributivity,
  zero_absorption,
  zero_ne_one,
};

inline constexpr std::array<Axiom, 10> kAllAxioms = {
    Axiom::add_associativity,  Axiom::add_commutativity,   Axiom::add_identity,
    Axiom::add_idempotency,    Axiom::mul_associativity,   Axiom::mul_identity,
    Axiom::left_distributivity, Axiom::right_distributivity, Axiom::zero_absorption,
    Axiom::zero_ne_one,
};

std::string_view axiom_name(Axiom axiom);

enum class AxiomStatus { passed, failed, not_applicable };

struct AxiomResult {
  Axiom axiom;
  AxiomStatus status = AxiomStatus::passed;
  /// Positions (into the checked carrier or sample) of a violating tuple.
  std::vector<std::size_t> counterexample;
};

struct ValidationReport {
  std::array<AxiomResult, 10> results;

  ValidationReport();

  const AxiomResult& at(Axiom axiom) const { return results[static_cast<std::size_t>(axiom)]; }
  AxiomResult& at(Axiom axiom) { return results[static_cast<std::size_t>(axiom)]; }

  /// No axiom failed (axioms that did not apply are ignored).
  bool passed() const;
  /// Every axiom applied and passed.
  bool complete() const;
};

namespace detail {

inline void fail(AxiomResult& r, std::vector<std::size_t> witness) {
  if (r.status == AxiomStatus::failed) return;
  r.status = AxiomStatus::failed;
  r.counterexample = std::move(witness);
}

}  // namespace detail

/// Checks every applicable axiom over all singletons, pairs and triples of
/// `carrier`. Exhaustive when `carrier` is the full carrier, a sampled check
/// otherwise. Axioms mentioning zero or one are reported not_applicable when
/// the descriptor has no such identity.
template <PreSemiring R>
ValidationReport check_axioms(const R& ring, std::span<const value_t<R>> carrier) {
  ValidationReport report;
  const std::size_t q = carrier.size();
  const auto& e = carrier;

  for (std::size_t a = 0; a < q; ++a) {
    if (!ring.eq(ring.add(e[a], e[a]), e[a])) detail::fail(report.at(Axiom::add_idempotency), {a});
    for (std::size_t b = 0; b < q; ++b) {
      if (!ring.eq(ring.add(e[a], e[b]), ring.add(e[b], e[a])))
        detail::fail(report.at(Axiom::add_commutativity), {a, b});
      for (std::size_t c = 0; c < q; ++c) {
        if (!ring.eq(ring.add(ring.add(e[a], e[b]), e[c]), ring.add(e[a], ring.add(e[b], e[c]))))
          detail::fail(report.at(Axiom::add_associativity), {a, b, c});
        if (!ring.eq(ring.mul(ring.mul(e[a], e[b]), e[c]), ring.mul(e[a], ring.mul(e[b], e[c]))))
          detail::fail(report.at(Axiom::mul_associativity), {a, b, c});
        if (!ring.eq(ring.mul(e[a], ring.add(e[b], e[c])), ring.add(ring.mul(e[a], e[b]), ring.mul(e[a], e[c]))))
          detail::fail(report.at(Axiom::left_distributivity), {a, b, c});
        if (!ring.eq(ring.mul(ring.add(e[a], e[b]), e[c]), ring.add(ring.mul(e[a], e[c]), ring.mul(e[b], e[c]))))
          detail::fail(report.at(Axiom::right_distributivity), {a, b, c});
      }
    }
  }

  if constexpr (HasZero<R>) {
    const auto z = ring.zero();
    for (std::size_t a = 0; a < q; ++a) {
      if (!ring.eq(ring.add(z, e[a]), e[a])) detail::fail(report.at(Axiom::add_identity), {a});
      if (!ring.eq(ring.mul(z, e[a]), z) || !ring.eq(ring.mul(e[a], z), z))
        detail::fail(report.at(Axiom::zero_absorption), {a});
    }
  } else {
    report.at(Axiom::add_identity).status = AxiomStatus::not_applicable;
    report.at(Axiom::zero_absorption).status = AxiomStatus::not_applicable;
  }

  if constexpr (HasOne<R>) {
    const auto o = ring.one();
    for (std::size_t a = 0; a < q; ++a) {
      if (!ring.eq(ring.mul(o, e[a]), e[a]) || !ring.eq(ring.mul(e[a], o), e[a]))
        detail::fail(report.at(Axiom::mul_identity), {a});
    }
  } else {
    report.at(Axiom::mul_identity).status = AxiomStatus::not_applicable;
  }

  if constexpr (Semiring<R>) {
    if (ring.eq(ring.zero(), ring.one())) detail::fail(report.at(Axiom::zero_ne_one), {});
  } else {
    report.at(Axiom::zero_ne_one).status = AxiomStatus::not_applicable;
  }
  return report;
}

// ---------------------------------------------------------------------------

/// Raw operation tables, entry[r][c] = r o c (left operand indexes the row).
struct CayleyTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> add;
  std::vector<std::vector<std::size_t>> mul;
  std::size_t zero = 0;
  std::size_t one = 1;
  std::vector<std::string> labels;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
};

class MalformedTable : public Error {
 public:
  using Error::Error;
};

class InvalidSemiring : public Error {
 public:
  explicit InvalidSemiring(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Exhaustive O(q^3) check of the tables. Throws MalformedTable when a
/// table is not q x q or has an entry outside the carrier.
ValidationReport validate_axioms(const CayleyTable& table);

/// Finite additively idempotent semiring backed by validated tables.
class FiniteSemiring {
 public:
  using value_type = std::uint32_t;

  /// Validates the tables; throws MalformedTable or InvalidSemiring.
  static FiniteSemiring create(CayleyTable table);

  value_type add(value_type a, value_type b) const { return data_->add[a * data_->order + b]; }
  value_type mul(value_type a, value_type b) const { return data_->mul[a * data_->order + b]; }
  bool eq(value_type a, value_type b) const { return a == b; }
  value_type zero() const { return data_->zero; }
  value_type one() const { return data_->one; }

  std::size_t order() const noexcept { return data_->order; }
  std::vector<value_type> elements() const;
  const std::string& label(value_type e) const { return data_->table.labels.at(e); }
  std::optional<value_type> find_label(std::string_view label) const;
  const CayleyTable& table() const noexcept { return data_->table; }

 private:
  struct Data {
    std::size_t order;
    std::vector<value_type> add;
    std::vector<value_type> mul;
    value_type zero;
    value_type one;
    CayleyTable table;
  };

  explicit FiniteSemiring(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// {c : c x = x c for all x}, ascending.
std::vector<FiniteSemiring::value_type> center(const FiniteSemiring& ring);

/// The six-element semiring of the polynomial key exchange
/// (zero = 0, one = 1).
CayleyTable mmr_table();
FiniteSemiring mmr_semiring();

/// ({0,1}, or, and).
CayleyTable boolean_table();
FiniteSemiring boolean_semiring();

}  // namespace idemlin
