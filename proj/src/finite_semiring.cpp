#include "idemlin/finite_semiring.hpp"

#include <algorithm>
#include <numeric>

namespace idemlin {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::add_associativity: return "add-associativity";
    case Axiom::add_commutativity: return "add-commutativity";
    case Axiom::add_identity: return "add-identity";
    case Axiom::add_idempotency: return "add-idempotency";
    case Axiom::mul_associativity: return "mul-associativity";
    case Axiom::mul_identity: return "mul-identity";
    case Axiom::left_distributivity: return "left-distributivity";
    case Axiom::right_distributivity: return "right-distributivity";
    case Axiom::zero_absorption: return "zero-absorption";
    case Axiom::zero_ne_one: return "zero-ne-one";
  }
  return "unknown";
}

ValidationReport::ValidationReport() {
  for (std::size_t i = 0; i < kAllAxioms.size(); ++i) results[i].axiom = kAllAxioms[i];
}

bool ValidationReport::passed() const {
  return std::none_of(results.begin(), results.end(),
                      [](const AxiomResult& r) { return r.status == AxiomStatus::failed; });
}

bool ValidationReport::complete() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AxiomResult& r) { return r.status == AxiomStatus::passed; });
}

InvalidSemiring::InvalidSemiring(ValidationReport report)
    : Error([&] {
        std::string msg = "tables violate semiring axioms:";
        for (const auto& r : report.results)
          if (r.status == AxiomStatus::failed) msg += " " + std::string(axiom_name(r.axiom));
        return msg;
      }()),
      report_(std::move(report)) {}

namespace {

// Table-backed descriptor used before a FiniteSemiring exists.
struct TableView {
  using value_type = std::size_t;
  const CayleyTable* t;

  value_type add(value_type a, value_type b) const { return t->add[a][b]; }
  value_type mul(value_type a, value_type b) const { return t->mul[a][b]; }
  bool eq(value_type a, value_type b) const { return a == b; }
  value_type zero() const { return t->zero; }
  value_type one() const { return t->one; }
};

void check_shape(const std::vector<std::vector<std::size_t>>& table, std::size_t q, const char* name) {
  if (table.size() != q) throw MalformedTable(std::string(name) + " table must have " + std::to_string(q) + " rows");
  for (std::size_t r = 0; r < q; ++r) {
    if (table[r].size() != q)
      throw MalformedTable(std::string(name) + " table row " + std::to_string(r) + " must have " +
                           std::to_string(q) + " entries");
    for (std::size_t c = 0; c < q; ++c) {
      if (table[r][c] >= q)
        throw MalformedTable(std::string(name) + " table entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") = " + std::to_string(table[r][c]) + " is outside the carrier");
    }
  }
}

}  // namespace

ValidationReport validate_axioms(const CayleyTable& table) {
  const std::size_t q = table.order;
  if (q == 0) throw MalformedTable("order must be positive");
  check_shape(table.add, q, "add");
  check_shape(table.mul, q, "mul");
  if (table.zero >= q || table.one >= q) throw MalformedTable("zero/one outside the carrier");
  if (!table.labels.empty() && table.labels.size() != q) throw MalformedTable("labels must name every element");

  std::vector<std::size_t> carrier(q);
  std::iota(carrier.begin(), carrier.end(), std::size_t{0});
  return check_axioms(TableView{&table}, std::span<const std::size_t>(carrier));
}

FiniteSemiring FiniteSemiring::create(CayleyTable table) {
  auto report = validate_axioms(table);
  if (!report.complete()) throw InvalidSemiring(std::move(report));

  const std::size_t q = table.order;
  if (table.labels.empty()) {
    for (std::size_t e = 0; e < q; ++e) table.labels.push_back(std::to_string(e));
  }
  auto data = std::make_shared<Data>();
  data->order = q;
  data->add.resize(q * q);
  data->mul.resize(q * q);
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c < q; ++c) {
      data->add[r * q + c] = static_cast<value_type>(table.add[r][c]);
      data->mul[r * q + c] = static_cast<value_type>(table.mul[r][c]);
    }
  }
  data->zero = static_cast<value_type>(table.zero);
  data->one = static_cast<value_type>(table.one);
  data->table = std::move(table);
  return FiniteSemiring(std::move(data));
}

std::vector<FiniteSemiring::value_type> FiniteSemiring::elements() const {
  std::vector<value_type> out(order());
  std::iota(out.begin(), out.end(), value_type{0});
  return out;
}

std::optional<FiniteSemiring::value_type> FiniteSemiring::find_label(std::string_view label) const {
  const auto& labels = data_->table.labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<value_type>(it - labels.begin());
}

std::vector<FiniteSemiring::value_type> center(const FiniteSemiring& ring) {
  std::vector<FiniteSemiring::value_type> out;
  const auto all = ring.elements();
  for (auto c : all) {
    const bool central = std::all_of(all.begin(), all.end(), [&](auto x) { return ring.mul(c, x) == ring.mul(x, c); });
    if (central) out.push_back(c);
  }
  return out;
}

CayleyTable mmr_table() {
  CayleyTable t;
  t.order = 6;
  t.add = {
      {0, 1, 2, 3, 4, 5},
      {1, 1, 1, 1, 1, 5},
      {2, 1, 2, 1, 2, 5},
      {3, 1, 1, 3, 3, 5},
      {4, 1, 2, 3, 4, 5},
      {5, 5, 5, 5, 5, 5},
  };
  t.mul = {
      {0, 0, 0, 0, 0, 0},
      {0, 1, 2, 3, 4, 5},
      {0, 2, 2, 0, 0, 5},
      {0, 3, 4, 3, 4, 3},
      {0, 4, 4, 0, 0, 3},
      {0, 5, 2, 5, 2, 5},
  };
  t.zero = 0;
  t.one = 1;
  t.labels = {"0", "1", "2", "3", "4", "5"};
  return t;
}

FiniteSemiring mmr_semiring() { return FiniteSemiring::create(mmr_table()); }

CayleyTable boolean_table() {
  CayleyTable t;
  t.order = 2;
  t.add = {{0, 1}, {1, 1}};
  t.mul = {{0, 0}, {0, 1}};
  t.zero = 0;
  t.one = 1;
  t.labels = {"0", "1"};
  return t;
}

FiniteSemiring boolean_semiring() { return FiniteSemiring::create(boolean_table()); }

}  // namespace idemlin
