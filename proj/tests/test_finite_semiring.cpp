#include <algorithm>
#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace idemlin;

TEST_CASE("mmr tables") {
  const auto r = mmr_semiring();
  CHECK(r.order() == 6);
  CHECK(r.zero() == 0);
  CHECK(r.one() == 1);
  CHECK(r.add(2, 3) == 1);
  CHECK(r.mul(3, 2) == 4);
  CHECK(r.mul(5, 5) == 5);
  CHECK(r.mul(5, 4) == 2);
}

TEST_CASE("validation of the shipped tables") {
  for (const auto& t : {mmr_table(), boolean_table()}) {
    const auto report = validate_axioms(t);
    CHECK(report.complete());
    for (const auto& res : report.results) CHECK(res.status == AxiomStatus::passed);
  }
}

TEST_CASE("corrupted table is rejected with a counterexample") {
  auto t = boolean_table();
  t.add[1][1] = 0;
  const auto report = validate_axioms(t);
  CHECK_FALSE(report.passed());
  const auto& idem = report.at(Axiom::add_idempotency);
  CHECK(idem.status == AxiomStatus::failed);
  CHECK(idem.counterexample == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(FiniteSemiring::create(t), InvalidSemiring);
}

TEST_CASE("noncommutative addition is caught") {
  auto t = boolean_table();
  t.add[0][1] = 0;
  const auto report = validate_axioms(t);
  CHECK(report.at(Axiom::add_commutativity).status == AxiomStatus::failed);
}

TEST_CASE("malformed tables") {
  auto t = boolean_table();
  t.mul[0].push_back(0);
  CHECK_THROWS_AS(validate_axioms(t), MalformedTable);
  t = boolean_table();
  t.add[1][0] = 7;
  CHECK_THROWS_AS(validate_axioms(t), MalformedTable);
  t = boolean_table();
  t.one = 2;
  CHECK_THROWS_AS(validate_axioms(t), MalformedTable);
}

TEST_CASE("center") {
  const auto boolean = boolean_semiring();
  CHECK(center(boolean) == boolean.elements());

  const auto r = mmr_semiring();
  const auto z = center(r);
  CHECK(std::find(z.begin(), z.end(), r.zero()) != z.end());
  CHECK(std::find(z.begin(), z.end(), r.one()) != z.end());

  // Independent scan straight off the raw table.
  const auto t = mmr_table();
  std::vector<std::uint32_t> expected;
  for (std::size_t c = 0; c < t.order; ++c) {
    bool central = true;
    for (std::size_t x = 0; x < t.order; ++x) central = central && t.mul[c][x] == t.mul[x][c];
    if (central) expected.push_back(static_cast<std::uint32_t>(c));
  }
  CHECK(z == expected);
  CHECK(z == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("labels") {
  const auto r = mmr_semiring();
  for (auto e : r.elements()) CHECK(r.find_label(r.label(e)) == e);
  CHECK_FALSE(r.find_label("nope").has_value());
}
