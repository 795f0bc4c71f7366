#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace idemlin;
using idemlin::testing::fixture;
using io::json;

TEST_CASE("rationals") {
  CHECK(io::parse_rational("3/6") == Rational(1, 2));
  CHECK(io::parse_rational("-7") == Rational(-7));
  CHECK(io::format_rational(Rational(-4, 6)) == "-2/3");
  CHECK(io::format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(io::parse_rational("1/0"), io::ParseError);
  CHECK_THROWS_AS(io::parse_rational("x/2"), io::ParseError);
  CHECK_THROWS_AS(io::parse_rational(""), io::ParseError);
}

TEST_CASE("element codecs") {
  const MaxPlusRat q;
  CHECK(io::Codec<MaxPlusRat>::parse(q, json("1/3")) == Rational(1, 3));
  CHECK(io::Codec<MaxPlusRat>::dump(q, Rational(4)) == json(4));
  CHECK(io::Codec<MaxPlusRat>::dump(q, Rational(1, 3)) == json("1/3"));

  const auto trop = tropicalize(IntegerAddition{});
  CHECK(io::Codec<Tropicalized<IntegerAddition>>::parse(trop, json("inf")).is_infinite());
  CHECK(io::Codec<Tropicalized<IntegerAddition>>::dump(trop, Tropicalized<IntegerAddition>::value_type(3)) == json(3));
  CHECK_THROWS_AS(io::Codec<Tropicalized<IntegerAddition>>::parse(trop, json("oo")), io::ParseError);

  const FractionSemiring<MaxTimesNat> fr{MaxTimesNat{}};
  const auto f = io::Codec<FractionSemiring<MaxTimesNat>>::parse(fr, json("2/3"));
  CHECK(f.num == 2u);
  CHECK(f.den == 3u);
  CHECK(io::Codec<FractionSemiring<MaxTimesNat>>::dump(fr, f) == json("2/3"));
  CHECK(fr.eq(io::Codec<FractionSemiring<MaxTimesNat>>::parse(fr, json(4)), fr.embed(4)));
  CHECK_THROWS_AS(io::Codec<MaxTimesNat>::parse(MaxTimesNat{}, json(0)), io::ParseError);

  const auto mmr = mmr_semiring();
  CHECK_THROWS_AS(io::Codec<FiniteSemiring>::parse(mmr, json(6)), io::ParseError);
  CHECK_THROWS_AS(io::Codec<MaxPlusInt>::parse(MaxPlusInt{}, json(1.5)), io::ParseError);
}

TEST_CASE("matrices") {
  const MaxPlusInt zp;
  const auto bare = io::parse_matrix(zp, json::parse("[[1,2],[3,4]]"));
  CHECK(bare == Matrix<std::int64_t>::from_rows({{1, 2}, {3, 4}}));
  CHECK(io::parse_matrix(zp, io::dump_matrix(zp, bare)) == bare);
  CHECK_THROWS_AS(io::parse_matrix(zp, json::parse("[[1,2],[3]]")), io::ParseError);
  CHECK_THROWS_AS(io::parse_matrix(zp, json::parse(R"({"rows":3,"cols":2,"entries":[[1,2],[3,4]]})")), io::ParseError);
}

TEST_CASE("fixture systems") {
  const auto j1 = io::read_json_file(fixture("example1.json"));
  const auto sys = io::parse_system(MaxPlusInt{}, j1, Orientation::ax);
  CHECK(sys.a == testing::example1().a);
  CHECK(sys.y == testing::example1().y);
  CHECK_THROWS_AS(io::parse_system(MaxPlusInt{}, j1, Orientation::xa), io::ParseError);

  const auto j2 = io::read_json_file(fixture("example2.json"));
  CHECK(io::parse_system(MaxPlusInt{}, j2, Orientation::ax).a == testing::example2().a);
}

TEST_CASE("fixture tables round trip") {
  for (const char* name : {"mmr6.json", "boolean.json", "corrupted-boolean.json"}) {
    const auto j = io::read_json_file(fixture(name));
    const auto t = io::parse_table(j);
    CHECK(io::parse_table(io::dump_table(t)) == t);
  }
  CHECK(io::parse_table(io::read_json_file(fixture("mmr6.json"))) == mmr_table());
  CHECK(io::parse_table(io::read_json_file(fixture("boolean.json"))) == boolean_table());
  CHECK_THROWS_AS(io::parse_finite_semiring(io::read_json_file(fixture("corrupted-boolean.json"))), InvalidSemiring);
}

TEST_CASE("instance round trip") {
  const auto inst = io::parse_instance(io::read_json_file(fixture("paper-instance.json")));
  const auto dumped = io::dump_instance(inst);
  const auto again = io::parse_instance(dumped);
  CHECK(again.params.m1 == inst.params.m1);
  CHECK(again.params.m2 == inst.params.m2);
  CHECK(again.params.s == inst.params.s);
  CHECK(again.params.k == inst.params.k);
  CHECK(again.a == inst.a);
  CHECK(io::dump_instance(again) == dumped);
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(io::read_json_file(fixture("missing.json")), io::ParseError);
  CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"semiring":"mmr6"})")), io::ParseError);
  CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"semiring":"mmr6","M1":[[0]],"M2":[[0,1],[1,0]],"S":[[1]]})")),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_finite_semiring(json("z7")), io::ParseError);
}
