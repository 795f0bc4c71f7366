#include <random>
#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace idemlin;
using idemlin::testing::random_matrix;

TEST_CASE("natural order") {
  const MaxPlusInt zp;
  CHECK(nat_leq(zp, 3, 7));
  CHECK_FALSE(nat_leq(zp, 7, 3));
  CHECK(nat_leq(zp, -4, -4));

  const auto r = mmr_semiring();
  CHECK(nat_leq(r, 2u, 1u));
  for (auto a : r.elements()) CHECK(nat_leq(r, a, a));
}

TEST_CASE("vector order") {
  const MaxPlusInt zp;
  const std::vector<std::int64_t> a{3, 3}, b{7, 9}, c{3, 10};
  CHECK(vec_leq(zp, std::span<const std::int64_t>(a), std::span<const std::int64_t>(b)));
  CHECK_FALSE(vec_leq(zp, std::span<const std::int64_t>(c), std::span<const std::int64_t>(b)));
  CHECK(vec_leq(zp, std::span<const std::int64_t>(b), std::span<const std::int64_t>(b)));
  const std::vector<std::int64_t> shorter{1};
  CHECK_THROWS_AS(vec_leq(zp, std::span<const std::int64_t>(shorter), std::span<const std::int64_t>(b)), DimensionError);
}

TEST_CASE("matrix product over max-plus") {
  const MaxPlusInt zp;
  const auto a = Matrix<std::int64_t>::from_rows({{0, 2}, {1, 0}});
  const auto b = Matrix<std::int64_t>::from_rows({{0}, {3}});
  CHECK(mat_mul(zp, a, b) == Matrix<std::int64_t>::from_rows({{5}, {3}}));
  CHECK(mat_add(zp, a, a) == a);
  CHECK_THROWS_AS(mat_mul(zp, a, Matrix<std::int64_t>::from_rows({{1, 2, 3}})), DimensionError);
  CHECK_THROWS_AS(mat_add(zp, a, b), DimensionError);
}

TEST_CASE("scalar multiplication respects the side") {
  const auto r = mmr_semiring();
  const auto m = Matrix<std::uint32_t>::from_rows({{4}});
  CHECK(scalar_mul(r, 5u, m, Side::left) == Matrix<std::uint32_t>::from_rows({{2}}));
  CHECK(scalar_mul(r, 5u, m, Side::right) == Matrix<std::uint32_t>::from_rows({{r.mul(4, 5)}}));
}

TEST_CASE("powers and polynomial evaluation") {
  const auto r = mmr_semiring();
  std::mt19937_64 rng(11);
  const auto carrier = r.elements();
  const auto m = random_matrix(rng, 3, 3, carrier);
  const auto id = identity_matrix(r, 3);

  CHECK(mat_pow(r, m, 0) == id);
  CHECK(mat_pow(r, id, 7) == id);
  CHECK(mat_pow(r, m, 2) == mat_mul(r, m, m));
  CHECK(mat_pow(r, m, 3) == mat_mul(r, mat_mul(r, m, m), m));
  CHECK_THROWS_AS(mat_pow(r, random_matrix(rng, 2, 3, carrier), 2), DimensionError);

  for (auto c : carrier) CHECK(poly_eval(r, Polynomial<std::uint32_t>({c}), m) == scalar_mul(r, c, id, Side::left));
  CHECK(poly_eval(r, Polynomial<std::uint32_t>({r.zero()}), m) == zero_matrix(r, 3, 3));
  CHECK(poly_eval(r, Polynomial<std::uint32_t>({r.zero(), r.one()}), m) == m);
  CHECK_THROWS_AS(Polynomial<std::uint32_t>(std::vector<std::uint32_t>{}), DimensionError);
}

TEST_CASE("polynomial evaluation is additive in the coefficients") {
  const auto r = mmr_semiring();
  const auto carrier = r.elements();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> deg(0, 4), pick(0, carrier.size() - 1);
  auto random_poly = [&] {
    std::vector<std::uint32_t> c(deg(rng) + 1);
    for (auto& e : c) e = carrier[pick(rng)];
    return Polynomial<std::uint32_t>(c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 3, 3, carrier);
    const auto p = random_poly();
    const auto q = random_poly();
    CHECK(poly_eval(r, poly_add(r, p, q), m) == mat_add(r, poly_eval(r, p, m), poly_eval(r, q, m)));
  }
}

TEST_CASE("order compatibility") {
  // a <= b implies a+c <= b+c, ac <= bc and ca <= cb; checked on random
  // triples of the finite semirings and of bounded max-plus integers.
  std::mt19937_64 rng(2024);
  std::size_t cases = 0;

  auto check_ring = [&](const auto& ring, auto draw) {
    for (int t = 0; t < 1000; ++t) {
      auto a = draw();
      auto b = draw();
      const auto c = draw();
      if (!nat_leq(ring, a, b)) b = ring.add(a, b);
      REQUIRE(nat_leq(ring, a, b));
      CHECK(nat_leq(ring, ring.add(a, c), ring.add(b, c)));
      CHECK(nat_leq(ring, ring.mul(a, c), ring.mul(b, c)));
      CHECK(nat_leq(ring, ring.mul(c, a), ring.mul(c, b)));
      ++cases;
    }
  };

  const auto mmr = mmr_semiring();
  std::uniform_int_distribution<std::uint32_t> six(0, 5);
  check_ring(mmr, [&] { return six(rng); });

  const auto boolean = boolean_semiring();
  std::uniform_int_distribution<std::uint32_t> two(0, 1);
  check_ring(boolean, [&] { return two(rng); });

  std::uniform_int_distribution<std::int64_t> ints(-1000, 1000);
  check_ring(MaxPlusInt{}, [&] { return ints(rng); });

  CHECK(cases == 3000);
}

TEST_CASE("natural order is a partial order on the finite semirings") {
  for (const auto& r : {mmr_semiring(), boolean_semiring()}) {
    const auto e = r.elements();
    for (auto a : e)
      for (auto b : e) {
        if (nat_leq(r, a, b) && nat_leq(r, b, a)) CHECK(a == b);
        for (auto c : e)
          if (nat_leq(r, a, b) && nat_leq(r, b, c)) CHECK(nat_leq(r, a, c));
      }
  }
}

TEST_CASE("counted wrapper tallies operations") {
  OpCounts counts;
  const Counted<MaxPlusInt> ring(MaxPlusInt{}, counts);
  const auto a = Matrix<std::int64_t>::from_rows({{1, 2}, {3, 4}});
  mat_mul(ring, a, a);
  CHECK(counts.mul == 8);
  CHECK(counts.add == 4);
  (void)ring.inverse(3);
  (void)ring.compare(1, 2);
  CHECK(counts.total() == 14);
}
