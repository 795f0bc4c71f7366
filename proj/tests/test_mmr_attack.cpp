#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "idemlin/mmr_attack.hpp"
#include "support.hpp"

using namespace idemlin;
using namespace idemlin::mmr;
using idemlin::testing::fixture;
using idemlin::testing::for_each_vector;
using idemlin::testing::random_matrix;

namespace {

ProtocolParams random_params(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  const auto ring = mmr_semiring();
  const auto carrier = ring.elements();
  return ProtocolParams{ring, random_matrix(rng, n, n, carrier), random_matrix(rng, n, n, carrier),
                        random_matrix(rng, n, n, carrier), k};
}

// d_{i,j} = p_i q_j: the coefficient table the protocol actually used.
ElementMatrix true_table(const ProtocolParams& params, const KeyPair& keys) {
  ElementMatrix d(params.k, params.k, params.ring.zero());
  for (std::size_t i = 0; i < keys.p.size(); ++i)
    for (std::size_t j = 0; j < keys.q.size(); ++j) d(i, j) = params.ring.mul(keys.p[i], keys.q[j]);
  return d;
}

}  // namespace

TEST_CASE("key pairs") {
  std::mt19937_64 rng(1);
  const auto params = random_params(rng, 3, 2);
  const auto& r = params.ring;
  const auto one = make_keypair(params, ElementPolynomial({r.one()}), ElementPolynomial({r.one()}));
  CHECK(one.public_value == params.s);
  const auto zero = make_keypair(params, ElementPolynomial({r.zero()}), ElementPolynomial({r.zero()}));
  CHECK(zero.public_value == zero_matrix(r, 3, 3));
  CHECK_THROWS_AS(make_keypair(params, ElementPolynomial({2}), ElementPolynomial({1})), std::invalid_argument);

  CHECK(shared_key(params, one, params.m1) == params.m1);
  CHECK(shared_key(params, keygen(params, rng), zero_matrix(r, 3, 3)) == zero_matrix(r, 3, 3));
}

TEST_CASE("random key pair at the reference size") {
  std::mt19937_64 rng(2);
  const auto params = random_params(rng, 20, 51);
  const auto keys = keygen(params, rng);
  CHECK(keys.public_value.rows() == 20);
  CHECK(keys.public_value.cols() == 20);
  for (auto e : keys.public_value.entries()) CHECK(e < 6u);
}

TEST_CASE("both parties compute the same key") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto params = random_params(rng, 4, 5);
    const auto alice = keygen(params, rng);
    const auto bob = keygen(params, rng);
    REQUIRE(shared_key(params, alice, bob.public_value) == shared_key(params, bob, alice.public_value));
  }
}

TEST_CASE("attack system layout") {
  std::mt19937_64 rng(4);
  auto params = random_params(rng, 3, 1);
  const auto a = keygen(params, rng).public_value;
  const auto one = build_attack_system(params, a);
  CHECK(one.unknowns() == 1);
  CHECK(one.equations() == 9);
  CHECK(std::vector<Element>(one.coefficients(0).begin(), one.coefficients(0).end()) == params.s.entries());
  CHECK(one.y == a.entries());

  params.k = 3;
  const auto sys = build_attack_system(params, a);
  const auto& r = params.ring;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto expected = mat_mul(r, mat_mul(r, mat_pow(r, params.m1, i), params.s), mat_pow(r, params.m2, j));
      const auto row = sys.coefficients(i * 3 + j);
      const ElementMatrix reshaped(3, 3, std::vector<Element>(row.begin(), row.end()));
      CHECK(reshaped == expected);
    }
  }
}

TEST_CASE("flattening round trip") {
  std::mt19937_64 rng(5);
  const auto m = random_matrix(rng, 4, 4, mmr_semiring().elements());
  CHECK(ElementMatrix(4, 4, m.entries()) == m);
  CHECK(m.entries()[1 * 4 + 2] == m(1, 2));
}

TEST_CASE("small instance agrees with brute force over central tables") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto params = random_params(rng, 2, 2);
    const auto& r = params.ring;
    const auto alice = make_keypair(params, ElementPolynomial({1, 0}), ElementPolynomial({0, 1}));
    const auto bob = keygen(params, rng);
    const auto out = attack(params, alice.public_value, bob.public_value);
    CHECK(out.verified);

    // The join of every central table reproducing A is the maximal one.
    const auto central = center(r);
    std::vector<Element> join(4, r.zero());
    bool any = false;
    for_each_vector(central, 4, [&](const std::vector<Element>& d) {
      if (apply_function(params, ElementMatrix(2, 2, d), params.s) == alice.public_value) {
        any = true;
        for (std::size_t t = 0; t < 4; ++t) join[t] = r.add(join[t], d[t]);
      }
    });
    REQUIRE(any);
    CHECK(out.d.entries() == join);
    CHECK(out.recovered_key == shared_key(params, bob, alice.public_value));
  }
}

TEST_CASE("recovered tables are maximal, central and recover the key") {
  std::mt19937_64 rng(7);
  const auto central = center(mmr_semiring());
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 2}, {4, 5}, {8, 11}}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto params = random_params(rng, n, k);
      const auto ex = simulate_exchange(params, rng());
      CHECK(ex.alice_key == ex.bob_key);
      const auto out = attack(params, ex.alice.public_value, ex.bob.public_value);
      CHECK(out.verified);
      CHECK(out.recovered_key == ex.alice_key);
      const auto truth = true_table(params, ex.alice);
      CHECK(vec_leq(params.ring, std::span<const Element>(truth.entries()), std::span<const Element>(out.d.entries())));
      for (auto e : out.d.entries()) CHECK(std::binary_search(central.begin(), central.end(), e));
    }
  }
}

TEST_CASE("a target outside the protocol image is incompatible") {
  std::mt19937_64 rng(8);
  auto params = random_params(rng, 2, 2);
  const auto& r = params.ring;
  params.s = zero_matrix(r, 2, 2);
  auto a = zero_matrix(r, 2, 2);
  a(0, 1) = 3;
  CHECK_THROWS_AS(attack(params, a), IncompatibleSystem);
}

TEST_CASE("rendering") {
  const auto r = mmr_semiring();
  CHECK(render_function(r, zero_matrix(r, 3, 3)).empty());
  CHECK(format_function(r, {}) == "0");
  auto d = zero_matrix(r, 3, 3);
  d(0, 0) = r.one();
  const auto single = render_function(r, d);
  REQUIRE(single.size() == 1);
  CHECK(format_term(r, single[0]) == "Z");
  d(1, 2) = r.one();
  d(2, 0) = r.one();
  CHECK(format_function(r, render_function(r, d)) == "Z + X^1 Z Y^2 + X^2 Z");
}

TEST_CASE("reference instance") {
  const auto inst = io::parse_instance(io::read_json_file(fixture("paper-instance.json")));
  CHECK(inst.params.dimension() == 20);
  CHECK(inst.params.k == 51);
  REQUIRE(inst.a.has_value());

  const auto sys = build_attack_system(inst.params, *inst.a);
  CHECK(sys.unknowns() == 2601);
  CHECK(sys.equations() == 400);

  const auto out = attack(inst.params, *inst.a);
  CHECK(out.verified);
  CHECK(apply_function(inst.params, out.d, inst.params.s) == *inst.a);

  const auto terms = render_function(inst.params.ring, out.d);
  CHECK(std::find(terms.begin(), terms.end(), Term{1, 5, 1}) != terms.end());
  std::set<std::size_t> x_powers;
  for (const auto& t : terms) x_powers.insert(t.x_power);
  CHECK(x_powers.count(5) == 0);
  CHECK(x_powers == std::set<std::size_t>{1, 2, 3, 4, 6, 7, 9});
}
