#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idemlin/finite_semiring.hpp"
#include "idemlin/linear_solver.hpp"
#include "idemlin/matrix.hpp"

namespace idemlin::mmr {

/*
 * Two-sided polynomial key exchange over a finite semiring R:
 *
 *   public       M1, M2, S in Mat_n(R)
 *   Alice        p_a, q_a with central coefficients; sends A = p_a(M1) S q_a(M2)
 *   Bob          p_b, q_b;                          sends B = p_b(M1) S q_b(M2)
 *   shared key   p_a(M1) B q_a(M2) = p_b(M1) A q_b(M2)
 *
 * The attack treats A = sum_{i,j<k} d_{i,j} M1^i S M2^j as a linear system in
 * the k^2 central unknowns d_{i,j}. Its maximal solution gives a function F
 * with F[M1, S, M2] = A, and then F[M1, B, M2] is the shared key.
 */

using Element = FiniteSemiring::value_type;
using ElementMatrix = Matrix<Element>;
using ElementPolynomial = Polynomial<Element>;

struct ProtocolParams {
  FiniteSemiring ring;
  ElementMatrix m1;
  ElementMatrix m2;
  ElementMatrix s;
  std::size_t k = 1;  ///< coefficient count per polynomial (degree bound + 1)

  std::size_t dimension() const noexcept { return s.rows(); }
  /// Square matrices of one size, entries inside the carrier, k >= 1.
  void validate() const;
};

struct KeyPair {
  ElementPolynomial p;
  ElementPolynomial q;
  ElementMatrix public_value;  ///< p(M1) S q(M2)
};

/// Builds a key pair from explicit polynomials; throws std::invalid_argument
/// if a coefficient is not central.
KeyPair make_keypair(const ProtocolParams& params, ElementPolynomial p, ElementPolynomial q);

/// Draws k central coefficients per polynomial uniformly.
template <std::uniform_random_bit_generator Rng>
KeyPair keygen(const ProtocolParams& params, Rng& rng) {
  const auto central = center(params.ring);
  std::uniform_int_distribution<std::size_t> pick(0, central.size() - 1);
  auto draw = [&] {
    std::vector<Element> coeffs(params.k);
    for (auto& c : coeffs) c = central[pick(rng)];
    return ElementPolynomial(std::move(coeffs));
  };
  auto p = draw();
  auto q = draw();
  return make_keypair(params, std::move(p), std::move(q));
}

/// p(M1) . other_public . q(M2) with the caller's own polynomials.
ElementMatrix shared_key(const ProtocolParams& params, const KeyPair& own, const ElementMatrix& other_public);

/// Unknown (i, j) sits at row i*k + j; its coefficients are the row-major
/// flattening of M1^i S M2^j, and Y is the flattening of A.
LinearSystem<FiniteSemiring> build_attack_system(const ProtocolParams& params, const ElementMatrix& a);

/// sum_{i,j} d_{i,j} M1^i X M2^j, reusing the power streams across terms.
ElementMatrix apply_function(const ProtocolParams& params, const ElementMatrix& d, const ElementMatrix& x);

struct AttackStats {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t carrier_size = 0;
  std::uint64_t membership_checks = 0;
};

struct AttackOutput {
  ElementMatrix d;  ///< k x k, d(i, j) multiplies M1^i Z M2^j
  bool verified = false;
  std::optional<ElementMatrix> recovered_key;
  AttackStats stats;
};

/// Solves the attack system over the center of R. Throws IncompatibleSystem
/// when A cannot come from the protocol with at most k terms per polynomial.
/// The key is recovered when Bob's public value is supplied.
AttackOutput attack(const ProtocolParams& params, const ElementMatrix& a,
                    const std::optional<ElementMatrix>& b = std::nullopt);

struct Term {
  std::size_t x_power;
  std::size_t y_power;
  Element coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Nonzero d_{i,j} in (i, j) lexicographic order.
std::vector<Term> render_function(const FiniteSemiring& ring, const ElementMatrix& d);

/// "X^i Z Y^j", dropping zero powers and a unit coefficient; e.g. "Z", "X^1 Z Y^5", "3 X^2 Z".
std::string format_term(const FiniteSemiring& ring, const Term& term);
std::string format_function(const FiniteSemiring& ring, const std::vector<Term>& terms);

struct Exchange {
  std::uint64_t seed = 0;
  KeyPair alice;
  KeyPair bob;
  ElementMatrix alice_key;  ///< computed by Alice from B
  ElementMatrix bob_key;    ///< computed by Bob from A
};

/// Full exchange with both parties drawing from one mt19937_64 seeded by `seed`
/// (Alice first).
Exchange simulate_exchange(const ProtocolParams& params, std::uint64_t seed);

}  // namespace idemlin::mmr
