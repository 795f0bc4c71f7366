#include "idemlin/mmr_attack.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace idemlin::mmr {

namespace {

void check_square(const ElementMatrix& m, std::size_t n, std::size_t order, const char* name) {
  if (m.rows() != n || m.cols() != n)
    throw DimensionError(std::string(name) + " must be " + std::to_string(n) + "x" + std::to_string(n));
  for (auto e : m.entries())
    if (e >= order) throw std::invalid_argument(std::string(name) + " has an entry outside the carrier");
}

bool is_central(const std::vector<Element>& central, Element e) {
  return std::binary_search(central.begin(), central.end(), e);
}

}  // namespace

void ProtocolParams::validate() const {
  const std::size_t n = s.rows();
  if (n == 0) throw DimensionError("protocol matrices must be nonempty");
  check_square(s, n, ring.order(), "S");
  check_square(m1, n, ring.order(), "M1");
  check_square(m2, n, ring.order(), "M2");
  if (k == 0) throw std::invalid_argument("k must be at least 1");
}

KeyPair make_keypair(const ProtocolParams& params, ElementPolynomial p, ElementPolynomial q) {
  const auto central = center(params.ring);
  for (const auto* poly : {&p, &q}) {
    for (auto c : poly->coefficients())
      if (!is_central(central, c)) throw std::invalid_argument("polynomial coefficient " + params.ring.label(c) +
                                                               " is not central");
  }
  const auto& ring = params.ring;
  auto pub = mat_mul(ring, mat_mul(ring, poly_eval(ring, p, params.m1), params.s), poly_eval(ring, q, params.m2));
  return KeyPair{std::move(p), std::move(q), std::move(pub)};
}

ElementMatrix shared_key(const ProtocolParams& params, const KeyPair& own, const ElementMatrix& other_public) {
  const auto& ring = params.ring;
  return mat_mul(ring, mat_mul(ring, poly_eval(ring, own.p, params.m1), other_public), poly_eval(ring, own.q, params.m2));
}

LinearSystem<FiniteSemiring> build_attack_system(const ProtocolParams& params, const ElementMatrix& a) {
  params.validate();
  const std::size_t n = params.dimension();
  if (a.rows() != n || a.cols() != n) throw DimensionError("A must match the protocol dimension");
  const auto& ring = params.ring;
  const std::size_t k = params.k;

  std::vector<Element> coeffs;
  coeffs.reserve(k * k * n * n);
  PowerStream<FiniteSemiring> left(ring, params.m1);
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) left.advance();
    // M1^i S, then right-multiplied by M2 once per j.
    ElementMatrix term = mat_mul(ring, left.current(), params.s);
    for (std::size_t j = 0; j < k; ++j) {
      if (j > 0) term = mat_mul(ring, term, params.m2);
      coeffs.insert(coeffs.end(), term.entries().begin(), term.entries().end());
    }
  }
  return make_system(ring, ElementMatrix(k * k, n * n, std::move(coeffs)), a.entries(), Orientation::xa);
}

ElementMatrix apply_function(const ProtocolParams& params, const ElementMatrix& d, const ElementMatrix& x) {
  const auto& ring = params.ring;
  const std::size_t k = d.rows();
  const std::size_t n = params.dimension();
  if (d.cols() != k) throw DimensionError("coefficient table must be square");
  if (x.rows() != n || x.cols() != n) throw DimensionError("argument must match the protocol dimension");

  ElementMatrix acc = zero_matrix(ring, n, n);
  PowerStream<FiniteSemiring> left(ring, params.m1);
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) left.advance();
    std::size_t last = k;
    for (std::size_t j = k; j-- > 0;) {
      if (d(i, j) != ring.zero()) {
        last = j;
        break;
      }
    }
    if (last == k) continue;
    ElementMatrix term = mat_mul(ring, left.current(), x);
    for (std::size_t j = 0; j <= last; ++j) {
      if (j > 0) term = mat_mul(ring, term, params.m2);
      if (d(i, j) != ring.zero()) acc = mat_add(ring, acc, scalar_mul(ring, d(i, j), term, Side::left));
    }
  }
  return acc;
}

AttackOutput attack(const ProtocolParams& params, const ElementMatrix& a, const std::optional<ElementMatrix>& b) {
  const auto sys = build_attack_system(params, a);
  const auto central = center(params.ring);

  const auto outcome = solve_finite(sys, std::span<const Element>(central));
  if (const auto* bad = std::get_if<Incompatible>(&outcome)) throw IncompatibleSystem(bad->equation);

  AttackOutput out;
  out.d = ElementMatrix(params.k, params.k, std::get<Solved<Element>>(outcome).maximal);
  out.verified = mat_eq(params.ring, apply_function(params, out.d, params.s), a);
  if (b) out.recovered_key = apply_function(params, out.d, *b);
  out.stats.unknowns = sys.unknowns();
  out.stats.equations = sys.equations();
  out.stats.carrier_size = central.size();
  out.stats.membership_checks = static_cast<std::uint64_t>(sys.unknowns()) * central.size();
  return out;
}

std::vector<Term> render_function(const FiniteSemiring& ring, const ElementMatrix& d) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d(i, j) != ring.zero()) terms.push_back({i, j, d(i, j)});
  return terms;
}

std::string format_term(const FiniteSemiring& ring, const Term& term) {
  std::ostringstream os;
  if (term.coefficient != ring.one()) os << ring.label(term.coefficient) << ' ';
  if (term.x_power > 0) os << "X^" << term.x_power << ' ';
  os << 'Z';
  if (term.y_power > 0) os << " Y^" << term.y_power;
  return os.str();
}

std::string format_function(const FiniteSemiring& ring, const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += format_term(ring, t);
  }
  return out;
}

Exchange simulate_exchange(const ProtocolParams& params, std::uint64_t seed) {
  params.validate();
  std::mt19937_64 rng(seed);
  Exchange ex{seed, keygen(params, rng), keygen(params, rng), {}, {}};
  ex.alice_key = shared_key(params, ex.alice, ex.bob.public_value);
  ex.bob_key = shared_key(params, ex.bob, ex.alice.public_value);
  return ex;
}

}  // namespace idemlin::mmr
