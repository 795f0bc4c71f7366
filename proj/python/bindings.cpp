// Extension module _idemlin. Structured arguments and results cross the
// boundary as JSON text; the idemlin package wraps them in dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "idemlin/finite_semiring.hpp"
#include "idemlin/hitting_sets.hpp"
#include "idemlin/io.hpp"
#include "idemlin/linear_solver.hpp"
#include "idemlin/mmr_attack.hpp"
#include "idemlin/tropical.hpp"

namespace py = pybind11;
using namespace idemlin;
using io::json;

namespace {

Orientation orientation_of(const std::string& s) {
  if (s == "xa") return Orientation::xa;
  if (s == "ax") return Orientation::ax;
  throw py::value_error("orientation must be 'xa' or 'ax'");
}

template <TropicalGroup R>
std::string solve_tropical_json(const R& ring, const std::string& system, const std::string& orientation) {
  const auto sys = io::parse_system(ring, json::parse(system), orientation_of(orientation));
  const auto set = solution_set(sys);
  auto dump_vec = [&](const std::vector<value_t<R>>& xs) {
    return io::dump_vector(ring, std::span<const value_t<R>>(xs));
  };
  json quotient = json::array();
  for (std::size_t i = 0; i < set.quotient.rows(); ++i)
    quotient.push_back(io::dump_vector(ring, set.quotient.row(i)));
  json out{{"quotient", quotient},
           {"ceilings", dump_vec(set.ceilings)},
           {"row", set.row_sets},
           {"index", set.index_sets},
           {"minimal_families", set.minimal_families}};
  const auto outcome = solve_general(sys, [&](std::size_t i) { return std::optional(set.ceilings[i]); });
  if (const auto* bad = std::get_if<Incompatible>(&outcome)) {
    out["maximal"] = nullptr;
    out["incompatible_equation"] = bad->equation;
  } else {
    out["maximal"] = dump_vec(std::get<Solved<value_t<R>>>(outcome).maximal);
  }
  return out.dump();
}

std::string solve_tropical_named(const std::string& semiring, const std::string& system,
                                 const std::string& orientation) {
  if (semiring == "max-plus-int") return solve_tropical_json(MaxPlusInt{}, system, orientation);
  if (semiring == "max-plus-rat") return solve_tropical_json(MaxPlusRat{}, system, orientation);
  if (semiring == "trop-int") return solve_tropical_json(tropicalize(IntegerAddition{}), system, orientation);
  if (semiring == "fraction-of:max-times-nat")
    return solve_tropical_json(FractionSemiring<MaxTimesNat>(MaxTimesNat{}), system, orientation);
  throw py::value_error("unknown tropical semiring: " + semiring);
}

FiniteSemiring finite_from_json(const std::string& spec) { return io::parse_finite_semiring(json::parse(spec)); }

std::string validate_table_json(const std::string& table) {
  const auto report = validate_axioms(io::parse_table(json::parse(table)));
  json axioms = json::object();
  for (const auto& r : report.results) {
    const char* status = r.status == AxiomStatus::passed ? "pass" : r.status == AxiomStatus::failed ? "fail" : "n/a";
    axioms[std::string(axiom_name(r.axiom))] = {{"status", status}, {"counterexample", r.counterexample}};
  }
  return json{{"valid", report.complete()}, {"axioms", axioms}}.dump();
}

std::string solve_finite_json(const std::string& semiring, const std::string& system, const std::string& orientation,
                              bool enumerate) {
  using V = FiniteSemiring::value_type;
  const auto ring = finite_from_json(semiring);
  const auto sys = io::parse_system(ring, json::parse(system), orientation_of(orientation));
  const auto carrier = ring.elements();
  const std::span<const V> all(carrier);
  json out;
  const auto outcome = solve_finite(sys, all);
  if (const auto* bad = std::get_if<Incompatible>(&outcome)) {
    out["maximal"] = nullptr;
    out["incompatible_equation"] = bad->equation;
  } else {
    const auto& z = std::get<Solved<V>>(outcome).maximal;
    out["maximal"] = io::dump_vector(ring, std::span<const V>(z));
  }
  if (enumerate) {
    json solutions = json::array();
    enumerate_solutions(sys, all, [&](const std::vector<V>& x) {
      solutions.push_back(io::dump_vector(ring, std::span<const V>(x)));
    });
    out["solutions"] = solutions;
  }
  return out.dump();
}

std::string attack_json(const std::string& instance, std::optional<std::size_t> k) {
  auto inst = io::parse_instance(json::parse(instance));
  if (k) inst.params.k = *k;
  const auto& p = inst.params;
  if (!inst.a) throw py::value_error("instance has no \"A\"");
  const auto out = mmr::attack(p, *inst.a, inst.b);
  json terms = json::array();
  for (const auto& t : mmr::render_function(p.ring, out.d))
    terms.push_back({t.x_power, t.y_power, p.ring.label(t.coefficient)});
  json result{{"verified", out.verified},
              {"terms", terms},
              {"d", io::dump_matrix(p.ring, out.d)["entries"]},
              {"unknowns", out.stats.unknowns},
              {"equations", out.stats.equations}};
  if (out.recovered_key) result["recovered_key"] = io::dump_matrix(p.ring, *out.recovered_key)["entries"];
  return result.dump();
}

std::string simulate_json(const std::string& instance, std::uint64_t seed, std::optional<std::size_t> k) {
  auto inst = io::parse_instance(json::parse(instance));
  if (k) inst.params.k = *k;
  const auto ex = mmr::simulate_exchange(inst.params, seed);
  inst.a = ex.alice.public_value;
  inst.b = ex.bob.public_value;
  auto out = io::dump_instance(inst);
  out["seed"] = seed;
  out["key"] = io::dump_matrix(inst.params.ring, ex.alice_key)["entries"];
  out["keys_agree"] = ex.alice_key == ex.bob_key;
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_idemlin, m) {
  m.doc() = "Linear systems over idempotent semirings";

  py::register_exception<Error>(m, "IdemlinError", PyExc_ValueError);
  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IncompatibleSystem>(m, "IncompatibleSystem", PyExc_ValueError);

  py::class_<FiniteSemiring>(m, "FiniteSemiring")
      .def_static("from_json", &finite_from_json, py::arg("spec"))
      .def_property_readonly("order", &FiniteSemiring::order)
      .def_property_readonly("zero", &FiniteSemiring::zero)
      .def_property_readonly("one", &FiniteSemiring::one)
      .def("add", &FiniteSemiring::add)
      .def("mul", &FiniteSemiring::mul)
      .def("label", &FiniteSemiring::label)
      .def("elements", &FiniteSemiring::elements)
      .def("center", [](const FiniteSemiring& r) { return center(r); })
      .def("leq", [](const FiniteSemiring& r, FiniteSemiring::value_type a, FiniteSemiring::value_type b) {
        return nat_leq(r, a, b);
      });

  m.def("validate_table", &validate_table_json, py::arg("table"));
  m.def("solve_tropical", &solve_tropical_named, py::arg("semiring"), py::arg("system"), py::arg("orientation"));
  m.def("solve_finite", &solve_finite_json, py::arg("semiring"), py::arg("system"), py::arg("orientation"),
        py::arg("enumerate") = false);
  m.def("minimal_hitting_sets", &minimal_hitting_sets, py::arg("sets"), py::arg("universe"));
  m.def("attack", &attack_json, py::arg("instance"), py::arg("k") = std::nullopt);
  m.def("simulate", &simulate_json, py::arg("instance"), py::arg("seed"), py::arg("k") = std::nullopt);
}
