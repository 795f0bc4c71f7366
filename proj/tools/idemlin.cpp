// idemlin: validate finite semirings, solve idempotent linear systems, and
// run the polynomial key exchange and its linear-algebra attack.
//
// Exit codes: 0 success, 1 a negative answer (axiom failure, incompatible
// system, attack mismatch), 2 bad input.

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idemlin/finite_semiring.hpp"
#include "idemlin/io.hpp"
#include "idemlin/linear_solver.hpp"
#include "idemlin/mmr_attack.hpp"
#include "idemlin/tropical.hpp"

namespace {

using namespace idemlin;
using io::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError("cannot open " + path);
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

json counts_json(const OpCounts& c) {
  return {{"add", c.add}, {"mul", c.mul}, {"inverse", c.inverse}, {"compare", c.compare}, {"eq", c.eq},
          {"total", c.total()}};
}

/// Collects the report and the human-readable text for one command.
struct Run {
  json report;
  std::ostringstream text;
  bool as_json = false;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Run(const std::vector<std::string>& argv, bool json_out, bool with_timing)
      : report{{"command", argv}, {"inputs", json::object()}}, as_json(json_out), timing(with_timing) {}

  void input(const std::string& path) { report["inputs"][path] = {{"sha256", sha256_file(path)}}; }

  int finish(int code) {
    report["exit_code"] = code;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (timing) report["wall_time_s"] = secs;
    if (as_json) {
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << text.str();
      if (timing) std::cerr << "wall time: " << secs << " s\n";
    }
    return code;
  }
};

std::string set_text(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t t = 0; t < s.size(); ++t) out += (t ? "," : "") + std::to_string(s[t] + 1);
  return out + "}";
}

json one_based(const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) {
    json row = json::array();
    for (auto e : s) row.push_back(e + 1);
    out.push_back(row);
  }
  return out;
}

std::string cell(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string vector_text(const json& v) {
  std::string out = "(";
  for (std::size_t t = 0; t < v.size(); ++t) out += (t ? ", " : "") + cell(v[t]);
  return out + ")";
}

void matrix_text(std::ostream& os, const json& rows, const std::string& indent = "  ") {
  for (const auto& row : rows) {
    os << indent;
    for (std::size_t t = 0; t < row.size(); ++t) os << (t ? " " : "") << cell(row[t]);
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(Run& run, const std::string& path) {
  run.input(path);
  const auto table = io::parse_table(io::read_json_file(path));
  const auto report = validate_axioms(table);
  auto label = [&](std::size_t e) { return table.labels.empty() ? std::to_string(e) : table.labels[e]; };

  json axioms = json::array();
  for (const auto& r : report.results) {
    const char* status = r.status == AxiomStatus::passed ? "pass" : r.status == AxiomStatus::failed ? "fail" : "n/a";
    json entry{{"axiom", axiom_name(r.axiom)}, {"status", status}};
    run.text << axiom_name(r.axiom) << ": " << status;
    if (r.status == AxiomStatus::failed) {
      json witness = json::array();
      static const char* names[] = {"a", "b", "c"};
      std::string sep = " (";
      for (std::size_t t = 0; t < r.counterexample.size(); ++t) {
        witness.push_back(label(r.counterexample[t]));
        run.text << sep << names[t] << "=" << label(r.counterexample[t]);
        sep = ", ";
      }
      if (!r.counterexample.empty()) run.text << ")";
      entry["counterexample"] = witness;
    }
    run.text << '\n';
    axioms.push_back(entry);
  }
  run.report["outcome"] = {{"order", table.order}, {"axioms", axioms}, {"valid", report.complete()}};
  return run.finish(report.complete() ? 0 : 1);
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string system;
  std::string semiring;
  std::string mode;
  std::string orientation;
  bool enumerate = false;
  std::size_t limit = 0;
};

Orientation parse_orientation(const std::string& s) {
  if (s == "xa") return Orientation::xa;
  if (s == "ax") return Orientation::ax;
  throw UsageError("orientation must be xa or ax");
}

/// Tropical mode over any group descriptor. `restrict` maps the maximal
/// solution back to a base semiring when the carrier is a fraction embedding.
template <TropicalGroup R, class Restrict = std::nullptr_t>
int solve_tropical_with(Run& run, const R& ring, const LinearSystem<R>& parsed, Restrict restrict = nullptr) {
  using V = value_t<R>;
  OpCounts counts;
  const LinearSystem<Counted<R>> sys{Counted<R>(ring, counts), parsed.a, parsed.y};
  auto dump = [&](const V& v) { return io::Codec<R>::dump(ring, v); };
  auto dump_vec = [&](const std::vector<V>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(dump(x));
    return out;
  };

  const auto set = solution_set(sys);
  const auto outcome = solve_general(sys, [&](std::size_t i) -> std::optional<V> { return set.ceilings[i]; });

  json quotient = json::array();
  for (std::size_t i = 0; i < set.quotient.rows(); ++i) {
    json row = json::array();
    for (const auto& e : set.quotient.row(i)) row.push_back(dump(e));
    quotient.push_back(row);
  }
  json outcome_json{{"unknowns", sys.unknowns()},
                    {"equations", sys.equations()},
                    {"quotient", quotient},
                    {"ceilings", dump_vec(set.ceilings)},
                    {"row", one_based(set.row_sets)},
                    {"index", one_based(set.index_sets)},
                    {"minimal_families", one_based(set.minimal_families)}};

  run.text << "quotient y_j / a_ij (row i = unknown i):\n";
  matrix_text(run.text, quotient);
  run.text << "ceilings and rows attaining them:\n";
  for (std::size_t i = 0; i < set.ceilings.size(); ++i)
    run.text << "  C" << i + 1 << " = " << cell(dump(set.ceilings[i])) << "  Row " << set_text(set.row_sets[i])
             << '\n';
  run.text << "index sets:\n";
  for (std::size_t j = 0; j < set.index_sets.size(); ++j)
    run.text << "  Index(" << j + 1 << ") = " << set_text(set.index_sets[j]) << '\n';

  int code = 0;
  if (const auto* bad = std::get_if<Incompatible>(&outcome)) {
    outcome_json["status"] = "incompatible";
    outcome_json["equation"] = bad->equation + 1;
    run.text << "incompatible: equation " << bad->equation + 1 << " cannot be attained\n";
    code = 1;
  } else {
    const auto& z = std::get<Solved<V>>(outcome).maximal;
    outcome_json["status"] = "solved";
    outcome_json["maximal"] = dump_vec(z);
    run.text << "minimal tight families:";
    for (const auto& f : set.minimal_families) run.text << ' ' << set_text(f);
    run.text << "\nmaximal solution: " << vector_text(dump_vec(z)) << '\n';
    if constexpr (!std::is_same_v<Restrict, std::nullptr_t>) {
      json base = json::array();
      bool all = true;
      for (const auto& x : z) {
        auto b = restrict(x);
        all = all && b.has_value();
        base.push_back(b ? json(*b) : json(nullptr));
      }
      outcome_json["maximal_in_base"] = all;
      outcome_json["maximal_base"] = base;
      run.text << "maximal solution lies in the base semiring: " << (all ? "yes" : "no") << '\n';
    }
  }
  run.report["outcome"] = outcome_json;
  run.report["operations"] = counts_json(counts);
  return run.finish(code);
}

template <TropicalGroup R>
int solve_tropical_named(Run& run, const R& ring, const json& system, Orientation orientation) {
  return solve_tropical_with(run, ring, io::parse_system(ring, system, orientation));
}

int solve_finite_with(Run& run, const FiniteSemiring& ring, const json& system, Orientation orientation,
                      const SolveOptions& opt) {
  using V = FiniteSemiring::value_type;
  const auto parsed = io::parse_system(ring, system, orientation);
  OpCounts counts;
  const Counted<FiniteSemiring> counted(ring, counts);
  const LinearSystem<Counted<FiniteSemiring>> sys{counted, parsed.a, parsed.y};
  const auto carrier = ring.elements();
  const std::span<const V> all(carrier);

  auto dump_vec = [&](const std::vector<V>& xs) { return io::dump_vector(ring, std::span<const V>(xs)); };

  std::vector<V> ceilings;
  for (std::size_t i = 0; i < sys.unknowns(); ++i) ceilings.push_back(max_w_finite(sys, i, all));
  const auto outcome = solve_general(sys, [&](std::size_t i) -> std::optional<V> { return ceilings[i]; });

  json outcome_json{{"unknowns", sys.unknowns()}, {"equations", sys.equations()}, {"ceilings", dump_vec(ceilings)}};
  run.text << "feasible-set maxima: " << vector_text(dump_vec(ceilings)) << '\n';

  int code = 0;
  if (const auto* bad = std::get_if<Incompatible>(&outcome)) {
    outcome_json["status"] = "incompatible";
    outcome_json["equation"] = bad->equation + 1;
    run.text << "incompatible: equation " << bad->equation + 1 << " cannot be attained\n";
    code = 1;
  } else {
    outcome_json["status"] = "solved";
    outcome_json["maximal"] = dump_vec(std::get<Solved<V>>(outcome).maximal);
    run.text << "maximal solution: " << vector_text(outcome_json["maximal"]) << '\n';
    if (opt.enumerate) {
      json solutions = json::array();
      run.text << "solutions:\n";
      const auto count = enumerate_solutions(parsed, all, [&](const std::vector<V>& x) {
        const auto row = dump_vec(x);
        solutions.push_back(row);
        run.text << "  " << vector_text(row) << '\n';
        return opt.limit == 0 || solutions.size() < opt.limit;
      });
      outcome_json["solutions"] = solutions;
      outcome_json["solution_count"] = count;
      outcome_json["truncated"] = opt.limit != 0 && count >= opt.limit;
      run.text << count << " solution(s) listed\n";
    }
  }
  run.report["outcome"] = outcome_json;
  run.report["operations"] = counts_json(counts);
  return run.finish(code);
}

bool is_tropical_name(const std::string& name) {
  return name == "max-plus-int" || name == "max-plus-rat" || name == "max-times-nat" || name == "trop-int" ||
         name.rfind("fraction-of:", 0) == 0;
}

int cmd_solve(Run& run, const SolveOptions& opt) {
  const auto orientation = parse_orientation(opt.orientation);
  run.input(opt.system);
  const auto system = io::read_json_file(opt.system);
  const bool tropical = is_tropical_name(opt.semiring);
  const std::string mode = opt.mode.empty() ? (tropical ? "tropical" : "finite") : opt.mode;
  if (mode != "tropical" && mode != "finite") throw UsageError("mode must be tropical or finite");
  if (mode == "tropical" && !tropical) throw UsageError("tropical mode needs a tropical semiring, got " + opt.semiring);
  if (mode == "finite" && tropical) throw UsageError(opt.semiring + " has an infinite carrier; use --mode tropical");
  if (opt.enumerate && mode == "tropical")
    throw UsageError("--enumerate needs a finite carrier; tropical mode prints the minimal families instead");
  run.report["semiring"] = opt.semiring;
  run.report["mode"] = mode;
  run.report["orientation"] = opt.orientation;

  if (mode == "finite") {
    FiniteSemiring ring = [&] {
      if (opt.semiring == "mmr6" || opt.semiring == "boolean") return io::parse_finite_semiring(json(opt.semiring));
      run.input(opt.semiring);
      return io::parse_finite_semiring(io::read_json_file(opt.semiring));
    }();
    return solve_finite_with(run, ring, system, orientation, opt);
  }

  const auto& name = opt.semiring;
  if (name == "max-plus-int") return solve_tropical_named(run, MaxPlusInt{}, system, orientation);
  if (name == "max-plus-rat") return solve_tropical_named(run, MaxPlusRat{}, system, orientation);
  if (name == "trop-int") return solve_tropical_named(run, tropicalize(IntegerAddition{}), system, orientation);
  if (name == "fraction-of:max-plus-int")
    return solve_tropical_named(run, FractionSemiring<MaxPlusInt>(MaxPlusInt{}), system, orientation);
  if (name == "fraction-of:max-plus-rat")
    return solve_tropical_named(run, FractionSemiring<MaxPlusRat>(MaxPlusRat{}), system, orientation);
  if (name == "fraction-of:max-times-nat")
    return solve_tropical_named(run, FractionSemiring<MaxTimesNat>(MaxTimesNat{}), system, orientation);
  if (name == "max-times-nat") {
    // Not a group: solve in the fractions and report whether the answer is natural.
    const FractionSemiring<MaxTimesNat> frac{MaxTimesNat{}};
    const auto base = io::parse_system(MaxTimesNat{}, system, orientation);
    std::vector<Fraction<std::uint64_t>> a, y;
    for (auto e : base.a.entries()) a.push_back(frac.embed(e));
    for (auto e : base.y) y.push_back(frac.embed(e));
    const LinearSystem<FractionSemiring<MaxTimesNat>> sys{
        frac, Matrix<Fraction<std::uint64_t>>(base.a.rows(), base.a.cols(), std::move(a)), std::move(y)};
    return solve_tropical_with(run, frac, sys, [&](const auto& x) { return frac.restrict(x); });
  }
  throw UsageError("unknown tropical semiring " + name);
}

// ---------------------------------------------------------------------------
// mmr

json matrix_rows(const FiniteSemiring& ring, const mmr::ElementMatrix& m) { return io::dump_matrix(ring, m)["entries"]; }

io::Instance load_instance(Run& run, const std::string& path, std::optional<std::size_t> k) {
  run.input(path);
  auto inst = io::parse_instance(io::read_json_file(path));
  if (k) {
    if (*k == 0) throw UsageError("--k must be at least 1");
    inst.params.k = *k;
  }
  return inst;
}

int cmd_mmr_simulate(Run& run, const std::string& path, std::uint64_t seed, std::optional<std::size_t> k,
                     const std::string& out_path) {
  auto inst = load_instance(run, path, k);
  const auto& p = inst.params;
  const auto ex = mmr::simulate_exchange(p, seed);
  const bool agree = ex.alice_key == ex.bob_key;

  auto poly = [&](const mmr::ElementPolynomial& q) { return io::dump_vector(p.ring, std::span(q.coefficients())); };
  run.report["outcome"] = {{"seed", seed},
                           {"n", p.dimension()},
                           {"k", p.k},
                           {"alice", {{"p", poly(ex.alice.p)}, {"q", poly(ex.alice.q)}}},
                           {"bob", {{"p", poly(ex.bob.p)}, {"q", poly(ex.bob.q)}}},
                           {"A", matrix_rows(p.ring, ex.alice.public_value)},
                           {"B", matrix_rows(p.ring, ex.bob.public_value)},
                           {"alice_key", matrix_rows(p.ring, ex.alice_key)},
                           {"bob_key", matrix_rows(p.ring, ex.bob_key)},
                           {"keys_agree", agree}};

  run.text << "seed " << seed << ", n = " << p.dimension() << ", k = " << p.k << '\n';
  run.text << "Alice's key:\n";
  matrix_text(run.text, run.report["outcome"]["alice_key"]);
  run.text << "Bob's key:\n";
  matrix_text(run.text, run.report["outcome"]["bob_key"]);
  run.text << "keys agree: " << (agree ? "yes" : "no") << '\n';

  if (!out_path.empty()) {
    inst.a = ex.alice.public_value;
    inst.b = ex.bob.public_value;
    auto j = io::dump_instance(inst);
    j["seed"] = seed;
    j["key"] = matrix_rows(p.ring, ex.alice_key);
    std::ofstream out(out_path);
    if (!out) throw io::ParseError("cannot write " + out_path);
    out << j.dump(2) << '\n';
    run.report["outcome"]["written"] = out_path;
    run.text << "exchange written to " << out_path << '\n';
  }
  return run.finish(agree ? 0 : 1);
}

int cmd_mmr_attack(Run& run, const std::string& path, std::optional<std::size_t> k) {
  const auto inst = load_instance(run, path, k);
  const auto& p = inst.params;
  if (!inst.a) throw io::ParseError("instance has no public value \"A\" to attack");

  mmr::AttackOutput out;
  try {
    out = mmr::attack(p, *inst.a, inst.b);
  } catch (const IncompatibleSystem& e) {
    run.report["outcome"] = {{"status", "incompatible"}, {"equation", e.equation() + 1}, {"k", p.k}};
    run.text << "not protocol-generated at k = " << p.k << " (equation " << e.equation() + 1 << ")\n";
    return run.finish(1);
  }

  const auto terms = mmr::render_function(p.ring, out.d);
  json term_list = json::array();
  for (const auto& t : terms)
    term_list.push_back({{"x_power", t.x_power}, {"y_power", t.y_power}, {"coefficient", p.ring.label(t.coefficient)}});
  json outcome{{"status", "solved"},
               {"k", p.k},
               {"verified", out.verified},
               {"term_count", terms.size()},
               {"terms", term_list},
               {"function", mmr::format_function(p.ring, terms)}};
  run.report["operations"] = {{"unknowns", out.stats.unknowns},
                              {"equations", out.stats.equations},
                              {"carrier_size", out.stats.carrier_size},
                              {"membership_checks", out.stats.membership_checks}};

  run.text << "k = " << p.k << ", " << out.stats.unknowns << " unknowns x " << out.stats.equations << " equations\n";
  run.text << "verified F[M1, S, M2] = A: " << (out.verified ? "yes" : "no") << '\n';
  run.text << terms.size() << " term(s): F = " << mmr::format_function(p.ring, terms) << '\n';

  bool ok = out.verified;
  if (out.recovered_key) {
    outcome["recovered_key"] = matrix_rows(p.ring, *out.recovered_key);
    run.text << "recovered key F[M1, B, M2]:\n";
    matrix_text(run.text, outcome["recovered_key"]);
    const auto raw = io::read_json_file(path);
    if (raw.contains("key")) {
      const bool match = io::parse_matrix(p.ring, raw["key"]) == *out.recovered_key;
      outcome["key_matches"] = match;
      run.text << "matches the recorded shared key: " << (match ? "yes" : "no") << '\n';
      ok = ok && match;
    }
  }
  run.report["outcome"] = outcome;
  return run.finish(ok ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear systems over idempotent semirings and the polynomial key-exchange attack"};
  app.require_subcommand(1);
  bool as_json = false, timing = false;
  app.add_flag("--json", as_json, "Print the run report as JSON");
  app.add_flag("--timing", timing, "Include wall time (report is no longer reproducible)");

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Check the semiring axioms of a finite table");
  validate->add_option("FILE", validate_file, "Table JSON")->required();

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Solve X A = Y or A X = Y");
  solve->add_option("FILE", solve_opt.system, "System JSON with \"A\" and \"Y\"")->required();
  solve->add_option("--semiring", solve_opt.semiring,
                    "max-plus-int, max-plus-rat, max-times-nat, trop-int, fraction-of:<name>, mmr6, boolean, "
                    "or a table file")
      ->required();
  solve->add_option("--mode", solve_opt.mode, "tropical or finite (inferred from the semiring if omitted)");
  solve->add_option("--orientation", solve_opt.orientation, "xa: matrix rows are unknowns; ax: rows are equations")
      ->required();
  solve->add_flag("--enumerate", solve_opt.enumerate, "List every solution (finite carriers)");
  solve->add_option("--limit", solve_opt.limit, "Stop enumerating after this many solutions (0 = no limit)");

  auto* mmr_cmd = app.add_subcommand("mmr", "Polynomial key exchange over a finite semiring");
  mmr_cmd->require_subcommand(1);
  std::string instance;
  std::uint64_t seed = 0;
  std::optional<std::size_t> k;
  std::string out_path;
  auto* simulate = mmr_cmd->add_subcommand("simulate", "Run a seeded exchange on the instance's public matrices");
  simulate->add_option("INSTANCE", instance, "Instance JSON")->required();
  simulate->add_option("--seed", seed, "Generator seed")->required();
  simulate->add_option("--k", k, "Coefficients per polynomial (default: from the instance)");
  simulate->add_option("--out", out_path, "Write the instance with A, B and the key");
  auto* attack = mmr_cmd->add_subcommand("attack", "Recover F with F[M1, S, M2] = A, and the key when B is known");
  attack->add_option("INSTANCE", instance, "Instance JSON")->required();
  attack->add_option("--k", k, "Coefficients per polynomial (default: from the instance)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const std::vector<std::string> command(argv + 1, argv + argc);
  Run run(command, as_json, timing);
  try {
    if (*validate) return cmd_validate(run, validate_file);
    if (*solve) return cmd_solve(run, solve_opt);
    if (*simulate) return cmd_mmr_simulate(run, instance, seed, k, out_path);
    if (*attack) return cmd_mmr_attack(run, instance, k);
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
