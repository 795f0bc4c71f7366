#include "idemlin/io.hpp"

#include <fstream>
#include <sstream>

namespace idemlin::io {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Rational parse_rational(const std::string& text) {
  using boost::multiprecision::cpp_int;
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw ParseError("bad rational: \"" + text + "\"");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw ParseError("bad rational: \"" + text + "\"");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw ParseError("bad rational: \"" + text + "\"");
    return cpp_int(part);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const cpp_int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

namespace {

std::vector<std::vector<std::size_t>> parse_index_table(const json& j, const char* name) {
  if (!j.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array of rows");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(std::string("\"") + name + "\" rows must be arrays");
    auto& r = out.emplace_back();
    for (const auto& e : row) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
        throw ParseError(std::string("\"") + name + "\" entries must be element indices");
      r.push_back(e.get<std::size_t>());
    }
  }
  return out;
}

std::size_t require_index(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<std::int64_t>() < 0)
    throw ParseError(std::string("table needs a nonnegative integer \"") + key + "\"");
  return j[key].get<std::size_t>();
}

}  // namespace

CayleyTable parse_table(const json& j) {
  if (!j.is_object()) throw ParseError("semiring table must be an object");
  CayleyTable t;
  t.order = require_index(j, "order");
  t.zero = require_index(j, "zero");
  t.one = require_index(j, "one");
  if (!j.contains("add") || !j.contains("mul")) throw ParseError("table needs \"add\" and \"mul\"");
  t.add = parse_index_table(j["add"], "add");
  t.mul = parse_index_table(j["mul"], "mul");
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      t.labels.push_back(l.get<std::string>());
    }
  }
  return t;
}

json dump_table(const CayleyTable& t) {
  json out{{"order", t.order}, {"zero", t.zero}, {"one", t.one}, {"add", t.add}, {"mul", t.mul}};
  if (!t.labels.empty()) out["labels"] = t.labels;
  return out;
}

FiniteSemiring parse_finite_semiring(const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "mmr6") return mmr_semiring();
    if (name == "boolean") return boolean_semiring();
    throw ParseError("unknown finite semiring \"" + name + "\"");
  }
  return FiniteSemiring::create(parse_table(j));
}

Instance parse_instance(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be an object");
  for (const char* key : {"semiring", "M1", "M2", "S"})
    if (!j.contains(key)) throw ParseError(std::string("instance needs \"") + key + "\"");

  Instance inst{j["semiring"], mmr::ProtocolParams{parse_finite_semiring(j["semiring"]), {}, {}, {}, 1}, {}, {}};
  auto& p = inst.params;
  p.m1 = parse_matrix(p.ring, j["M1"]);
  p.m2 = parse_matrix(p.ring, j["M2"]);
  p.s = parse_matrix(p.ring, j["S"]);
  p.k = j.contains("k") ? j["k"].get<std::size_t>() : 1;
  if (j.contains("A")) inst.a = parse_matrix(p.ring, j["A"]);
  if (j.contains("B")) inst.b = parse_matrix(p.ring, j["B"]);

  try {
    p.validate();
    if (j.contains("n") && j["n"].get<std::size_t>() != p.dimension())
      throw ParseError("declared n does not match the matrices");
    for (const auto* m : {&inst.a, &inst.b})
      if (*m && ((*m)->rows() != p.dimension() || (*m)->cols() != p.dimension()))
        throw ParseError("A/B must match the protocol dimension");
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return inst;
}

json dump_instance(const Instance& inst) {
  const auto& p = inst.params;
  auto rows = [&](const mmr::ElementMatrix& m) { return dump_matrix(p.ring, m)["entries"]; };
  json out{{"semiring", inst.semiring}, {"n", p.dimension()}, {"k", p.k},
           {"M1", rows(p.m1)},          {"M2", rows(p.m2)},      {"S", rows(p.s)}};
  if (inst.a) out["A"] = rows(*inst.a);
  if (inst.b) out["B"] = rows(*inst.b);
  return out;
}

}  // namespace idemlin::io
