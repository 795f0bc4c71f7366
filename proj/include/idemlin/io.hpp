#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "idemlin/errors.hpp"
#include "idemlin/finite_semiring.hpp"
#include "idemlin/linear_solver.hpp"
#include "idemlin/matrix.hpp"
#include "idemlin/mmr_attack.hpp"
#include "idemlin/tropical.hpp"

namespace idemlin::io {

/*
 * JSON formats
 *
 *   matrix    {"rows": r, "cols": c, "entries": [[...], ...]}   (a bare [[...]] is accepted on input)
 *   system    {"A": <matrix>, "Y": [...]}
 *   table     {"order": q, "zero": i, "one": j, "add": [[...]], "mul": [[...]], "labels": [...]}
 *   instance  {"semiring": <table or name>, "n": n, "k": k, "M1": .., "M2": .., "S": .., "A": .., "B": ..}
 *
 * Entries are integers, "p/q" strings for rationals and fractions, "inf" for
 * the adjoined infinity of a tropicalized semigroup, and labels (or indices)
 * for finite semirings.
 */

using json = nlohmann::json;

class ParseError : public Error {
 public:
  using Error::Error;
};

json read_json_file(const std::string& path);

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Element codec, specialized per descriptor.
template <class R>
struct Codec;

template <>
struct Codec<MaxPlusInt> {
  static std::int64_t parse(const MaxPlusInt&, const json& j) {
    if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
    return j.get<std::int64_t>();
  }
  static json dump(const MaxPlusInt&, std::int64_t v) { return v; }
};

template <>
struct Codec<MaxPlusRat> {
  static Rational parse(const MaxPlusRat&, const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected an integer or \"p/q\", got " + j.dump());
  }
  static json dump(const MaxPlusRat&, const Rational& v) {
    const auto num = numerator(v);
    if (denominator(v) == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return num.convert_to<std::int64_t>();
    return format_rational(v);
  }
};

template <>
struct Codec<MaxTimesNat> {
  static std::uint64_t parse(const MaxTimesNat&, const json& j) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1) throw ParseError("expected a positive integer, got " + j.dump());
    return j.get<std::uint64_t>();
  }
  static json dump(const MaxTimesNat&, std::uint64_t v) { return v; }
};

template <>
struct Codec<Tropicalized<IntegerAddition>> {
  using V = Tropicalized<IntegerAddition>::value_type;
  static V parse(const Tropicalized<IntegerAddition>&, const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return V::infinity();
    if (j.is_number_integer()) return V(j.get<std::int64_t>());
    throw ParseError("expected an integer or \"inf\", got " + j.dump());
  }
  static json dump(const Tropicalized<IntegerAddition>&, const V& v) {
    if (v.is_infinite()) return "inf";
    return v.finite();
  }
};

/// Fractions read as "p/q" (both sides in the base codec), as
/// {"num": .., "den": ..}, or as a plain base element (embedded as a/1).
template <class R>
struct Codec<FractionSemiring<R>> {
  using V = typename FractionSemiring<R>::value_type;
  static V parse(const FractionSemiring<R>& ring, const json& j) {
    if (j.is_object()) {
      if (!j.contains("num") || !j.contains("den")) throw ParseError("fraction object needs num and den");
      return V{Codec<R>::parse(ring.base(), j["num"]), Codec<R>::parse(ring.base(), j["den"])};
    }
    if (j.is_string()) {
      const auto text = j.get<std::string>();
      const auto slash = text.find('/');
      if (slash == std::string::npos) return ring.embed(Codec<R>::parse(ring.base(), parse_integer_json(text)));
      return V{Codec<R>::parse(ring.base(), parse_integer_json(text.substr(0, slash))),
               Codec<R>::parse(ring.base(), parse_integer_json(text.substr(slash + 1)))};
    }
    return ring.embed(Codec<R>::parse(ring.base(), j));
  }
  static json dump(const FractionSemiring<R>& ring, const V& v) {
    const json num = Codec<R>::dump(ring.base(), v.num);
    const json den = Codec<R>::dump(ring.base(), v.den);
    if (num.is_number_integer() && den.is_number_integer()) return num.dump() + "/" + den.dump();
    return json{{"num", num}, {"den", den}};
  }

 private:
  static json parse_integer_json(const std::string& text) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("bad integer in fraction: " + text);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("bad integer in fraction: " + text);
    }
  }
};

template <>
struct Codec<FiniteSemiring> {
  static FiniteSemiring::value_type parse(const FiniteSemiring& ring, const json& j) {
    if (j.is_string()) {
      if (auto e = ring.find_label(j.get<std::string>())) return *e;
      throw ParseError("unknown element label " + j.dump());
    }
    if (j.is_number_integer()) {
      const auto v = j.get<std::int64_t>();
      if (v < 0 || static_cast<std::size_t>(v) >= ring.order()) throw ParseError("element index out of range: " + j.dump());
      return static_cast<FiniteSemiring::value_type>(v);
    }
    throw ParseError("expected an element label or index, got " + j.dump());
  }
  static json dump(const FiniteSemiring& ring, FiniteSemiring::value_type v) {
    const auto& label = ring.label(v);
    if (label == std::to_string(v)) return v;
    return label;
  }
};

template <class R>
std::vector<value_t<R>> parse_vector(const R& ring, const json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  std::vector<value_t<R>> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(Codec<R>::parse(ring, e));
  return out;
}

template <class R>
json dump_vector(const R& ring, std::span<const value_t<R>> v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(Codec<R>::dump(ring, e));
  return out;
}

template <class R>
Matrix<value_t<R>> parse_matrix(const R& ring, const json& j) {
  const json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw ParseError("matrix object needs \"entries\"");
    rows = &j["entries"];
  }
  if (!rows->is_array()) throw ParseError("matrix entries must be an array of rows");
  std::vector<std::vector<value_t<R>>> data;
  for (const auto& row : *rows) data.push_back(parse_vector(ring, row));
  Matrix<value_t<R>> m;
  try {
    m = Matrix<value_t<R>>::from_rows(data);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
  if (j.is_object()) {
    if ((j.contains("rows") && j["rows"].get<std::size_t>() != m.rows()) ||
        (j.contains("cols") && j["cols"].get<std::size_t>() != m.cols())) {
      throw ParseError("declared matrix shape does not match its entries");
    }
  }
  return m;
}

template <class R>
json dump_matrix(const R& ring, const Matrix<value_t<R>>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(dump_vector(ring, m.row(r)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

/// Reads {"A": matrix, "Y": [...]} and applies the orientation.
template <class R>
LinearSystem<R> parse_system(const R& ring, const json& j, Orientation orientation) {
  if (!j.is_object() || !j.contains("A") || !j.contains("Y")) throw ParseError("system needs \"A\" and \"Y\"");
  try {
    return make_system(ring, parse_matrix(ring, j["A"]), parse_vector(ring, j["Y"]), orientation);
  } catch (const DimensionError& e) {
    throw ParseError(std::string("inconsistent system: ") + e.what());
  }
}

CayleyTable parse_table(const json& j);
json dump_table(const CayleyTable& table);

/// A built-in name ("mmr6", "boolean") or an inline table; the tables are
/// validated.
FiniteSemiring parse_finite_semiring(const json& j);

struct Instance {
  json semiring;  ///< as given: a name or a table
  mmr::ProtocolParams params;
  std::optional<mmr::ElementMatrix> a;
  std::optional<mmr::ElementMatrix> b;
};

Instance parse_instance(const json& j);
json dump_instance(const Instance& instance);

}  // namespace idemlin::io
