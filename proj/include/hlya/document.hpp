#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <variant>

#include "json.hpp"

#include "hlya/extensions.hpp"
#include "hlya/isoclinism.hpp"
#include "hlya/scalars.hpp"

namespace hlya {

using json = nlohmann::json;

/* --- scalars --------------------------------------------------------------
   Rationals travel as strings ("a/b", "/b" omitted for integers) so that
   arbitrary precision survives the trip; residues travel as plain integers
   with the modulus recorded once in the header. Loaders accept integers for
   rationals as a convenience. */

inline json scalar_json(const Rational& x) { return x.str(); }
inline json scalar_json(const Fp& x) { return x.residue(); }

template <class K>
K load_scalar(const json& j, typename K::Field f) {
  if (j.is_string()) return K::parse(f, j.template get<std::string>());
  if (j.is_number_integer()) return K::from_int(f, j.template get<long>());
  throw ParseError("expected a scalar, got: " + j.dump());
}

/* --- vectors and matrices -------------------------------------------------- */

template <class K>
json vec_json(const Vec<K>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

template <class K>
Vec<K> load_vec(const json& j, typename K::Field f, std::size_t expect) {
  if (!j.is_array()) throw ParseError("expected a coefficient array");
  if (j.size() != expect)
    throw DimensionMismatch("coefficient array of length " + std::to_string(j.size()) +
                            ", expected " + std::to_string(expect));
  Vec<K> v;
  v.reserve(expect);
  for (const auto& e : j) v.push_back(load_scalar<K>(e, f));
  return v;
}

template <class K>
json matrix_json(const Matrix<K>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i)));
  return rows;
}

template <class K>
Matrix<K> load_matrix(const json& j, typename K::Field f, std::size_t rows,
                      std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw DimensionMismatch("expected a matrix with " + std::to_string(rows) + " rows");
  Matrix<K> m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) m.set_row(i, load_vec<K>(j[i], f, cols));
  return m;
}

template <class K>
json subspace_json(const Subspace<K>& s) {
  json out;
  out["ambient"] = s.ambient();
  out["dim"] = s.dim();
  out["basis"] = matrix_json(s.basis());
  return out;
}

/* Non-negative integer test; in-memory documents may carry signed values. */
inline bool json_is_index(const json& j) {
  return j.is_number_unsigned() ||
         (j.is_number_integer() && j.template get<long long>() >= 0);
}

/* --- field tags ------------------------------------------------------------ */

inline json field_json(Rational::Field) { return "Q"; }
inline json field_json(Fp::Field f) { return json{{"Fp", f.p}}; }

using AnyField = std::variant<Rational::Field, Fp::Field>;

inline AnyField load_field(const json& j) {
  if (j.is_string() && j.template get<std::string>() == "Q") return Rational::Field{};
  if (j.is_object() && j.contains("Fp")) {
    if (!json_is_index(j["Fp"])) throw ParseError("Fp modulus must be a positive integer");
    std::uint32_t p = j["Fp"].template get<std::uint32_t>();
    if (p != 2 && p != 3 && p != 5 && p != 7)
      throw ParseError("unsupported modulus " + std::to_string(p) +
                       " (expected 2, 3, 5 or 7)");
    return Fp::Field{p};
  }
  throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

/* --- algebra documents ------------------------------------------------------

   { "header": {"field": "Q" | {"Fp": p}, "dim": n, "basis": [names]},
     "body":   {"binary":  [{"i":, "j":, "value": [coeffs]}],
                "ternary": [{"i":, "j":, "k":, "value": [coeffs]}],
                "twist":   [[row], ...]},
     "subspaces": {"name": [[row], ...], ...} }

   Only pairs with i<j need be listed; the loader fills the skew counterpart.
   Listing the same unordered pair (or the same triple up to the skew slots)
   twice is a conflict. Unlisted entries are zero, a missing twist is the
   identity, "basis" and "subspaces" are optional. */

template <class K>
struct AlgebraDocument {
  Algebra<K> algebra;
  std::map<std::string, Subspace<K>> subspaces;
};

using AnyAlgebraDocument = std::variant<AlgebraDocument<Rational>, AlgebraDocument<Fp>>;

template <class K>
AlgebraDocument<K> load_algebra_document_as(const json& doc, typename K::Field f) {
  if (!doc.is_object() || !doc.contains("header") || !doc["header"].is_object())
    throw ParseError("algebra document needs a header object");
  const json& h = doc["header"];
  if (!h.contains("dim") || !json_is_index(h["dim"]))
    throw ParseError("header.dim must be a non-negative integer");
  const std::size_t n = h["dim"].template get<std::size_t>();

  AlgebraBuilder<K> bld(n, f);
  if (h.contains("basis")) {
    if (!h["basis"].is_array() || h["basis"].size() != n)
      throw ParseError("header.basis must list one name per dimension");
    std::vector<std::string> names;
    for (const auto& e : h["basis"]) names.push_back(e.template get<std::string>());
    bld.set_names(std::move(names));
  }

  const json body = doc.contains("body") ? doc["body"] : json::object();
  if (!body.is_object()) throw ParseError("body must be an object");

  auto idx = [&](const json& e, const char* key) {
    if (!e.contains(key) || !json_is_index(e[key]))
      throw ParseError(std::string("entry needs index \"") + key + "\"");
    std::size_t v = e[key].template get<std::size_t>();
    if (v >= n) throw ParseError(std::string("index \"") + key + "\" out of range");
    return v;
  };

  if (body.contains("binary")) {
    if (!body["binary"].is_array()) throw ParseError("body.binary must be an array");
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const auto& e : body["binary"]) {
      std::size_t i = idx(e, "i"), j = idx(e, "j");
      if (!e.contains("value")) throw ParseError("binary entry needs a value");
      Vec<K> v = load_vec<K>(e["value"], f, n);
      if (i == j) {
        if (!vec_is_zero(v))
          throw ParseError("nonzero product at equal indices (" + std::to_string(i) +
                           "," + std::to_string(j) + ")");
        continue;
      }
      std::pair<std::size_t, std::size_t> key = std::minmax(i, j);
      if (seen.count(key))
        throw ParseError("conflicting binary entries for pair (" +
                         std::to_string(key.first) + "," + std::to_string(key.second) + ")");
      seen[key] = true;
      if (i < j)
        bld.set_binary(i, j, std::move(v));
      else
        bld.set_binary(j, i, vec_neg(v));
    }
  }
  if (body.contains("ternary")) {
    if (!body["ternary"].is_array()) throw ParseError("body.ternary must be an array");
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> seen;
    for (const auto& e : body["ternary"]) {
      std::size_t i = idx(e, "i"), j = idx(e, "j"), k = idx(e, "k");
      if (!e.contains("value")) throw ParseError("ternary entry needs a value");
      Vec<K> v = load_vec<K>(e["value"], f, n);
      if (i == j) {
        if (!vec_is_zero(v))
          throw ParseError("nonzero ternary product with repeated first slots at (" +
                           std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")");
        continue;
      }
      std::pair<std::size_t, std::size_t> mm = std::minmax(i, j);
      auto key = std::make_tuple(mm.first, mm.second, k);
      if (seen.count(key))
        throw ParseError("conflicting ternary entries for (" + std::to_string(mm.first) +
                         "," + std::to_string(mm.second) + "," + std::to_string(k) + ")");
      seen[key] = true;
      if (i < j)
        bld.set_ternary(i, j, k, std::move(v));
      else
        bld.set_ternary(j, i, k, vec_neg(v));
    }
  }
  if (body.contains("twist")) bld.set_twist(load_matrix<K>(body["twist"], f, n, n));

  AlgebraDocument<K> out{bld.build(), {}};
  if (doc.contains("subspaces")) {
    if (!doc["subspaces"].is_object()) throw ParseError("subspaces must be an object");
    for (const auto& [name, rows] : doc["subspaces"].items()) {
      if (!rows.is_array()) throw ParseError("subspace rows must be an array");
      std::vector<Vec<K>> vs;
      for (const auto& r : rows) vs.push_back(load_vec<K>(r, f, n));
      out.subspaces.emplace(name, Subspace<K>::span_vecs(vs, n, f));
    }
  }
  return out;
}

AnyAlgebraDocument load_algebra_document(const json& doc);
AnyAlgebraDocument load_algebra_document_text(const std::string& text);

template <class K>
json algebra_document_json(const Algebra<K>& a) {
  json doc;
  doc["header"]["field"] = field_json(a.field());
  doc["header"]["dim"] = a.dim();
  doc["header"]["basis"] = a.basis_names();
  json bin = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!vec_is_zero(a.binary(i, j)))
        bin.push_back(json{{"i", i}, {"j", j}, {"value", vec_json(a.binary(i, j))}});
  json ter = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!vec_is_zero(a.ternary(i, j, k)))
          ter.push_back(
              json{{"i", i}, {"j", j}, {"k", k}, {"value", vec_json(a.ternary(i, j, k))}});
  doc["body"]["binary"] = std::move(bin);
  doc["body"]["ternary"] = std::move(ter);
  doc["body"]["twist"] = matrix_json(a.twist());
  return doc;
}

/* --- factor-set documents ----------------------------------------------------

   { "field": ..., "q": , "z": , "pi2": [{"i","j","value"}], "pi3": [...] }
   with the same sparsity and skew conventions as algebra bodies; values are
   center coordinates (length z). */

template <class K>
json factor_set_json(const FactorSet<K>& fs) {
  json doc;
  doc["field"] = field_json(fs.field);
  doc["q"] = fs.q;
  doc["z"] = fs.z;
  json p2 = json::array();
  for (std::size_t i = 0; i < fs.q; ++i)
    for (std::size_t j = i + 1; j < fs.q; ++j)
      if (!vec_is_zero(fs.pi2[i][j]))
        p2.push_back(json{{"i", i}, {"j", j}, {"value", vec_json(fs.pi2[i][j])}});
  json p3 = json::array();
  for (std::size_t i = 0; i < fs.q; ++i)
    for (std::size_t j = i + 1; j < fs.q; ++j)
      for (std::size_t k = 0; k < fs.q; ++k)
        if (!vec_is_zero(fs.pi3[i][j][k]))
          p3.push_back(
              json{{"i", i}, {"j", j}, {"k", k}, {"value", vec_json(fs.pi3[i][j][k])}});
  doc["pi2"] = std::move(p2);
  doc["pi3"] = std::move(p3);
  return doc;
}

template <class K>
FactorSet<K> load_factor_set_as(const json& doc, typename K::Field f) {
  if (!doc.is_object() || !doc.contains("q") || !doc.contains("z"))
    throw ParseError("factor-set document needs q and z");
  if (!json_is_index(doc["q"]) || !json_is_index(doc["z"]))
    throw ParseError("q and z must be non-negative integers");
  const std::size_t q = doc["q"].template get<std::size_t>();
  const std::size_t z = doc["z"].template get<std::size_t>();
  FactorSet<K> fs = FactorSet<K>::zero(f, q, z);
  auto idx = [&](const json& e, const char* key) {
    if (!e.contains(key) || !json_is_index(e[key]))
      throw ParseError(std::string("entry needs index \"") + key + "\"");
    std::size_t v = e[key].template get<std::size_t>();
    if (v >= q) throw ParseError(std::string("index \"") + key + "\" out of range");
    return v;
  };
  if (doc.contains("pi2")) {
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const auto& e : doc["pi2"]) {
      std::size_t i = idx(e, "i"), j = idx(e, "j");
      Vec<K> v = load_vec<K>(e["value"], f, z);
      if (i == j) {
        if (!vec_is_zero(v)) throw ParseError("nonzero pi2 at equal indices");
        continue;
      }
      std::pair<std::size_t, std::size_t> key = std::minmax(i, j);
      if (seen.count(key)) throw ParseError("conflicting pi2 entries");
      seen[key] = true;
      fs.pi2[std::min(i, j)][std::max(i, j)] = i < j ? v : vec_neg(v);
      fs.pi2[std::max(i, j)][std::min(i, j)] = i < j ? vec_neg(v) : v;
    }
  }
  if (doc.contains("pi3")) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> seen;
    for (const auto& e : doc["pi3"]) {
      std::size_t i = idx(e, "i"), j = idx(e, "j"), k = idx(e, "k");
      Vec<K> v = load_vec<K>(e["value"], f, z);
      if (i == j) {
        if (!vec_is_zero(v)) throw ParseError("nonzero pi3 with repeated first slots");
        continue;
      }
      std::pair<std::size_t, std::size_t> mm = std::minmax(i, j);
      auto key = std::make_tuple(mm.first, mm.second, k);
      if (seen.count(key)) throw ParseError("conflicting pi3 entries");
      seen[key] = true;
      fs.pi3[mm.first][mm.second][k] = i < j ? v : vec_neg(v);
      fs.pi3[mm.second][mm.first][k] = i < j ? vec_neg(v) : v;
    }
  }
  return fs;
}

/* --- witness documents ------------------------------------------------------ */

template <class K>
json witness_json(const IsoclinismWitness<K>& w) {
  json doc;
  doc["theta"] = matrix_json(w.theta);
  doc["beta"] = matrix_json(w.beta);
  return doc;
}

template <class K>
IsoclinismWitness<K> load_witness_as(const json& doc, typename K::Field f) {
  if (!doc.is_object() || !doc.contains("theta") || !doc.contains("beta"))
    throw ParseError("witness document needs theta and beta");
  auto shape = [](const json& m, const char* what) -> std::pair<std::size_t, std::size_t> {
    if (!m.is_array()) throw ParseError(std::string(what) + " must be a matrix");
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    return {rows, cols};
  };
  auto [tr, tc] = shape(doc["theta"], "theta");
  auto [br, bc] = shape(doc["beta"], "beta");
  return {load_matrix<K>(doc["theta"], f, tr, tc), load_matrix<K>(doc["beta"], f, br, bc)};
}

/* --- files ------------------------------------------------------------------ */

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
json parse_json_text(const std::string& text);

}  // namespace hlya
