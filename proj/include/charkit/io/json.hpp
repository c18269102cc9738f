#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "charkit/eigen/eigen.hpp"
#include "charkit/spectrum/support.hpp"
#include "charkit/wavelets/tomography.hpp"
#include "charkit/zmodpl/zmodpl.hpp"

namespace charkit {

using Json = nlohmann::ordered_json;

using AnyGrid = std::variant<RationalGrid, CyclotomicGrid, ComplexGrid>;

// Field-level problems found while reading a document; thrown together.
class SchemaErrors {
 public:
  explicit SchemaErrors(std::string what) : what_(std::move(what)) {}
  void add(const std::string& field, const std::string& problem) { items_.push_back(field + ": " + problem); }
  bool empty() const { return items_.empty(); }
  void raise_if_any() const {
    if (items_.empty()) return;
    std::string msg = "malformed " + what_ + " (" + std::to_string(items_.size()) + " problem(s)): ";
    for (std::size_t i = 0; i < items_.size(); ++i) msg += (i ? "; " : "") + items_[i];
    throw DataError(msg);
  }

 private:
  std::string what_;
  std::vector<std::string> items_;
};

inline Json to_json(const Rational& q) { return format_rational(q); }

inline Json to_json(const Cyclotomic& z) {
  Json j = {{"p", z.p()}};
  if (z.exponent() > 1) j["l"] = z.exponent();
  Json c = Json::array();
  for (const Rational& q : z.coeffs()) c.push_back(format_rational(q));
  j["coeffs"] = std::move(c);
  return j;
}

inline Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const Point& x) { return Json(x.coords); }

inline Json to_json(const ProjectiveLine& l) { return to_json(l.rep); }

namespace detail {

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  throw DataError("expected a rational string, got " + j.dump());
}

inline Cyclotomic cyclotomic_from_json(const Json& j, const Ambient& amb) {
  if (j.is_string() || j.is_number_integer()) return Cyclotomic::from_rational(rational_from_json(j), amb.p(), amb.exponent());
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw DataError("expected {\"p\":..,\"coeffs\":[..]}, got " + j.dump());
  const std::uint32_t p = j.value("p", amb.p());
  const std::uint32_t l = j.value("l", amb.exponent());
  if (p != amb.p() || l != amb.exponent())
    throw DataError("cyclotomic conductor " + std::to_string(p) + "^" + std::to_string(l) + " does not match the ambient");
  std::vector<Rational> c;
  for (const Json& x : j["coeffs"]) c.push_back(rational_from_json(x));
  return Cyclotomic(p, l, std::move(c));
}

inline Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  throw DataError("expected [re, im], got " + j.dump());
}

template <class T>
T value_from_json(const Json& j, const Ambient& amb) {
  if constexpr (std::is_same_v<T, Rational>) return rational_from_json(j);
  else if constexpr (std::is_same_v<T, Cyclotomic>) return cyclotomic_from_json(j, amb);
  else return complex_from_json(j);
}

inline std::uint32_t uint_field(const Json& j, const char* key, SchemaErrors& errors, bool required = true,
                                std::uint32_t fallback = 0) {
  if (!j.contains(key)) {
    if (required) errors.add(key, "missing");
    return fallback;
  }
  if (!j[key].is_number_unsigned() || j[key].get<std::uint64_t>() > 0xFFFFFFFFu) {
    errors.add(key, "expected a non-negative integer");
    return fallback;
  }
  return j[key].get<std::uint32_t>();
}

inline Ambient ambient_from_json(const Json& j, SchemaErrors& errors) {
  if (!j.is_object()) {
    errors.add("document", "expected a JSON object");
    errors.raise_if_any();
  }
  const std::uint32_t p = uint_field(j, "p", errors);
  const std::uint32_t d = uint_field(j, "d", errors);
  const std::uint32_t l = uint_field(j, "modulus_exponent", errors, false, 1);
  errors.raise_if_any();
  try {
    return Ambient::ring(p, l, d);
  } catch (const Error& e) {
    errors.add("p/d/modulus_exponent", e.what());
    errors.raise_if_any();
    throw;
  }
}

inline void ambient_to_json(Json& j, const Ambient& amb) {
  j["p"] = amb.p();
  j["d"] = amb.d();
  if (amb.exponent() > 1) j["modulus_exponent"] = amb.exponent();
}

inline Point point_from_json(const Json& j, const Ambient& amb) {
  if (!j.is_array()) throw DataError("expected a point array, got " + j.dump());
  std::vector<std::int64_t> raw;
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw DataError("point coordinates must be integers, got " + j.dump());
    raw.push_back(x.get<std::int64_t>());
  }
  for (std::int64_t c : raw)
    if (c < 0 || c >= static_cast<std::int64_t>(amb.modulus()))
      throw DataError("point " + j.dump() + " has a coordinate outside [0," + std::to_string(amb.modulus()) + ")");
  Point x = amb.reduce(raw);
  return x;
}

}  // namespace detail

inline Point point_from_json(const Json& j, const Ambient& amb) { return detail::point_from_json(j, amb); }

template <class T>
Json function_to_json(const Grid<T>& f) {
  Json j;
  detail::ambient_to_json(j, f.ambient());
  j["kind"] = std::string(ScalarTraits<T>::kind);
  Json values = Json::array();
  for (const T& v : f.values()) values.push_back(to_json(v));
  j["values"] = std::move(values);
  return j;
}

inline Json function_to_json(const AnyGrid& g) {
  return std::visit([](const auto& f) { return function_to_json(f); }, g);
}

// Reads a function or spectrum file; every bad field is reported at once.
inline AnyGrid function_from_json(const Json& j) {
  SchemaErrors errors("function file");
  const Ambient amb = detail::ambient_from_json(j, errors);
  std::string kind = "rational";
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) errors.add("kind", "expected a string");
    else kind = j["kind"].get<std::string>();
  }
  if (kind != "rational" && kind != "cyclotomic" && kind != "complex")
    errors.add("kind", "unknown kind \"" + kind + "\" (rational, cyclotomic or complex)");
  if (!j.contains("values")) errors.add("values", "missing");
  else if (!j["values"].is_array()) errors.add("values", "expected an array");
  else if (j["values"].size() != amb.size())
    errors.add("values", "expected " + std::to_string(amb.size()) + " entries, got " + std::to_string(j["values"].size()));
  errors.raise_if_any();

  auto read = [&]<class T>(std::type_identity<T>) -> AnyGrid {
    std::vector<T> v;
    v.reserve(amb.size());
    for (std::size_t i = 0; i < amb.size(); ++i) {
      try {
        v.push_back(detail::value_from_json<T>(j["values"][i], amb));
      } catch (const Error& e) {
        errors.add("values[" + std::to_string(i) + "]", e.what());
        v.push_back(ScalarTraits<T>::zero(amb));
      }
    }
    errors.raise_if_any();
    return Grid<T>(amb, std::move(v));
  };
  if (kind == "rational") return read(std::type_identity<Rational>{});
  if (kind == "cyclotomic") return read(std::type_identity<Cyclotomic>{});
  return read(std::type_identity<Complex>{});
}

template <class T>
Json mass_table_to_json(const MassTable<T>& mt) {
  Json j;
  detail::ambient_to_json(j, mt.ambient);
  Json rows = Json::array();
  for (const auto& [line, m] : mt.masses) {
    Json vals = Json::array();
    for (const T& x : m) vals.push_back(to_json(x));
    rows.push_back({{"s", to_json(line)}, {"m", std::move(vals)}});
  }
  j["masses"] = std::move(rows);
  return j;
}

// Directions may be any nonzero multiple of the canonical representative.
inline MassTable<Rational> mass_table_from_json(const Json& j) {
  SchemaErrors errors("sinogram");
  const Ambient amb = detail::ambient_from_json(j, errors);
  if (!j.contains("masses") || !j["masses"].is_array()) errors.add("masses", "missing or not an array");
  errors.raise_if_any();
  MassTable<Rational> mt{amb, {}};
  for (std::size_t i = 0; i < j["masses"].size(); ++i) {
    const Json& row = j["masses"][i];
    const std::string at = "masses[" + std::to_string(i) + "]";
    try {
      if (!row.is_object() || !row.contains("s") || !row.contains("m") || !row["m"].is_array())
        throw DataError("expected {\"s\":[..],\"m\":[..]}");
      const Point s = detail::point_from_json(row["s"], amb);
      if (s.is_zero()) throw DataError("direction must be nonzero");
      const ProjectiveLine line = ProjectiveLine::through(amb, s);
      if (!(line.rep == s)) throw DataError("direction " + to_string(s) + " is not canonical (use " + to_string(line.rep) + ")");
      std::vector<Rational> m;
      for (const Json& x : row["m"]) m.push_back(detail::rational_from_json(x));
      if (!mt.masses.emplace(line, std::move(m)).second) throw DataError("duplicate direction " + to_string(s));
    } catch (const Error& e) {
      errors.add(at, e.what());
    }
  }
  errors.raise_if_any();
  return mt;
}

template <class T>
Json decomposition_to_json(const Decomposition<T>& dec) {
  Json j;
  j["form"] = to_string(dec.form);
  detail::ambient_to_json(j, dec.ambient);
  j["kind"] = std::string(ScalarTraits<T>::kind);
  j["constant"] = to_json(dec.constant);
  j["total_mass"] = to_json(dec.total_mass);
  Json parts = Json::array();
  for (const Wavelet<T>& w : dec.parts) {
    Json c = Json::array();
    for (const T& x : w.coeffs) c.push_back(to_json(x));
    parts.push_back({{"s", to_json(w.direction)}, {"coeffs", std::move(c)}});
  }
  j["parts"] = std::move(parts);
  return j;
}

inline Json bandwidth_to_json(const BandwidthReport& r) {
  Json lines = Json::array();
  for (const ProjectiveLine& l : r.lines) lines.push_back(to_json(l));
  return {{"cbw", r.cbw}, {"bw", format_rational(r.bw)}, {"bwd", r.bwd}, {"lines", std::move(lines)}, {"approximate", r.approximate}};
}

inline Json eigen_metadata_to_json(const EigenPair& e) {
  Json basis = Json::array();
  for (const Point& b : e.v.basis()) basis.push_back(to_json(b));
  return {{"eigenvalue", e.eigenvalue_magnitude},
          {"eigenvalue_minus", -e.eigenvalue_magnitude},
          {"transform_kind", to_string(e.kind)},
          {"degenerate", e.degenerate},
          {"subspace", std::move(basis)},
          {"x", to_json(e.x)},
          {"exact", e.plus_exact.has_value()}};
}

template <class T>
Json multiscale_to_json(const MultiscaleDecomposition<T>& dec) {
  Json j;
  detail::ambient_to_json(j, dec.ambient);
  j["constant"] = to_json(dec.constant);
  Json parts = Json::array();
  for (const RingWavelet<T>& w : dec.parts) {
    Json c = Json::array();
    for (const T& x : w.coeffs) c.push_back(to_json(x));
    parts.push_back({{"v", to_json(w.direction)}, {"level", w.level}, {"coeffs", std::move(c)}});
  }
  j["part_count"] = dec.parts.size();
  j["parts"] = std::move(parts);
  return j;
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(origin + ": invalid JSON: " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// A flat "path  value" listing of a report, for --format table.
inline std::string to_table(const Json& j) {
  std::ostringstream out;
  auto scalar_row = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const Json& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  auto walk = [&](auto&& self, const Json& v, const std::string& path) -> void {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) self(self, it.value(), path.empty() ? it.key() : path + "." + it.key());
    } else if (v.is_array() && !scalar_row(v)) {
      for (std::size_t i = 0; i < v.size(); ++i) self(self, v[i], path + "[" + std::to_string(i) + "]");
    } else {
      out << path << "  " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  };
  walk(walk, j, "");
  return out.str();
}

}  // namespace charkit
