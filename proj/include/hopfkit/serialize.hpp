#pragma once

// File formats: .hopf (structure constants), .rmat (R-matrix over a .hopf
// ambient) and .datum (group data for the lattice analyzer). All three are
// JSON documents; scalars are literals at the document conductor.
// Writers emit one entry per line in storage order, so the text is a
// deterministic function of the structure and a parse/write cycle is
// byte-identical.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfkit/datum.hpp"
#include "hopfkit/hopf_algebra.hpp"

namespace hopfkit {

namespace detail {

inline std::string json_str(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string literal_at(const CycNumber& c, std::int64_t N) { return json_str(c.embed(N).to_string()); }

// Emits `"key": [` + one line per item + `]`.
template <class Items, class Fn>
void write_array(std::ostream& os, const char* key, const Items& items, Fn item, bool last = false) {
  os << "  \"" << key << "\": [";
  bool first = true;
  for (const auto& x : items) {
    os << (first ? "\n    " : ",\n    ");
    item(os, x);
    first = false;
  }
  os << (first ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

inline void write_sparse(std::ostream& os, const std::vector<std::pair<std::uint32_t, CycNumber>>& terms,
                         std::int64_t N) {
  os << "[";
  for (std::size_t t = 0; t < terms.size(); ++t)
    os << (t ? ", " : "") << "[" << terms[t].first << ", " << literal_at(terms[t].second, N) << "]";
  os << "]";
}

[[noreturn]] inline void format_error(const std::string& kind, const std::string& why) {
  throw Error(ErrorKind::Syntax, kind + ": " + why);
}

inline nlohmann::json parse_json(const std::string& text, const std::string& kind) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    format_error(kind, e.what());
  }
}

inline const nlohmann::json& field(const nlohmann::json& j, const char* key, const std::string& kind) {
  if (!j.is_object() || !j.contains(key)) format_error(kind, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::uint32_t index_at(const nlohmann::json& v, std::uint32_t dim, const std::string& kind) {
  if (!v.is_number_unsigned()) format_error(kind, "index must be a non-negative integer, got " + v.dump());
  auto i = v.get<std::uint64_t>();
  if (i >= dim) format_error(kind, "index " + std::to_string(i) + " out of range for dim " + std::to_string(dim));
  return static_cast<std::uint32_t>(i);
}

inline CycNumber scalar_at(const nlohmann::json& v, std::int64_t N, const std::string& kind) {
  if (!v.is_string()) format_error(kind, "scalar literal must be a string, got " + v.dump());
  return parse_scalar(v.get<std::string>(), N);
}

inline std::vector<std::pair<std::uint32_t, CycNumber>> sparse_at(const nlohmann::json& v, std::uint32_t dim,
                                                                   std::int64_t N, const std::string& kind) {
  if (!v.is_array()) format_error(kind, "sparse element must be an array");
  std::vector<std::pair<std::uint32_t, CycNumber>> out;
  for (const auto& t : v) {
    if (!t.is_array() || t.size() != 2) format_error(kind, "sparse term must be [index, literal]");
    out.emplace_back(index_at(t[0], dim, kind), scalar_at(t[1], N, kind));
  }
  return out;
}

inline const nlohmann::json& rows_at(const nlohmann::json& j, const char* key, std::size_t width,
                                     const std::string& kind) {
  const auto& a = field(j, key, kind);
  if (!a.is_array()) format_error(kind, std::string("'") + key + "' must be an array");
  for (const auto& r : a)
    if (!r.is_array() || r.size() != width)
      format_error(kind, std::string("'") + key + "' entries must have " + std::to_string(width) + " components");
  return a;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// .hopf

// Fields beyond the core set: name, unit, characters. Certification status is
// not stored; loaders re-certify.
inline std::string write_hopf(const HopfAlgebra& H) {
  const std::int64_t N = H.conductor;
  const auto& s = H.s;
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << detail::json_str(H.name) << ",\n";
  os << "  \"dim\": " << s.dim << ",\n";
  os << "  \"conductor\": " << N << ",\n";
  detail::write_array(os, "labels", H.labels, [](std::ostream& o, const std::string& l) { o << detail::json_str(l); });
  detail::write_array(os, "unit", s.unit, [&](std::ostream& o, const Term<CycNumber>& t) {
    o << "[" << t.index << ", " << detail::literal_at(t.coeff, N) << "]";
  });
  auto triples = [&](const std::vector<std::vector<PairTerm<CycNumber>>>& rows) {
    std::vector<std::pair<std::uint32_t, const PairTerm<CycNumber>*>> flat;
    for (std::uint32_t i = 0; i < rows.size(); ++i)
      for (const auto& t : rows[i]) flat.emplace_back(i, &t);
    return flat;
  };
  auto write_triple = [&](std::ostream& o, const std::pair<std::uint32_t, const PairTerm<CycNumber>*>& e) {
    o << "[" << e.first << ", " << e.second->j << ", " << e.second->k << ", " << detail::literal_at(e.second->coeff, N)
      << "]";
  };
  detail::write_array(os, "mult", triples(s.mult), write_triple);
  detail::write_array(os, "comult", triples(s.comult), write_triple);
  detail::write_array(os, "counit", s.counit,
                      [&](std::ostream& o, const CycNumber& c) { o << detail::literal_at(c, N); });
  std::vector<std::pair<std::uint32_t, const Term<CycNumber>*>> anti;
  for (std::uint32_t i = 0; i < s.antipode.size(); ++i)
    for (const auto& t : s.antipode[i]) anti.emplace_back(i, &t);
  detail::write_array(os, "antipode", anti, [&](std::ostream& o, const auto& e) {
    o << "[" << e.first << ", " << e.second->index << ", " << detail::literal_at(e.second->coeff, N) << "]";
  });
  auto named = [&](std::ostream& o, const NamedElement& e) {
    o << "{\"label\": " << detail::json_str(e.label) << ", \"terms\": ";
    detail::write_sparse(o, e.terms, N);
    o << "}";
  };
  detail::write_array(os, "grouplikes", H.grouplikes, named);
  detail::write_array(os, "characters", H.characters, named, true);
  os << "}\n";
  return os.str();
}

inline HopfAlgebra parse_hopf(const std::string& text) {
  const std::string kind = ".hopf";
  using detail::field;
  using detail::format_error;
  nlohmann::json j = detail::parse_json(text, kind);
  HopfAlgebra H;
  if (j.contains("name")) {
    if (!j["name"].is_string()) format_error(kind, "'name' must be a string");
    H.name = j["name"].get<std::string>();
  }
  const auto& jd = field(j, "dim", kind);
  const auto& jN = field(j, "conductor", kind);
  if (!jd.is_number_unsigned() || jd.get<std::uint64_t>() == 0) format_error(kind, "'dim' must be a positive integer");
  if (!jN.is_number_unsigned() || jN.get<std::uint64_t>() == 0)
    format_error(kind, "'conductor' must be a positive integer");
  if (jd.get<std::uint64_t>() >= kMaxDim) throw Error(ErrorKind::TooLarge, "dimension exceeds index packing limit");
  const auto d = static_cast<std::uint32_t>(jd.get<std::uint64_t>());
  H.conductor = jN.get<std::int64_t>();
  const std::int64_t N = H.conductor;

  const auto& labels = field(j, "labels", kind);
  if (!labels.is_array() || labels.size() != d) format_error(kind, "'labels' must list dim strings");
  for (const auto& l : labels) {
    if (!l.is_string()) format_error(kind, "labels must be strings");
    H.labels.push_back(l.get<std::string>());
  }

  StructureBuilder<ExactField> b(d, ExactField{N});
  if (j.contains("unit")) {
    for (const auto& [k, c] : detail::sparse_at(j["unit"], d, N, kind)) b.add_unit(k, c);
  } else {
    // Without an explicit unit the basis must contain it as b_0.
    b.add_unit(0, CycNumber::one(N));
  }
  for (const auto& r : detail::rows_at(j, "mult", 4, kind))
    b.add_mult(detail::index_at(r[0], d, kind), detail::index_at(r[1], d, kind), detail::index_at(r[2], d, kind),
               detail::scalar_at(r[3], N, kind));
  for (const auto& r : detail::rows_at(j, "comult", 4, kind))
    b.add_comult(detail::index_at(r[0], d, kind), detail::index_at(r[1], d, kind), detail::index_at(r[2], d, kind),
                 detail::scalar_at(r[3], N, kind));
  const auto& counit = field(j, "counit", kind);
  if (!counit.is_array() || counit.size() != d) format_error(kind, "'counit' must list dim literals");
  for (std::uint32_t i = 0; i < d; ++i) b.set_counit(i, detail::scalar_at(counit[i], N, kind));
  for (const auto& r : detail::rows_at(j, "antipode", 3, kind))
    b.add_antipode(detail::index_at(r[0], d, kind), detail::index_at(r[1], d, kind), detail::scalar_at(r[2], N, kind));
  H.s = b.finish();

  auto read_named = [&](const char* key, std::vector<NamedElement>& dst) {
    if (!j.contains(key)) return;
    if (!j[key].is_array()) format_error(kind, std::string("'") + key + "' must be an array");
    for (const auto& e : j[key]) {
      NamedElement ne;
      ne.label = field(e, "label", kind).is_string() ? e["label"].get<std::string>() : "";
      ne.terms = detail::sparse_at(field(e, "terms", kind), d, N, kind);
      dst.push_back(std::move(ne));
    }
  };
  read_named("grouplikes", H.grouplikes);
  read_named("characters", H.characters);
  return H;
}

inline HopfAlgebra load_hopf(const std::string& path) { return parse_hopf(detail::read_file(path)); }
inline void save_hopf(const std::string& path, const HopfAlgebra& H) { detail::write_file(path, write_hopf(H)); }

// ---------------------------------------------------------------------------
// .rmat

struct RmatDocument {
  std::string ambient;  // path of the .hopf file, relative to the .rmat file
  Element R;            // degree 2
};

inline std::string write_rmat(const std::string& ambient, const HopfAlgebra& H, const Element& R) {
  if (R.degree != 2) throw Error(ErrorKind::DimensionMismatch, "R must have degree 2");
  std::ostringstream os;
  os << "{\n  \"ambient\": " << detail::json_str(ambient) << ",\n";
  detail::write_array(os, "terms", R.terms, [&](std::ostream& o, const std::pair<std::uint64_t, CycNumber>& t) {
    o << "[" << leg(t.first, 0) << ", " << leg(t.first, 1) << ", " << detail::literal_at(t.second, H.conductor) << "]";
  }, true);
  os << "}\n";
  return os.str();
}

// Only the ambient reference; the terms need the ambient conductor and dimension.
inline std::string rmat_ambient(const std::string& text) {
  auto j = detail::parse_json(text, ".rmat");
  const auto& a = detail::field(j, "ambient", ".rmat");
  if (!a.is_string()) detail::format_error(".rmat", "'ambient' must be a string");
  return a.get<std::string>();
}

inline RmatDocument parse_rmat(const std::string& text, const HopfAlgebra& H) {
  const std::string kind = ".rmat";
  auto j = detail::parse_json(text, kind);
  RmatDocument doc;
  doc.ambient = rmat_ambient(text);
  ExactField f = H.field();
  Accumulator<ExactField> acc(f);
  for (const auto& r : detail::rows_at(j, "terms", 3, kind))
    acc.add(key2(detail::index_at(r[0], H.dim(), kind), detail::index_at(r[1], H.dim(), kind)),
            detail::scalar_at(r[2], H.conductor, kind));
  doc.R = acc.finish(2);
  return doc;
}

// Loads an .rmat file together with its ambient algebra.
inline std::pair<HopfAlgebra, Element> load_rmat(const std::string& path) {
  const std::string text = detail::read_file(path);
  std::filesystem::path ref(rmat_ambient(text));
  if (ref.is_relative()) ref = std::filesystem::path(path).parent_path() / ref;
  HopfAlgebra H = load_hopf(ref.string());
  RmatDocument doc = parse_rmat(text, H);
  return {std::move(H), std::move(doc.R)};
}

// ---------------------------------------------------------------------------
// .datum

struct DatumFile {
  int theta = 0;
  std::optional<LongMatrix> cartan;
  std::vector<long> group_orders;
  LongMatrix g, chi;
  std::optional<LongMatrix> f;
  std::optional<long> n;

  CartanDatum cartan_datum() const { return CartanDatum{theta, cartan.value_or(LongMatrix{}), group_orders, g, chi}; }
  ReducedDatum reduced_datum() const { return ReducedDatum{theta, group_orders, g, f.value_or(LongMatrix{}), chi}; }
};

inline DatumFile parse_datum(const std::string& text) {
  const std::string kind = ".datum";
  using detail::field;
  using detail::format_error;
  auto j = detail::parse_json(text, kind);
  DatumFile D;
  try {
    D.theta = field(j, "theta", kind).get<int>();
    if (D.theta <= 0) format_error(kind, "'theta' must be positive");
    D.group_orders = field(j, "group_orders", kind).get<std::vector<long>>();
    for (long o : D.group_orders)
      if (o <= 0) format_error(kind, "group orders must be positive");
    D.g = field(j, "g", kind).get<LongMatrix>();
    D.chi = field(j, "chi", kind).get<LongMatrix>();
    if (j.contains("cartan")) D.cartan = j["cartan"].get<LongMatrix>();
    if (j.contains("f")) D.f = j["f"].get<LongMatrix>();
    if (j.contains("n")) D.n = j["n"].get<long>();
  } catch (const nlohmann::json::exception& e) {
    format_error(kind, e.what());
  }
  auto shape = [&](const LongMatrix& m, std::size_t cols, const char* what) {
    if (m.size() != static_cast<std::size_t>(D.theta)) format_error(kind, std::string("'") + what + "' needs theta rows");
    for (const auto& r : m)
      if (r.size() != cols) format_error(kind, std::string("'") + what + "' rows have the wrong length");
  };
  shape(D.g, D.group_orders.size(), "g");
  shape(D.chi, D.group_orders.size(), "chi");
  if (D.f) shape(*D.f, D.group_orders.size(), "f");
  if (D.cartan) shape(*D.cartan, D.theta, "cartan");
  if (D.n && *D.n < 2) format_error(kind, "'n' must be at least 2");
  return D;
}

inline std::string write_datum(const DatumFile& D) {
  nlohmann::ordered_json j;
  j["theta"] = D.theta;
  if (D.cartan) j["cartan"] = *D.cartan;
  j["group_orders"] = D.group_orders;
  j["g"] = D.g;
  j["chi"] = D.chi;
  if (D.f) j["f"] = *D.f;
  if (D.n) j["n"] = *D.n;
  return j.dump(2) + "\n";
}

inline DatumFile load_datum(const std::string& path) { return parse_datum(detail::read_file(path)); }

}  // namespace hopfkit
