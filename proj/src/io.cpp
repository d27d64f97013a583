#include "precy/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace precy {

namespace {

std::string at(const std::string& where, const std::string& pointer) { return where + "#" + pointer; }

const Json& field(const Json& j, const char* key, const std::string& where, const std::string& pointer) {
  if (!j.is_object()) throw ParseError(at(where, pointer), "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(where, pointer), std::string("missing field \"") + key + "\"");
  return *it;
}

void require_schema(const Json& j, const std::string& where) {
  const Json& v = field(j, "schema_version", where, "");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
    throw ParseError(at(where, "/schema_version"), "unsupported schema_version (expected " +
                                                      std::to_string(kSchemaVersion) + ")");
  }
}

Scalar scalar_of(const Json& j, const std::string& where, const std::string& pointer) {
  if (!j.is_string()) throw ParseError(at(where, pointer), "rationals must be strings such as \"3/2\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(at(where, pointer), e.what());
  }
}

int index_of(const Json& j, std::size_t bound, const std::string& where, const std::string& pointer) {
  if (!j.is_number_integer()) throw ParseError(at(where, pointer), "expected an integer index");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound) {
    throw ParseError(at(where, pointer), "index " + std::to_string(v) + " out of range [0, " +
                                             std::to_string(bound) + ")");
  }
  return static_cast<int>(v);
}

const Json& array_field(const Json& j, const char* key, const std::string& where, const std::string& pointer) {
  const Json& a = field(j, key, where, pointer);
  if (!a.is_array()) throw ParseError(at(where, pointer + "/" + key), "expected an array");
  return a;
}

Sort sort_of(const Json& j, const std::string& where, const std::string& pointer) {
  if (j == "A") return Sort::Alg;
  if (j == "A*") return Sort::Dual;
  throw ParseError(at(where, pointer), "sort must be \"A\" or \"A*\"");
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json residual_json(const SparseResidual& r) {
  Json out = Json::array();
  for (const auto& e : r) out.push_back({{"index", e.index}, {"value", to_string(e.value)}});
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + " (byte " + std::to_string(e.byte) + ")", "malformed JSON");
  }
}

namespace {

bool is_flat_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

/// Arrays of primitives go on one line; everything else is indented.
void dump_into(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + Json(k).dump() + ": ";
      dump_into(out, v, indent + 2);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump_into(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  dump_into(out, j, 0);
  return out + "\n";
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string(), "cannot write file");
  out << canonical_dump(j);
}

Json to_json(const AssocAlgebra& alg) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = alg.name();
  j["dim"] = alg.dim();
  j["basis"] = alg.basis_names();
  if (alg.unit()) {
    Json u = Json::array();
    for (const auto& c : *alg.unit()) u.push_back(to_string(c));
    j["unit"] = std::move(u);
  }
  Json sc = Json::array();
  for (const auto& c : alg.structure_constants()) sc.push_back({c.i, c.j, c.k, to_string(c.value)});
  j["structure_constants"] = std::move(sc);
  return j;
}

AssocAlgebra algebra_from_json(const Json& j, const std::string& where) {
  require_schema(j, where);
  const Json& name = field(j, "name", where, "");
  if (!name.is_string()) throw ParseError(at(where, "/name"), "expected a string");
  const Json& dimj = field(j, "dim", where, "");
  if (!dimj.is_number_integer() || dimj.get<long long>() <= 0) throw ParseError(at(where, "/dim"), "dim must be a positive integer");
  const auto n = static_cast<std::size_t>(dimj.get<long long>());
  const Json& basis = array_field(j, "basis", where, "");
  if (basis.size() != n) throw ParseError(at(where, "/basis"), "basis length differs from dim");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].is_string()) throw ParseError(at(where, "/basis/" + std::to_string(i)), "expected a string");
    names.push_back(basis[i].get<std::string>());
  }
  std::optional<Vec> unit;
  if (j.contains("unit")) {
    const Json& u = array_field(j, "unit", where, "");
    if (u.size() != n) throw ParseError(at(where, "/unit"), "unit length differs from dim");
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_of(u[i], where, "/unit/" + std::to_string(i)));
    unit = std::move(v);
  }
  const Json& scj = array_field(j, "structure_constants", where, "");
  std::vector<StructureConstant> sc;
  for (std::size_t e = 0; e < scj.size(); ++e) {
    const std::string p = "/structure_constants/" + std::to_string(e);
    if (!scj[e].is_array() || scj[e].size() != 4) throw ParseError(at(where, p), "expected [i, j, k, \"p/q\"]");
    sc.push_back({index_of(scj[e][0], n, where, p + "/0"), index_of(scj[e][1], n, where, p + "/1"),
                  index_of(scj[e][2], n, where, p + "/2"), scalar_of(scj[e][3], where, p + "/3")});
  }
  try {
    return AssocAlgebra(name.get<std::string>(), names, sc, unit);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

AssocAlgebra load_algebra(const std::filesystem::path& path) {
  return algebra_from_json(read_json_file(path), path.string());
}

Json to_json(const AssocAlgebra& alg, const DoubleBracket& d) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = to_json(alg);
  Json e = Json::array();
  for (const auto& [k, v] : d.entries()) e.push_back({k[0], k[1], k[2], k[3], to_string(v)});
  j["entries"] = std::move(e);
  return j;
}

DoubleBracket bracket_from_json(const Json& j, const AssocAlgebra& alg, const std::string& where,
                                const std::filesystem::path& base_dir) {
  require_schema(j, where);
  const Json& aj = field(j, "algebra", where, "");
  AssocAlgebra declared = [&] {
    if (aj.is_string()) return load_algebra(base_dir / aj.get<std::string>());
    return algebra_from_json(aj, where + "#/algebra");
  }();
  if (!(declared == alg)) {
    throw ParseError(at(where, "/algebra"), "bracket algebra \"" + declared.name() +
                                                "\" differs from the algebra given on the command line");
  }
  const std::size_t n = alg.dim();
  const Json& ej = array_field(j, "entries", where, "");
  std::map<BracketKey, Scalar> entries;
  for (std::size_t e = 0; e < ej.size(); ++e) {
    const std::string p = "/entries/" + std::to_string(e);
    if (!ej[e].is_array() || ej[e].size() != 5) throw ParseError(at(where, p), "expected [i, j, k, l, \"p/q\"]");
    BracketKey key{};
    for (int q = 0; q < 4; ++q) key[q] = index_of(ej[e][q], n, where, p + "/" + std::to_string(q));
    if (entries.contains(key)) throw ParseError(at(where, p), "duplicate entry");
    entries[key] = scalar_of(ej[e][4], where, p + "/4");
  }
  return DoubleBracket(n, entries);
}

DoubleBracket load_bracket(const std::filesystem::path& path, const AssocAlgebra& alg) {
  return bracket_from_json(read_json_file(path), alg, path.string(), path.parent_path());
}

Json to_json(const TernaryOperation& m3) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = m3.dim();
  Json comps = Json::array();
  auto component = [&](const TernaryPattern& p) {
    Json c;
    Json inputs = Json::array();
    for (Sort s : p.inputs) inputs.push_back(sort_name(s));
    c["inputs"] = std::move(inputs);
    c["output"] = sort_name(p.output);
    Json e = Json::array();
    for (const auto& [k, v] : m3.table(p)) e.push_back({k[0], k[1], k[2], k[3], to_string(v)});
    c["entries"] = std::move(e);
    comps.push_back(std::move(c));
  };
  component(kTypeBAlg);
  component(kTypeBDual);
  for (const auto& [p, t] : m3.tables()) {
    if (p != kTypeBAlg && p != kTypeBDual) component(p);
  }
  j["components"] = std::move(comps);
  return j;
}

TernaryOperation m3_from_json(const Json& j, std::size_t n, const std::string& where) {
  require_schema(j, where);
  if (j.contains("dim") && j["dim"] != n) throw ParseError(at(where, "/dim"), "dim differs from the algebra");
  const Json& cj = array_field(j, "components", where, "");
  std::map<TernaryPattern, TernaryTableMap> tables;
  std::set<TernaryPattern> seen;
  for (std::size_t c = 0; c < cj.size(); ++c) {
    const std::string p = "/components/" + std::to_string(c);
    const Json& in = array_field(cj[c], "inputs", where, p);
    if (in.size() != 3) throw ParseError(at(where, p + "/inputs"), "m3 components take three inputs");
    TernaryPattern pat;
    for (int q = 0; q < 3; ++q) pat.inputs[q] = sort_of(in[q], where, p + "/inputs/" + std::to_string(q));
    pat.output = sort_of(field(cj[c], "output", where, p), where, p + "/output");
    if (!seen.insert(pat).second) throw ParseError(at(where, p), "component " + to_string(pat) + " listed twice");
    const Json& ej = array_field(cj[c], "entries", where, p);
    auto& table = tables[pat];
    for (std::size_t e = 0; e < ej.size(); ++e) {
      const std::string pe = p + "/entries/" + std::to_string(e);
      if (!ej[e].is_array() || ej[e].size() != 5) throw ParseError(at(where, pe), "expected [i1, i2, i3, k, \"p/q\"]");
      TernaryKey key{};
      for (int q = 0; q < 4; ++q) key[q] = index_of(ej[e][q], n, where, pe + "/" + std::to_string(q));
      if (table.contains(key)) throw ParseError(at(where, pe), "duplicate entry");
      table[key] = scalar_of(ej[e][4], where, pe + "/4");
    }
  }
  try {
    return TernaryOperation(n, tables);
  } catch (const DomainError& e) {
    throw ParseError(where, e.what());
  }
}

TernaryOperation load_m3(const std::filesystem::path& path, std::size_t n) {
  return m3_from_json(read_json_file(path), n, path.string());
}

Json to_json(const AssocAlgebra& alg, const RepPoint& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = p.n;
  Json mats = Json::object();
  for (std::size_t a = 0; a < p.mats.size(); ++a) mats[alg.basis_names()[a]] = matrix_json(p.mats[a]);
  j["matrices"] = std::move(mats);
  return j;
}

namespace {

RepPoint seed_from_json(const Json& j, const AssocAlgebra& alg, const std::string& where, const std::string& p) {
  const Json& nj = field(j, "n", where, p);
  if (!nj.is_number_integer() || nj.get<long long>() <= 0) throw ParseError(at(where, p + "/n"), "n must be a positive integer");
  const auto n = static_cast<std::size_t>(nj.get<long long>());
  const Json& mj = field(j, "matrices", where, p);
  if (!mj.is_object()) throw ParseError(at(where, p + "/matrices"), "expected an object keyed by basis names");
  RepPoint out{n, std::vector<Matrix>(alg.dim(), Matrix(n, n))};
  for (const auto& [name, rows] : mj.items()) {
    const std::string pm = p + "/matrices/" + name;
    const int a = alg.index_of(name);
    if (a < 0) throw ParseError(at(where, pm), "unknown basis element \"" + name + "\"");
    if (!rows.is_array() || rows.size() != n) throw ParseError(at(where, pm), "expected " + std::to_string(n) + " rows");
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n) {
        throw ParseError(at(where, pm + "/" + std::to_string(r)), "expected " + std::to_string(n) + " entries");
      }
      for (std::size_t c = 0; c < n; ++c) {
        out.mats[a](r, c) = scalar_of(rows[r][c], where, pm + "/" + std::to_string(r) + "/" + std::to_string(c));
      }
    }
  }
  if (mj.size() != alg.dim()) throw ParseError(at(where, p + "/matrices"), "every basis element needs a matrix");
  return out;
}

}  // namespace

std::vector<RepPoint> seeds_from_json(const Json& j, const AssocAlgebra& alg, const std::string& where) {
  require_schema(j, where);
  if (!j.contains("seeds")) return {seed_from_json(j, alg, where, "")};
  const Json& sj = array_field(j, "seeds", where, "");
  std::vector<RepPoint> out;
  for (std::size_t s = 0; s < sj.size(); ++s) out.push_back(seed_from_json(sj[s], alg, where, "/seeds/" + std::to_string(s)));
  return out;
}

std::vector<RepPoint> load_seeds(const std::filesystem::path& path, const AssocAlgebra& alg) {
  return seeds_from_json(read_json_file(path), alg, path.string());
}

Json to_json(const CheckReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["pass"] = r.pass;
  j["evaluated"] = r.evaluated;
  j["failures"] = r.failures;
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back({{"tuple", x.tuple}, {"residual", residual_json(x.residual)}});
  j["witnesses"] = std::move(w);
  return j;
}

Json to_json(const MCReport& r) {
  Json j = to_json(r.check);
  j["arity"] = r.arity;
  return j;
}

Json to_json(const SymbolicTerm& t) {
  Json j;
  j["position"] = t.position;
  j["term"] = to_string(t);
  Json types = Json::array();
  for (ComponentType c : t.m3_types()) types.push_back(to_string(c));
  j["types"] = std::move(types);
  j["main"] = t.is_main();
  return j;
}

Json to_json(const SymbolicEquation& e) {
  Json j;
  j["row"] = to_string(e.row);
  j["label"] = to_string(e.label);
  Json terms = Json::array();
  for (const auto& t : e.terms) terms.push_back(to_json(t));
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace precy
