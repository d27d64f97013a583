#pragma once

// JSON documents for algebras, brackets, m3 tensors, seed representations and
// check reports. Rationals are always strings ("3/2", "-1"); every input
// document carries "schema_version".

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "precy/ainfinity.hpp"
#include "precy/algebra.hpp"
#include "precy/correspondence.hpp"
#include "precy/double_bracket.hpp"
#include "precy/repspaces.hpp"
#include "precy/taxonomy.hpp"
#include "precy/ternary.hpp"

namespace precy {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or schema-violating input. `where` names the file and the JSON
/// pointer of the offending value.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Json read_json_file(const std::filesystem::path& path);
/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const Json& j);
void write_json_file(const std::filesystem::path& path, const Json& j);

Json to_json(const AssocAlgebra& alg);
AssocAlgebra algebra_from_json(const Json& j, const std::string& where);
AssocAlgebra load_algebra(const std::filesystem::path& path);

/// Bracket document with the algebra inlined.
Json to_json(const AssocAlgebra& alg, const DoubleBracket& d);
/// The "algebra" field may be inline or a path relative to the bracket
/// file; either way it must equal `alg`.
DoubleBracket bracket_from_json(const Json& j, const AssocAlgebra& alg, const std::string& where,
                                const std::filesystem::path& base_dir = {});
DoubleBracket load_bracket(const std::filesystem::path& path, const AssocAlgebra& alg);

/// Both type-B components are always written, then any other nonzero one.
Json to_json(const TernaryOperation& m3);
TernaryOperation m3_from_json(const Json& j, std::size_t n, const std::string& where);
TernaryOperation load_m3(const std::filesystem::path& path, std::size_t n);

Json to_json(const AssocAlgebra& alg, const RepPoint& p);
/// A seed document ({"n", "matrices"}) or a list under "seeds".
std::vector<RepPoint> seeds_from_json(const Json& j, const AssocAlgebra& alg, const std::string& where);
std::vector<RepPoint> load_seeds(const std::filesystem::path& path, const AssocAlgebra& alg);

Json to_json(const CheckReport& r);
Json to_json(const MCReport& r);
Json to_json(const SymbolicTerm& t);
Json to_json(const SymbolicEquation& e);

}  // namespace precy
