#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "curlie/algebra.hpp"

namespace curlie {

using Json = nlohmann::ordered_json;

/// Contents of an algebra file before validation.
struct RawAlgebra {
  std::string kind;  // "lie" or "assoc"
  std::string name;
  std::vector<std::string> labels;
  StructureTable table;
  std::size_t unit_index = 0;
  bool semisimple = false;
};

struct RawRepresentation {
  std::string algebra;
  std::string name;
  std::size_t module_dim = 0;
  std::vector<Matrix> matrices;
};

/// Structural parsing only; throws ParseError. Missing (j,i) entries are
/// filled by antisymmetry (lie) or symmetry (assoc).
RawAlgebra parse_algebra(const Json& j);
RawRepresentation parse_representation(const Json& j);

LieAlgebra build_lie(const RawAlgebra& raw);
CommAssocAlgebra build_assoc(const RawAlgebra& raw);
/// Throws ValidationError when the file names a different algebra.
Representation build_representation(const RawRepresentation& raw, const LieAlgebra& g);

/// Only [x_i,x_j] with i < j (lie) or s_i s_j with i ≤ j (assoc) are written.
Json to_json(const LieAlgebra& g);
Json to_json(const CommAssocAlgebra& s);
Json to_json(const Representation& rep);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// A catalog name or a path to a JSON file.
LieAlgebra load_lie(const std::string& spec);
CommAssocAlgebra load_assoc(const std::string& spec);
Representation load_representation(const std::string& spec, const LieAlgebra& g);

std::uint64_t fnv1a64(std::string_view bytes);
/// 16 hex digits of the FNV-1a hash of the compact JSON dump.
std::string digest(const Json& j);

}  // namespace curlie
