#include "curlie/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "curlie/catalog.hpp"
#include "curlie/errors.hpp"

namespace curlie {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::size_t checked_index(const Json& j, const char* key, std::size_t dim) {
  auto value = field<long long>(j, key);
  if (value < 0 || static_cast<std::size_t>(value) >= dim) {
    throw ParseError(std::string("index \"") + key + "\" = " + std::to_string(value) + " out of range");
  }
  return static_cast<std::size_t>(value);
}

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ParseError(std::string("field \"") + key + "\" must be a rational string");
  }
  return parse_rational(j.at(key).get<std::string>());
}

Json combination_json(std::size_t i, std::size_t j, const Combination& c) {
  Json terms = Json::array();
  for (const auto& t : c) terms.push_back({{"k", t.index}, {"coeff", to_string(t.coeff)}});
  return {{"i", i}, {"j", j}, {"terms", terms}};
}

}  // namespace

RawAlgebra parse_algebra(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  RawAlgebra raw;
  raw.kind = field<std::string>(j, "kind");
  if (raw.kind != "lie" && raw.kind != "assoc") throw ParseError("kind must be \"lie\" or \"assoc\"");
  raw.name = field<std::string>(j, "name");
  auto dim = field<long long>(j, "dim");
  if (dim < 0) throw ParseError("dim must be non-negative");
  const auto n = static_cast<std::size_t>(dim);
  raw.labels = j.contains("basis") ? field<std::vector<std::string>>(j, "basis") : std::vector<std::string>{};
  if (raw.labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) raw.labels.push_back("b" + std::to_string(i + 1));
  }
  if (raw.labels.size() != n) throw ParseError("basis has " + std::to_string(raw.labels.size()) + " labels, dim is " + std::to_string(n));
  if (raw.kind == "assoc") raw.unit_index = checked_index(j, "unit_index", n);
  if (j.contains("semisimple")) raw.semisimple = field<bool>(j, "semisimple");

  raw.table = StructureTable(n);
  const Json constants = j.contains("constants") ? j.at("constants") : Json::array();
  if (!constants.is_array()) throw ParseError("constants must be an array");
  std::set<std::pair<std::size_t, std::size_t>> given;
  for (const auto& entry : constants) {
    const std::size_t a = checked_index(entry, "i", n);
    const std::size_t b = checked_index(entry, "j", n);
    if (!given.insert({a, b}).second) {
      throw ParseError("pair (" + std::to_string(a) + "," + std::to_string(b) + ") listed twice");
    }
    const Json terms = entry.contains("terms") ? entry.at("terms") : Json::array();
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const auto& t : terms) raw.table(a, b, checked_index(t, "k", n)) += rational_field(t, "coeff");
  }
  const Rational mirror = raw.kind == "lie" ? -1 : 1;
  for (const auto& [a, b] : given) {
    if (a == b || given.count({b, a})) continue;
    for (std::size_t k = 0; k < n; ++k) raw.table(b, a, k) = mirror * raw.table(a, b, k);
  }
  return raw;
}

RawRepresentation parse_representation(const Json& j) {
  if (!j.is_object()) throw ParseError("representation file must be a JSON object");
  if (j.contains("kind") && j.at("kind") != "representation") throw ParseError("kind must be \"representation\"");
  RawRepresentation raw;
  raw.algebra = field<std::string>(j, "algebra");
  raw.name = j.contains("name") ? field<std::string>(j, "name") : std::string("representation");
  auto d = field<long long>(j, "module_dim");
  if (d < 0) throw ParseError("module_dim must be non-negative");
  raw.module_dim = static_cast<std::size_t>(d);
  const Json mats = field<Json>(j, "matrices");
  if (!mats.is_array()) throw ParseError("matrices must be an array");
  for (const auto& grid : mats) {
    if (!grid.is_array() || grid.size() != raw.module_dim) throw ParseError("matrix must have module_dim rows");
    Matrix m(raw.module_dim, raw.module_dim);
    for (std::size_t r = 0; r < raw.module_dim; ++r) {
      const auto& row = grid[r];
      if (!row.is_array() || row.size() != raw.module_dim) throw ParseError("matrix row must have module_dim entries");
      for (std::size_t c = 0; c < raw.module_dim; ++c) {
        if (!row[c].is_string()) throw ParseError("matrix entries must be rational strings");
        m.set(r, c, parse_rational(row[c].get<std::string>()));
      }
    }
    raw.matrices.push_back(std::move(m));
  }
  return raw;
}

LieAlgebra build_lie(const RawAlgebra& raw) {
  if (raw.kind != "lie") throw ParseError("expected a Lie algebra file, got kind \"" + raw.kind + "\"");
  auto g = LieAlgebra::create(raw.name, raw.labels, raw.table);
  g.mark_semisimple(raw.semisimple);
  return g;
}

CommAssocAlgebra build_assoc(const RawAlgebra& raw) {
  if (raw.kind != "assoc") throw ParseError("expected an assoc algebra file, got kind \"" + raw.kind + "\"");
  return CommAssocAlgebra::create(raw.name, raw.labels, raw.table, raw.unit_index);
}

Representation build_representation(const RawRepresentation& raw, const LieAlgebra& g) {
  if (raw.algebra != g.name()) {
    throw ValidationError("representation is for algebra \"" + raw.algebra + "\", not \"" + g.name() + "\"");
  }
  return Representation::create(g, raw.name, raw.module_dim, raw.matrices);
}

Json to_json(const LieAlgebra& g) {
  Json constants = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      auto br = g.bracket(i, j);
      if (!br.empty()) constants.push_back(combination_json(i, j, br));
    }
  }
  Json out = {{"kind", "lie"}, {"name", g.name()}, {"dim", g.dim()}, {"basis", g.labels()}, {"constants", constants}};
  if (g.marked_semisimple()) out["semisimple"] = true;
  return out;
}

Json to_json(const CommAssocAlgebra& s) {
  Json constants = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = i; j < s.dim(); ++j) {
      if (!s.product(i, j).empty()) constants.push_back(combination_json(i, j, s.product(i, j)));
    }
  }
  return {{"kind", "assoc"},     {"name", s.name()},     {"dim", s.dim()},
          {"basis", s.labels()}, {"unit_index", 0},      {"constants", constants}};
}

Json to_json(const Representation& rep) {
  Json mats = Json::array();
  for (const auto& m : rep.actions()) {
    Json grid = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
      grid.push_back(row);
    }
    mats.push_back(grid);
  }
  return {{"kind", "representation"},
          {"algebra", rep.algebra().name()},
          {"name", rep.name()},
          {"module_dim", rep.module_dim()},
          {"matrices", mats}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

namespace {

bool looks_like_file(const std::string& spec) {
  return spec.find('/') != std::string::npos || spec.ends_with(".json") || std::filesystem::exists(spec);
}

}  // namespace

LieAlgebra load_lie(const std::string& spec) {
  if (looks_like_file(spec)) return build_lie(parse_algebra(read_json_file(spec)));
  return catalog::lie_by_name(spec);
}

CommAssocAlgebra load_assoc(const std::string& spec) {
  if (looks_like_file(spec)) return build_assoc(parse_algebra(read_json_file(spec)));
  return catalog::assoc_by_name(spec);
}

Representation load_representation(const std::string& spec, const LieAlgebra& g) {
  if (looks_like_file(spec)) return build_representation(parse_representation(read_json_file(spec)), g);
  return catalog::rep_by_name(g, spec);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest(const Json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

}  // namespace curlie
