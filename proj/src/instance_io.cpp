#include "clonedual/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clonedual/errors.hpp"
#include "clonedual/galois_hyper.hpp"

namespace clonedual {

namespace {

using nlohmann::json;

// json with ordered (sorted) object keys: deterministic emission.
std::vector<std::size_t> size_array(const json& j, const std::string& field) {
  if (!j.is_array()) {
    throw SchemaError("field '" + field + "' must be an array of naturals");
  }
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) {
      throw SchemaError("field '" + field + "' must contain only naturals");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

const json& require(const json& j, const std::string& field) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw SchemaError("missing field '" + field + "'");
  }
  return *it;
}

std::size_t require_count(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_number_unsigned()) {
    throw SchemaError("field '" + field + "' must be a natural number");
  }
  return v.get<std::size_t>();
}

Partition partition_from_field(const json& j, const std::string& field,
                               std::size_t expected_size) {
  const std::vector<std::size_t> ids = size_array(require(j, field), field);
  if (ids.size() != expected_size) {
    throw SchemaError("field '" + field + "' has length " +
                      std::to_string(ids.size()) + ", expected " +
                      std::to_string(expected_size));
  }
  return Partition::from_block_ids(ids);
}

FinSpace space_from_json(const json& j) {
  const std::size_t points = require_count(j, "points");
  const json& gens = require(j, "generators");
  if (!gens.is_array() || gens.empty()) {
    throw SchemaError("field 'generators' must be a nonempty array");
  }
  std::vector<Partition> generators;
  generators.reserve(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::vector<std::size_t> ids =
        size_array(gens[g], "generators[" + std::to_string(g) + "]");
    if (ids.size() != points) {
      throw SchemaError("generator " + std::to_string(g) + " has length " +
                        std::to_string(ids.size()) + ", expected " +
                        std::to_string(points));
    }
    generators.push_back(Partition::from_block_ids(ids));
  }
  return FinSpace(points, std::move(generators));
}

FinAlgebra algebra_from_json(const json& j) {
  const std::size_t index = require_count(j, "index");
  return FinAlgebra(index, partition_from_field(j, "kernel", index));
}

Tower tower_from_json(const json& j) {
  const std::vector<std::size_t> levels = size_array(require(j, "levels"), "levels");
  const json& bonds_field = require(j, "bonds");
  if (!bonds_field.is_array()) {
    throw SchemaError("field 'bonds' must be an array of index arrays");
  }
  std::vector<std::vector<std::size_t>> bonds;
  bonds.reserve(bonds_field.size());
  for (std::size_t n = 0; n < bonds_field.size(); ++n) {
    bonds.push_back(size_array(bonds_field[n], "bonds[" + std::to_string(n) + "]"));
  }
  return Tower(levels, std::move(bonds));
}

UniformMap map_from_json(const json& j) {
  FinSpace source = space_from_json(require(j, "source"));
  FinSpace target = space_from_json(require(j, "target"));
  std::vector<std::size_t> values = size_array(require(j, "values"), "values");
  return UniformMap(std::move(source), std::move(target), std::move(values));
}

AlgHom hom_from_json(const json& j) {
  FinAlgebra source = algebra_from_json(require(j, "source"));
  FinAlgebra target = algebra_from_json(require(j, "target"));
  std::vector<std::size_t> block_map =
      size_array(require(j, "block_map"), "block_map");
  return AlgHom(std::move(source), std::move(target), std::move(block_map));
}

json space_to_json(const FinSpace& x) {
  json j;
  j["points"] = x.point_count();
  json gens = json::array();
  for (const Partition& g : x.generators()) gens.push_back(g.block_ids());
  j["generators"] = std::move(gens);
  return j;
}

json algebra_to_json(const FinAlgebra& l) {
  json j;
  j["index"] = l.index_size();
  j["kernel"] = l.finest_kernel().block_ids();
  return j;
}

json tower_to_json(const Tower& t) {
  json j;
  j["levels"] = t.level_sizes();
  j["bonds"] = t.bonds();
  return j;
}

}  // namespace

std::string kind_of(const Instance& instance) {
  struct Visitor {
    std::string operator()(const FinSpace&) const { return "space"; }
    std::string operator()(const FinAlgebra&) const { return "algebra"; }
    std::string operator()(const Tower&) const { return "tower"; }
    std::string operator()(const UniformMap&) const { return "map"; }
    std::string operator()(const AlgHom&) const { return "hom"; }
  };
  return std::visit(Visitor{}, instance);
}

Instance ingest_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("parse error: ") + e.what());
  }
  if (!j.is_object()) {
    throw SchemaError("instance document must be an object");
  }
  const json& version = require(j, "format_version");
  if (!version.is_string() || version.get<std::string>() != "1") {
    throw SchemaError("field 'format_version' must be the string \"1\"");
  }
  const json& kind = require(j, "kind");
  if (!kind.is_string()) {
    throw SchemaError("field 'kind' must be a string");
  }
  const std::string k = kind.get<std::string>();
  if (k == "space") return space_from_json(j);
  if (k == "algebra") return algebra_from_json(j);
  if (k == "tower") return tower_from_json(j);
  if (k == "map") return map_from_json(j);
  if (k == "hom") return hom_from_json(j);
  throw SchemaError("unknown kind '" + k +
                    "' (expected space, algebra, tower, map or hom)");
}

Instance ingest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot read '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ingest_text(buffer.str());
}

std::string emit(const Instance& instance) {
  json j;
  j["format_version"] = "1";
  j["kind"] = kind_of(instance);
  struct Visitor {
    json& j;
    void operator()(const FinSpace& x) const { j.update(space_to_json(x)); }
    void operator()(const FinAlgebra& l) const { j.update(algebra_to_json(l)); }
    void operator()(const Tower& t) const { j.update(tower_to_json(t)); }
    void operator()(const UniformMap& f) const {
      j["source"] = space_to_json(f.source());
      j["target"] = space_to_json(f.target());
      j["values"] = f.values();
    }
    void operator()(const AlgHom& h) const {
      j["source"] = algebra_to_json(h.source());
      j["target"] = algebra_to_json(h.target());
      j["block_map"] = h.block_map();
    }
  };
  std::visit(Visitor{j}, instance);
  return j.dump(2) + "\n";
}

std::string describe(const Instance& instance) {
  std::ostringstream out;
  struct Visitor {
    std::ostringstream& out;
    void operator()(const FinSpace& x) const {
      out << "space with " << x.point_count() << " points, "
          << x.generators().size() << " generators\n";
      out << "finest uniform partition: " << to_string(x.finest()) << "\n";
      out << "separated: " << (is_separated(x) ? "yes" : "no") << "\n";
      out << "uniform partitions have < " << x.finest().block_count() + 1
          << " blocks\n";
      if (x.point_count() > 0 && x.point_count() <= 10) {
        out << "supercomplete: " << (is_supercomplete(x) ? "yes" : "no") << "\n";
      }
    }
    void operator()(const FinAlgebra& l) const {
      out << "algebra on index set of size " << l.index_size() << "\n";
      out << "finest kernel: " << to_string(l.finest_kernel()) << "\n";
      out << "spectrum: discrete on " << l.block_count() << " points\n";
    }
    void operator()(const Tower& t) const {
      out << "tower of depth " << t.depth() << ", level sizes";
      for (std::size_t s : t.level_sizes()) out << " " << s;
      out << "\n";
      const TowerReport r = classify(t);
      out << "discrete at truncation: "
          << (r.discrete_at_truncation ? "yes" : "no")
          << " (bonds bijective from level " << r.stable_from << ")\n";
      out << "metrizable presentation: yes (chain-indexed)\n";
    }
    void operator()(const UniformMap& f) const {
      out << "uniformly continuous map: " << f.source().point_count()
          << " points -> " << f.target().point_count() << " points\n";
      out << "dense image: " << (has_dense_image(f) ? "yes" : "no") << "\n";
    }
    void operator()(const AlgHom& h) const {
      out << "homomorphism: " << h.source().block_count()
          << "-block algebra -> " << h.target().block_count()
          << "-block algebra\n";
      out << "isomorphism: " << (is_isomorphism(h) ? "yes" : "no") << "\n";
    }
  };
  std::visit(Visitor{out}, instance);
  return out.str();
}

}  // namespace clonedual
