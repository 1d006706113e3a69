#include "ncgraph/group_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ncg {
namespace {

using nlohmann::json;

std::vector<std::vector<elem_t>> parse_matrix(const json& j, const std::string& what,
                                              const std::string& origin) {
  if (!j.is_array()) throw std::invalid_argument(origin + ": " + what + " must be an array");
  std::vector<std::vector<elem_t>> out;
  for (const auto& row : j) {
    if (!row.is_array())
      throw std::invalid_argument(origin + ": " + what + " rows must be arrays");
    std::vector<elem_t> r;
    for (const auto& v : row) {
      if (!v.is_number_unsigned())
        throw std::invalid_argument(origin + ": " + what + " entries must be non-negative integers");
      r.push_back(v.get<elem_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

GroupFile parse_group_file(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(origin + ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument(origin + ": expected a JSON object");

  GroupFile gf;
  gf.name = j.value("name", std::string());
  if (gf.name.empty()) throw std::invalid_argument(origin + ": missing name");

  const bool has_gens = j.contains("generators") || j.contains("degree");
  const bool has_table = j.contains("cayley_table") || j.contains("order");
  if (has_gens == has_table)
    throw std::invalid_argument(origin +
                                ": exactly one of {degree, generators} or {order, cayley_table} required");
  if (has_gens) {
    if (!j.contains("degree") || !j.contains("generators"))
      throw std::invalid_argument(origin + ": degree and generators are both required");
    gf.degree = j.at("degree").get<std::uint32_t>();
    gf.generators = parse_matrix(j.at("generators"), "generators", origin);
    for (const auto& g : gf.generators)
      if (g.size() != *gf.degree)
        throw std::invalid_argument(origin + ": generator length differs from degree");
  } else {
    if (!j.contains("order") || !j.contains("cayley_table"))
      throw std::invalid_argument(origin + ": order and cayley_table are both required");
    gf.order = j.at("order").get<std::uint32_t>();
    gf.cayley_table = parse_matrix(j.at("cayley_table"), "cayley_table", origin);
    if (gf.cayley_table.size() != *gf.order)
      throw std::invalid_argument(origin + ": cayley_table size differs from order");
  }
  if (j.contains("metadata")) {
    const json& m = j.at("metadata");
    if (m.contains("expected_order")) gf.expected_order = m.at("expected_order").get<std::uint32_t>();
    gf.catalog_id = m.value("catalog_id", std::string());
    gf.source = m.value("source", std::string());
  }
  return gf;
}

GroupFile read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str(), path.filename().string());
}

std::string render_group_file(const GroupFile& gf) {
  json j;
  j["name"] = gf.name;
  if (gf.degree) {
    j["degree"] = *gf.degree;
    j["generators"] = gf.generators;
  } else {
    j["order"] = *gf.order;
    j["cayley_table"] = gf.cayley_table;
  }
  json m = json::object();
  if (gf.expected_order) m["expected_order"] = *gf.expected_order;
  if (!gf.catalog_id.empty()) m["catalog_id"] = gf.catalog_id;
  if (!gf.source.empty()) m["source"] = gf.source;
  if (!m.empty()) j["metadata"] = m;
  return j.dump(1) + "\n";
}

void write_group_file(const GroupFile& gf, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write group file " + path.string());
  out << render_group_file(gf);
}

FiniteGroup load_group(const GroupFile& gf, std::uint32_t cap, std::uint64_t seed) {
  FiniteGroup g = [&] {
    if (gf.degree) {
      std::vector<Permutation> gens;
      gens.reserve(gf.generators.size());
      for (const auto& im : gf.generators) gens.push_back(Permutation(im));
      return FiniteGroup::enumerate(gens, gf.name, cap, *gf.degree);
    }
    return FiniteGroup::from_cayley_table(gf.cayley_table, gf.name, seed);
  }();
  if (gf.expected_order && g.order() != *gf.expected_order)
    throw std::invalid_argument("group " + gf.name + ": order " + std::to_string(g.order()) +
                                " does not match expected_order " +
                                std::to_string(*gf.expected_order));
  return g;
}

GroupFile to_group_file(const FiniteGroup& g) {
  GroupFile gf;
  gf.name = g.name();
  gf.order = g.order();
  gf.cayley_table = g.cayley_table();
  gf.expected_order = g.order();
  return gf;
}

}  // namespace ncg
