#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ncgraph/group.hpp"

namespace ncg {

/// On-disk description of a group: either permutation generators (with the
/// common degree) or a full Cayley table, plus optional metadata.  Exactly
/// one representation must be present.
struct GroupFile {
  std::string name;
  std::optional<std::uint32_t> degree;
  std::vector<std::vector<elem_t>> generators;  // image arrays, 0-based
  std::optional<std::uint32_t> order;
  std::vector<std::vector<elem_t>> cayley_table;
  std::optional<std::uint32_t> expected_order;
  std::string catalog_id;
  std::string source;
};

GroupFile parse_group_file(const std::string& text, const std::string& origin);
GroupFile read_group_file(const std::filesystem::path& path);
void write_group_file(const GroupFile& gf, const std::filesystem::path& path);
std::string render_group_file(const GroupFile& gf);

/// Builds the group (enumerate_group or from_cayley_table as appropriate)
/// and checks expected_order when present.
FiniteGroup load_group(const GroupFile& gf, std::uint32_t cap = kDefaultOrderCap,
                       std::uint64_t seed = kDefaultSeed);

/// Cayley-table group file for a built group (round-trip support).
GroupFile to_group_file(const FiniteGroup& g);

}  // namespace ncg
