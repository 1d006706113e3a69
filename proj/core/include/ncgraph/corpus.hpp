#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncgraph/checks.hpp"

namespace ncg {

/// Builds a named group from a builtin-family spec.  Grammar:
///   term ('x' term)*          direct products, left associative
///   term = family '^' k | family
///   family = C<n> | cyclic(n) | D<m> | dihedral(m), m = order, even
///          | Q<m>/Dic<m> | dicyclic(m), m = order, multiple of 4
///          | S<n> | symmetric(n) | A<n> | alternating(n)
///          | Heis<p> | heisenberg(p), p prime
/// Examples: "S4", "S4xC3", "D8xC3^2", "dihedral(16)".
FiniteGroup builtin(const std::string& spec, std::uint32_t cap = kDefaultOrderCap);

/// One corpus member; product entries carry their factor contexts.
struct CorpusEntry {
  std::string name;
  std::shared_ptr<GroupContext> ctx;
};

/// The standard verification corpus: cyclic n <= 24, dihedral orders 6..48,
/// dicyclic orders 8..48, symmetric n <= 4, alternating 3..4, heisenberg(2)
/// and heisenberg(3), the named products D8xC3, D8xC3^2, Q8xC3, Q8xC5,
/// S3xC2, and all pairwise products of base members of order <= 200.
/// Entries above `max_order` are dropped.
std::vector<CorpusEntry> standard_corpus(std::uint32_t max_order,
                                         std::uint32_t lattice_cap = kDefaultLatticeCap);

}  // namespace ncg
