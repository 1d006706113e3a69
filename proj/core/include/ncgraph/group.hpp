#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgraph/perm.hpp"

namespace ncg {

inline constexpr elem_t kIdentity = 0;
inline constexpr std::uint32_t kDefaultOrderCap = 10'000;
inline constexpr std::uint64_t kDefaultSeed = 1;

/// Raised when a construction would exceed a configured size cap.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fully enumerated finite group: elements are indices 0..order-1 with
/// index 0 the identity, multiplication realized as a Cayley table.
///
/// The table is stored as 16-bit indices; the hard ceiling of 1e8 table
/// entries bounds the order by 1e4, so 16 bits always suffice.
class FiniteGroup {
 public:
  /// Breadth-first closure of permutation generators under composition.
  /// Element indexing is the discovery order: identity first, then the
  /// generators in the given order.  `degree_if_empty` sizes the trivial
  /// group when no generators are given.
  static FiniteGroup enumerate(const std::vector<Permutation>& generators,
                               std::string name,
                               std::uint32_t cap = kDefaultOrderCap,
                               std::size_t degree_if_empty = 1);

  /// Validates and adopts a multiplication table (rows/columns must be
  /// permutations, index 0 a two-sided identity).  Associativity is checked
  /// exhaustively for order <= 512 and by seeded sampling of at least
  /// 10*order^2 triples above that.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<elem_t>>& table,
                                       std::string name,
                                       std::uint64_t seed = kDefaultSeed);

  std::uint32_t order() const { return order_; }
  const std::string& name() const { return name_; }
  const std::vector<elem_t>& generator_indices() const { return generators_; }

  elem_t product(elem_t a, elem_t b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  elem_t inverse(elem_t a) const { return inverse_[a]; }
  std::uint32_t element_order(elem_t a) const { return element_order_[a]; }

  bool commute(elem_t a, elem_t b) const { return product(a, b) == product(b, a); }
  /// a^-1 b^-1 a b
  elem_t commutator(elem_t a, elem_t b) const {
    return product(product(inverse_[a], inverse_[b]), product(a, b));
  }
  /// g^-1 a g
  elem_t conjugate(elem_t a, elem_t g) const {
    return product(product(inverse_[g], a), g);
  }
  elem_t power(elem_t a, std::uint64_t k) const;

  const std::uint16_t* row(elem_t a) const {
    return table_.data() + static_cast<std::size_t>(a) * order_;
  }

  /// Copies the table out (for serialization and round-trips).
  std::vector<std::vector<elem_t>> cayley_table() const;

  void rename(std::string name) { name_ = std::move(name); }

 private:
  FiniteGroup() = default;
  /// Fills inverses, element orders and (when `generators` is empty) a
  /// greedy generating set.
  void finish(std::string name, std::vector<elem_t> generators);

  friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&,
                                    std::string, std::uint32_t);

  std::uint32_t order_ = 1;
  std::vector<std::uint16_t> table_;
  std::vector<elem_t> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::vector<elem_t> generators_;
  std::string name_;
};

/// Group on pairs with componentwise product; (g,h) gets index g*|H| + h,
/// so (0,0) is the identity at index 0.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::string name = "",
                           std::uint32_t cap = kDefaultOrderCap);

}  // namespace ncg
