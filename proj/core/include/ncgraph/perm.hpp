#pragma once

#include <cstdint>
#include <vector>

namespace ncg {

/// Index of a group element inside a FiniteGroup.
using elem_t = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<elem_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  elem_t operator()(elem_t i) const { return images_[i]; }
  const std::vector<elem_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<elem_t> images_;
};

/// Apply `p` first, then `q`: result(i) = q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace ncg
