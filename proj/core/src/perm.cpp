#include "ncgraph/perm.hpp"

#include <stdexcept>

namespace ncg {

Permutation::Permutation(std::vector<elem_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (elem_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<elem_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<elem_t>(i);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<elem_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<elem_t>(i);
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<elem_t> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = q(p(static_cast<elem_t>(i)));
  return Permutation(std::move(im));
}

}  // namespace ncg
