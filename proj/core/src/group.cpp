#include "ncgraph/group.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace ncg {
namespace {

constexpr std::uint64_t kTableEntryCeiling = 100'000'000;

struct ImageHash {
  std::size_t operator()(const std::vector<elem_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (elem_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

void check_cap(std::uint64_t order, std::uint32_t cap) {
  if (order > cap) throw cap_error("group too large: order exceeds cap");
  if (order * order > kTableEntryCeiling)
    throw cap_error("group too large: Cayley table would exceed the entry ceiling");
}

}  // namespace

elem_t FiniteGroup::power(elem_t a, std::uint64_t k) const {
  elem_t acc = kIdentity;
  elem_t base = a;
  while (k) {
    if (k & 1) acc = product(acc, base);
    base = product(base, base);
    k >>= 1;
  }
  return acc;
}

std::vector<std::vector<elem_t>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<elem_t>> out(order_, std::vector<elem_t>(order_));
  for (std::uint32_t i = 0; i < order_; ++i)
    for (std::uint32_t j = 0; j < order_; ++j) out[i][j] = product(i, j);
  return out;
}

void FiniteGroup::finish(std::string name, std::vector<elem_t> generators) {
  name_ = std::move(name);
  inverse_.assign(order_, 0);
  for (std::uint32_t i = 0; i < order_; ++i) {
    const std::uint16_t* r = row(i);
    for (std::uint32_t j = 0; j < order_; ++j)
      if (r[j] == kIdentity) {
        inverse_[i] = j;
        break;
      }
  }
  element_order_.assign(order_, 1);
  for (std::uint32_t g = 1; g < order_; ++g) {
    std::uint32_t k = 1;
    elem_t x = g;
    while (x != kIdentity) {
      x = product(x, g);
      ++k;
    }
    element_order_[g] = k;
  }
  if (generators.empty() && order_ > 1) {
    // greedy generating set: adjoin the smallest element outside the closure
    std::vector<bool> in(order_, false);
    std::vector<elem_t> known{kIdentity};
    in[kIdentity] = true;
    while (known.size() < order_) {
      elem_t next = 0;
      while (in[next]) ++next;
      generators.push_back(next);
      in[next] = true;
      known.push_back(next);
      for (std::size_t qi = 0; qi < known.size(); ++qi)
        for (elem_t s : generators) {
          elem_t y = product(known[qi], s);
          if (!in[y]) {
            in[y] = true;
            known.push_back(y);
          }
        }
    }
  }
  generators_ = std::move(generators);
}

FiniteGroup FiniteGroup::enumerate(const std::vector<Permutation>& generators,
                                   std::string name, std::uint32_t cap,
                                   std::size_t degree_if_empty) {
  std::size_t degree = generators.empty() ? degree_if_empty : generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  if (cap < 1) throw std::invalid_argument("cap must be positive");

  std::vector<std::vector<elem_t>> elems;
  std::unordered_map<std::vector<elem_t>, elem_t, ImageHash> index;
  auto add = [&](const std::vector<elem_t>& im) -> bool {
    if (index.count(im)) return false;
    if (elems.size() + 1 > cap || (elems.size() + 1) * (elems.size() + 1) > kTableEntryCeiling)
      throw cap_error("group too large: closure exceeds cap");
    index.emplace(im, static_cast<elem_t>(elems.size()));
    elems.push_back(im);
    return true;
  };

  add(Permutation::identity(degree).images());
  std::vector<std::vector<elem_t>> gen_images;
  for (const auto& g : generators) {
    add(g.images());
    gen_images.push_back(g.images());
  }
  // breadth-first closure under right multiplication by the generators
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    std::vector<elem_t> cur = elems[qi];
    for (const auto& g : gen_images) {
      std::vector<elem_t> next(degree);
      for (std::size_t i = 0; i < degree; ++i) next[i] = g[cur[i]];
      add(next);
    }
  }

  FiniteGroup out;
  out.order_ = static_cast<std::uint32_t>(elems.size());
  out.table_.assign(static_cast<std::size_t>(out.order_) * out.order_, 0);
  std::vector<elem_t> scratch(degree);
  for (std::uint32_t i = 0; i < out.order_; ++i) {
    for (std::uint32_t j = 0; j < out.order_; ++j) {
      const auto& p = elems[i];
      const auto& q = elems[j];
      for (std::size_t k = 0; k < degree; ++k) scratch[k] = q[p[k]];
      out.table_[static_cast<std::size_t>(i) * out.order_ + j] =
          static_cast<std::uint16_t>(index.at(scratch));
    }
  }
  std::vector<elem_t> gen_ids;
  for (const auto& g : gen_images) gen_ids.push_back(index.at(g));
  out.finish(std::move(name), std::move(gen_ids));
  return out;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<elem_t>>& table,
                                           std::string name, std::uint64_t seed) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("empty table");
  if (static_cast<std::uint64_t>(n) * n > kTableEntryCeiling)
    throw cap_error("group too large: Cayley table would exceed the entry ceiling");
  for (const auto& r : table)
    if (r.size() != n) throw std::invalid_argument("table is not square");

  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (elem_t v : table[i]) {
      if (v >= n || seen[v]) throw std::invalid_argument("table row is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t i = 0; i < n; ++i) {
      elem_t v = table[i][j];
      if (seen[v]) throw std::invalid_argument("table column is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (table[0][j] != j || table[j][0] != j)
      throw std::invalid_argument("identity row/column missing at index 0");

  auto at = [&](std::size_t i, std::size_t j) { return table[i][j]; };
  if (n <= 512) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        elem_t ab = at(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            throw std::invalid_argument("associativity violation");
      }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uint64_t samples = 10ull * n * n;
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw std::invalid_argument("associativity violation");
    }
  }

  FiniteGroup out;
  out.order_ = static_cast<std::uint32_t>(n);
  out.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.table_[i * n + j] = static_cast<std::uint16_t>(table[i][j]);
  out.finish(std::move(name), {});
  return out;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::string name, std::uint32_t cap) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order()) * h.order();
  check_cap(n, cap);
  if (name.empty()) name = g.name() + "x" + h.name();

  // group axioms hold componentwise; fill the table directly
  FiniteGroup out;
  out.order_ = static_cast<std::uint32_t>(n);
  out.table_.resize(n * n);
  for (std::uint32_t a1 = 0; a1 < g.order(); ++a1)
    for (std::uint32_t b1 = 0; b1 < h.order(); ++b1) {
      const std::size_t i = static_cast<std::size_t>(a1) * h.order() + b1;
      std::uint16_t* row = out.table_.data() + i * n;
      for (std::uint32_t a2 = 0; a2 < g.order(); ++a2) {
        const std::size_t ga = static_cast<std::size_t>(g.product(a1, a2)) * h.order();
        const std::size_t base = static_cast<std::size_t>(a2) * h.order();
        for (std::uint32_t b2 = 0; b2 < h.order(); ++b2)
          row[base + b2] = static_cast<std::uint16_t>(ga + h.product(b1, b2));
      }
    }
  std::vector<elem_t> gens;
  for (elem_t x : g.generator_indices()) gens.push_back(x * h.order());
  for (elem_t y : h.generator_indices()) gens.push_back(y);
  out.finish(std::move(name), std::move(gens));
  return out;
}

}  // namespace ncg
