#include "ncgraph/structure.hpp"

#include <numeric>
#include <stdexcept>

namespace ncg {

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_cyclic(const FiniteGroup& g) {
  for (elem_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

bool generates_pair(const FiniteGroup& g, elem_t x, elem_t y) {
  const std::uint32_t n = g.order();
  DynBitset got(n);
  got.set(kIdentity);
  std::vector<elem_t> queue{kIdentity};
  elem_t gens[2] = {x, y};
  std::size_t gc = 0;
  if (x != kIdentity) gens[gc++] = x;
  if (y != kIdentity && y != x) gens[gc++] = y;
  std::size_t sz = 1;
  for (std::size_t i = 0; i < gc; ++i)
    if (!got.test(gens[i])) {
      got.set(gens[i]);
      queue.push_back(gens[i]);
      ++sz;
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint16_t* row = g.row(queue[qi]);
    for (std::size_t i = 0; i < gc; ++i) {
      elem_t z = row[gens[i]];
      if (!got.test(z)) {
        got.set(z);
        queue.push_back(z);
        if (2 * ++sz > n) return true;  // a subgroup on more than half is G
      }
    }
  }
  return sz == n;
}

bool generates_pair(const FiniteGroup& g, const SubgroupLattice& lat, elem_t x, elem_t y) {
  (void)g;
  return !lat.elem_in_maximal[x].intersects(lat.elem_in_maximal[y]);
}

bool is_two_generated(const FiniteGroup& g, const SubgroupLattice* lat) {
  const std::uint32_t n = g.order();
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = x; y < n; ++y) {
      bool gen = lat ? generates_pair(g, *lat, x, y) : generates_pair(g, x, y);
      if (gen) return true;
    }
  return false;
}

bool is_nilpotent_p_closure(const FiniteGroup& g) {
  for (auto [p, a] : factorize(g.order())) {
    std::vector<elem_t> pelems;
    for (elem_t x = 0; x < g.order(); ++x) {
      std::uint32_t o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) pelems.push_back(x);
    }
    Subgroup s = subgroup_closure(g, pelems);
    if (s.order != pelems.size()) return false;
  }
  return true;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series;
  DynBitset whole(g.order(), true);
  series.push_back(Subgroup{&g, whole, g.order(), g.generator_indices()});
  for (;;) {
    const Subgroup& prev = series.back();
    std::vector<elem_t> comms;
    DynBitset seen(g.order());
    prev.members.for_each_set([&](std::size_t x) {
      for (elem_t y = 0; y < g.order(); ++y) {
        elem_t c = g.commutator(static_cast<elem_t>(x), y);
        if (!seen.test(c)) {
          seen.set(c);
          comms.push_back(c);
        }
      }
    });
    Subgroup next = subgroup_closure(g, comms);
    if (next.members == prev.members) break;
    series.push_back(std::move(next));
    if (series.back().order == 1) break;
  }
  return series;
}

bool is_nilpotent_lcs(const FiniteGroup& g) {
  return lower_central_series(g).back().order == 1;
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint32_t p) {
  if (p < 2 || g.order() % p != 0)
    throw std::invalid_argument("p does not divide the group order");
  std::uint32_t target = 1;
  {
    std::uint32_t n = g.order();
    while (n % p == 0) {
      n /= p;
      target *= p;
    }
  }
  auto is_p_element = [&](elem_t x) {
    std::uint32_t o = g.element_order(x);
    while (o % p == 0) o /= p;
    return o == 1;
  };
  Subgroup s = subgroup_closure(g, {});
  while (s.order < target) {
    Subgroup norm = normalizer(g, s);
    elem_t grow = g.order();
    for (elem_t x = 0; x < g.order(); ++x)
      if (norm.members.test(x) && !s.members.test(x) && is_p_element(x)) {
        grow = x;
        break;
      }
    if (grow == g.order())
      throw std::logic_error("Sylow growth stalled");  // impossible for a group
    s = closure_from(g, s.members, s.generators, std::span<const elem_t>(&grow, 1));
  }
  return s;
}

std::pair<elem_t, elem_t> p_decompose(const FiniteGroup& g, elem_t x, std::uint32_t p) {
  std::uint32_t o = g.element_order(x);
  std::uint32_t op = 1;
  while (o % p == 0) {
    o /= p;
    op *= p;
  }
  const std::uint32_t oq = o;  // coprime part of the order
  if (op == 1) return {kIdentity, x};
  if (oq == 1) return {x, kIdentity};
  // x_p = x^(oq * t) with oq*t = 1 mod op; x_q = x^(op * s) with op*s = 1 mod oq
  auto modinv = [](std::uint64_t a, std::uint64_t m) {
    std::uint64_t r = 1;
    for (std::uint64_t k = 0; k < m; ++k) {
      if ((a * k) % m == 1) {
        r = k;
        break;
      }
    }
    return r;
  };
  elem_t xp = g.power(x, static_cast<std::uint64_t>(oq) * modinv(oq % op, op));
  elem_t xq = g.power(x, static_cast<std::uint64_t>(op) * modinv(op % oq, oq));
  return {xp, xq};
}

StructuralPredicates structural_predicates(const FiniteGroup& g,
                                           const SubgroupLattice& lat) {
  StructuralPredicates out;
  Subgroup z = center(g);
  out.is_abelian = z.order == g.order();
  out.is_nilpotent = is_nilpotent_p_closure(g);
  auto fac = factorize(g.order());
  if (fac.size() == 1) {
    out.is_p_group = true;
    out.p = fac[0].first;
  }
  out.is_minimal_nonabelian = !out.is_abelian;
  if (out.is_minimal_nonabelian)
    for (std::size_t i = 0; i + 1 < lat.subgroups.size() && out.is_minimal_nonabelian; ++i)
      if (!lat.abelian[i]) out.is_minimal_nonabelian = false;
  out.is_two_generated = is_two_generated(g, &lat);
  if (out.is_p_group) {
    std::uint32_t index = g.order() / lat.frattini().order;
    std::uint32_t rank = 0;
    while (index > 1) {
      index /= out.p;
      ++rank;
    }
    out.generation_rank = rank;
  }
  return out;
}

}  // namespace ncg
