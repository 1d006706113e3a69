#include "ncgraph/goursat.hpp"

#include <stdexcept>
#include <unordered_set>

#include "ncgraph/structure.hpp"

namespace ncg {
namespace {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Discrete log of each element in the prime-cyclic quotient G/N: the coset
/// N*g0^k gets label k, for a fixed g0 outside N.
std::vector<std::uint32_t> coset_dlog(const FiniteGroup& g, const Subgroup& n,
                                      std::uint32_t q) {
  std::vector<std::uint32_t> dlog(g.order(), 0);
  elem_t g0 = 0;
  while (n.members.test(g0)) ++g0;
  elem_t pw = kIdentity;
  std::vector<elem_t> nm = n.elements();
  for (std::uint32_t k = 0; k < q; ++k) {
    for (elem_t m : nm) dlog[g.product(m, pw)] = k;
    pw = g.product(pw, g0);
  }
  return dlog;
}

}  // namespace

std::vector<std::pair<GoursatTriple, Subgroup>> goursat_maximal_subgroups(
    const FiniteGroup& g, const FiniteGroup& h, const SubgroupLattice& lat_g,
    const SubgroupLattice& lat_h, const FiniteGroup& product) {
  if (product.order() != g.order() * h.order())
    throw std::invalid_argument("product group does not match the factors");
  const std::uint32_t nh = h.order();
  const std::uint32_t np = product.order();

  std::vector<std::pair<GoursatTriple, Subgroup>> out;
  std::unordered_set<DynBitset, DynBitsetHash> seen;
  auto push = [&](GoursatTriple t, DynBitset members) {
    if (!seen.insert(members).second) return;
    Subgroup s{&product, std::move(members), 0, {}};
    s.order = static_cast<std::uint32_t>(s.members.count());
    out.emplace_back(t, std::move(s));
  };

  for (std::uint32_t mi = 0; mi < lat_g.maximal_ids.size(); ++mi) {
    const Subgroup& mg = lat_g.subgroups[lat_g.maximal_ids[mi]];
    DynBitset mem(np);
    mg.members.for_each_set([&](std::size_t a) {
      for (std::uint32_t b = 0; b < nh; ++b) mem.set(a * nh + b);
    });
    push(GoursatTriple{GoursatKind::left, lat_g.maximal_ids[mi]}, std::move(mem));
  }
  for (std::uint32_t mi = 0; mi < lat_h.maximal_ids.size(); ++mi) {
    const Subgroup& mh = lat_h.subgroups[lat_h.maximal_ids[mi]];
    DynBitset mem(np);
    for (std::uint32_t a = 0; a < g.order(); ++a)
      mh.members.for_each_set([&](std::size_t b) { mem.set(a * nh + b); });
    GoursatTriple t;
    t.kind = GoursatKind::right;
    t.right_id = lat_h.maximal_ids[mi];
    push(t, std::move(mem));
  }

  for (std::uint32_t n1 : maximal_normal_ids(lat_g)) {
    const std::uint32_t q = g.order() / lat_g.subgroups[n1].order;
    if (!is_prime(q))
      throw std::runtime_error(
          "maximal normal subgroup with non-prime index: non-cyclic simple "
          "quotients are not supported");
    auto dlog_g = coset_dlog(g, lat_g.subgroups[n1], q);
    for (std::uint32_t n2 : maximal_normal_ids(lat_h)) {
      if (h.order() / lat_h.subgroups[n2].order != q) continue;
      auto dlog_h = coset_dlog(h, lat_h.subgroups[n2], q);
      // isomorphisms of prime-cyclic quotients: generator -> generator^t
      for (std::uint32_t t = 1; t < q; ++t) {
        DynBitset mem(np);
        for (std::uint32_t a = 0; a < g.order(); ++a) {
          const std::uint32_t want = (dlog_g[a] * t) % q;
          for (std::uint32_t b = 0; b < nh; ++b)
            if (dlog_h[b] == want) mem.set(static_cast<std::size_t>(a) * nh + b);
        }
        GoursatTriple tr;
        tr.kind = GoursatKind::diagonal;
        tr.n1_id = n1;
        tr.n2_id = n2;
        tr.prime = q;
        tr.theta_power = t;
        push(tr, std::move(mem));
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> normal_maximals_with_index_dividing(
    const SubgroupLattice& lat_g, std::uint32_t m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t id : lat_g.maximal_ids)
    if (lat_g.normal[id] && m % lat_g.index_of(id) == 0) out.push_back(id);
  return out;
}

UniqueMaximalResult unique_maximal_membership(const FiniteGroup& g,
                                              const FiniteGroup& h,
                                              const SubgroupLattice& lat_g,
                                              const SubgroupLattice& lat_h,
                                              elem_t x, elem_t y) {
  (void)lat_h;
  if (is_cyclic(g))
    throw std::invalid_argument("hypothesis violation: the left factor is cyclic");
  if (x >= g.order() || y >= h.order())
    throw std::invalid_argument("element index out of range");

  UniqueMaximalResult res;
  const bool y_generates = h.element_order(y) == h.order();
  const auto& in_max = lat_g.elem_in_maximal[x];
  if (in_max.count() != 1) return res;
  std::uint32_t mg = lat_g.maximal_ids[in_max.first_set()];
  res.witness_id = mg;
  if (!y_generates) return res;
  for (std::uint32_t l : normal_maximals_with_index_dividing(lat_g, h.order()))
    if (l != mg) return res;
  res.unique = true;
  return res;
}

}  // namespace ncg
