#include "doctest.h"

#include <unordered_set>

#include "ncgraph/corpus.hpp"
#include "ncgraph/goursat.hpp"

using namespace ncg;

namespace {

struct ProductSetup {
  FiniteGroup g, h, prod;
  SubgroupLattice lat_g, lat_h;
  ProductSetup(const char* a, const char* b)
      : g(builtin(a)),
        h(builtin(b)),
        prod(direct_product(g, h)),
        lat_g(all_subgroups(g)),
        lat_h(all_subgroups(h)) {}
};

std::size_t count_kind(const std::vector<std::pair<GoursatTriple, Subgroup>>& v,
                       GoursatKind k) {
  std::size_t c = 0;
  for (const auto& [t, s] : v)
    if (t.kind == k) ++c;
  return c;
}

void check_equals_brute(const ProductSetup& ps,
                        const std::vector<std::pair<GoursatTriple, Subgroup>>& listed) {
  SubgroupLattice plat = all_subgroups(ps.prod);
  std::unordered_set<DynBitset, DynBitsetHash> brute;
  for (std::uint32_t id : plat.maximal_ids) brute.insert(plat.subgroups[id].members);
  REQUIRE(listed.size() == brute.size());
  for (const auto& [t, s] : listed) CHECK(brute.count(s.members) == 1);
}

}  // namespace

TEST_CASE("klein four-group: one maximal subgroup of each kind") {
  ProductSetup ps("C2", "C2");
  auto ms = goursat_maximal_subgroups(ps.g, ps.h, ps.lat_g, ps.lat_h, ps.prod);
  CHECK(ms.size() == 3);
  CHECK(count_kind(ms, GoursatKind::left) == 1);
  CHECK(count_kind(ms, GoursatKind::right) == 1);
  CHECK(count_kind(ms, GoursatKind::diagonal) == 1);
  check_equals_brute(ps, ms);
}

TEST_CASE("S3 x C2: 4 left, 1 right, 1 diagonal over A3") {
  ProductSetup ps("S3", "C2");
  auto ms = goursat_maximal_subgroups(ps.g, ps.h, ps.lat_g, ps.lat_h, ps.prod);
  CHECK(ms.size() == 6);
  CHECK(count_kind(ms, GoursatKind::left) == 4);
  CHECK(count_kind(ms, GoursatKind::right) == 1);
  CHECK(count_kind(ms, GoursatKind::diagonal) == 1);
  for (const auto& [t, s] : ms)
    if (t.kind == GoursatKind::diagonal) {
      CHECK(t.prime == 2);
      CHECK(ps.lat_g.subgroups[t.n1_id].order == 3);  // N1 = A3
      CHECK(s.order == 6);
    }
  check_equals_brute(ps, ms);
}

TEST_CASE("S4 x C3 has no diagonal maximal subgroup") {
  ProductSetup ps("S4", "C3");
  auto ms = goursat_maximal_subgroups(ps.g, ps.h, ps.lat_g, ps.lat_h, ps.prod);
  CHECK(count_kind(ms, GoursatKind::diagonal) == 0);
  CHECK(ms.size() == 9);  // 8 maximals of S4 on the left, S4 x 1 on the right
  check_equals_brute(ps, ms);
}

TEST_CASE("S3 x S3: diagonal over A3 with the unique C2 isomorphism") {
  ProductSetup ps("S3", "S3");
  auto ms = goursat_maximal_subgroups(ps.g, ps.h, ps.lat_g, ps.lat_h, ps.prod);
  CHECK(ms.size() == 9);
  CHECK(count_kind(ms, GoursatKind::diagonal) == 1);
  check_equals_brute(ps, ms);
}

TEST_CASE("C3 x C3: two diagonals from the two isomorphisms of C3") {
  ProductSetup ps("C3", "C3");
  auto ms = goursat_maximal_subgroups(ps.g, ps.h, ps.lat_g, ps.lat_h, ps.prod);
  CHECK(count_kind(ms, GoursatKind::left) == 1);
  CHECK(count_kind(ms, GoursatKind::right) == 1);
  CHECK(count_kind(ms, GoursatKind::diagonal) == 2);
  check_equals_brute(ps, ms);
}

TEST_CASE("goursat equals brute force on mixed products") {
  for (auto [a, b] : {std::pair{"Q8", "C3"}, std::pair{"C6", "C2"},
                      std::pair{"D8", "C4"}, std::pair{"A4", "C2"}}) {
    ProductSetup ps(a, b);
    auto ms = goursat_maximal_subgroups(ps.g, ps.h, ps.lat_g, ps.lat_h, ps.prod);
    check_equals_brute(ps, ms);
  }
}

TEST_CASE("unique_maximal_membership on S3 x C2") {
  ProductSetup ps("S3", "C2");
  elem_t three_cycle = 0, transposition = 0;
  for (elem_t x = 0; x < 6; ++x) {
    if (ps.g.element_order(x) == 3) three_cycle = x;
    if (ps.g.element_order(x) == 2) transposition = x;
  }
  // (3-cycle, involution): unique, witnessed by A3
  UniqueMaximalResult r = unique_maximal_membership(ps.g, ps.h, ps.lat_g, ps.lat_h,
                                                    three_cycle, 1);
  CHECK(r.unique);
  REQUIRE(r.witness_id.has_value());
  CHECK(ps.lat_g.subgroups[*r.witness_id].order == 3);

  // (transposition, involution): the index-2 normal maximal A3 is not <g>
  r = unique_maximal_membership(ps.g, ps.h, ps.lat_g, ps.lat_h, transposition, 1);
  CHECK(!r.unique);

  // h = identity fails the generation clause
  r = unique_maximal_membership(ps.g, ps.h, ps.lat_g, ps.lat_h, three_cycle, 0);
  CHECK(!r.unique);
}

TEST_CASE("unique_maximal_membership agrees with brute force element-by-element") {
  for (auto [a, b] : {std::pair{"S3", "C2"}, std::pair{"D8", "C3"}, std::pair{"Q8", "C3"}}) {
    ProductSetup ps(a, b);
    SubgroupLattice plat = all_subgroups(ps.prod);
    for (elem_t x = 0; x < ps.g.order(); ++x)
      for (elem_t y = 0; y < ps.h.order(); ++y) {
        UniqueMaximalResult r =
            unique_maximal_membership(ps.g, ps.h, ps.lat_g, ps.lat_h, x, y);
        std::size_t idx = static_cast<std::size_t>(x) * ps.h.order() + y;
        bool brute = plat.elem_in_maximal[idx].count() == 1;
        CHECK(r.unique == brute);
      }
  }
}

TEST_CASE("cyclic left factor is a flagged hypothesis violation") {
  ProductSetup ps("C4", "C2");
  CHECK_THROWS_AS(unique_maximal_membership(ps.g, ps.h, ps.lat_g, ps.lat_h, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("normal maximals with index dividing m") {
  FiniteGroup s3 = builtin("S3");
  SubgroupLattice lat = all_subgroups(s3);
  auto l2 = normal_maximals_with_index_dividing(lat, 2);
  REQUIRE(l2.size() == 1);
  CHECK(lat.subgroups[l2[0]].order == 3);
  CHECK(normal_maximals_with_index_dividing(lat, 3).empty());
}
