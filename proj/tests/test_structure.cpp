#include "doctest.h"

#include "ncgraph/corpus.hpp"
#include "ncgraph/structure.hpp"

using namespace ncg;

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(243) == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 5}});
  CHECK(factorize(48) == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 1}});
}

TEST_CASE("structural predicates") {
  {
    FiniteGroup q8 = builtin("Q8");
    SubgroupLattice lat = all_subgroups(q8);
    StructuralPredicates p = structural_predicates(q8, lat);
    CHECK(!p.is_abelian);
    CHECK(p.is_nilpotent);
    CHECK(p.is_p_group);
    CHECK(p.p == 2);
    CHECK(p.is_minimal_nonabelian);  // all six proper subgroups abelian
    CHECK(p.is_two_generated);
    CHECK(p.generation_rank == 2);
  }
  {
    FiniteGroup s4 = builtin("S4");
    SubgroupLattice lat = all_subgroups(s4);
    StructuralPredicates p = structural_predicates(s4, lat);
    CHECK(!p.is_nilpotent);
    CHECK(!p.is_p_group);
    CHECK(p.is_two_generated);
    CHECK(!p.is_minimal_nonabelian);
  }
  {
    // D8 x C2: not 2-generated, rank 3
    FiniteGroup g = direct_product(builtin("D8"), builtin("C2"));
    SubgroupLattice lat = all_subgroups(g);
    StructuralPredicates p = structural_predicates(g, lat);
    CHECK(!p.is_two_generated);
    CHECK(p.generation_rank == 3);
  }
}

TEST_CASE("nilpotency via p-closure agrees with the lower central series") {
  for (const char* spec : {"C1", "C12", "C24", "S3", "S4", "A4", "D8", "D12", "D16",
                           "Q8", "Q16", "Dic12", "Heis2", "Heis3", "D8xC3", "S3xC2"}) {
    FiniteGroup g = builtin(spec);
    CHECK_MESSAGE(is_nilpotent_p_closure(g) == is_nilpotent_lcs(g), spec);
  }
  CHECK(is_nilpotent_p_closure(builtin("D8xC3")));
  CHECK(!is_nilpotent_p_closure(builtin("S3")));
  CHECK(!is_nilpotent_p_closure(builtin("D12")));
}

TEST_CASE("lower central series shapes") {
  auto series = lower_central_series(builtin("Heis3"));
  REQUIRE(series.size() == 3);  // G > G' > 1
  CHECK(series[1].order == 3);
  CHECK(series[2].order == 1);
  auto s3series = lower_central_series(builtin("S3"));
  CHECK(s3series.back().order == 3);  // stabilizes at A3
}

TEST_CASE("minimal non-abelian groups are 2-generated") {
  for (const char* spec : {"Q8", "D8", "Heis3", "S3"}) {
    FiniteGroup g = builtin(spec);
    SubgroupLattice lat = all_subgroups(g);
    StructuralPredicates p = structural_predicates(g, lat);
    REQUIRE_MESSAGE(p.is_minimal_nonabelian, spec);
    CHECK_MESSAGE(p.is_two_generated, spec);
  }
}

TEST_CASE("two-generated iff rank 2 for p-groups") {
  for (const char* spec : {"C8", "C4xC2", "Q8", "D16", "Heis3", "Q8xC2", "D8xC2",
                           "C2xC2", "C3^2"}) {
    FiniteGroup g = builtin(spec);
    SubgroupLattice lat = all_subgroups(g);
    StructuralPredicates p = structural_predicates(g, lat);
    REQUIRE(p.is_p_group);
    // rank <= 2 means some pair generates (rank 1 = cyclic)
    CHECK_MESSAGE(p.is_two_generated == (p.generation_rank <= 2), spec);
  }
}

TEST_CASE("generation test: closure path equals lattice path") {
  for (const char* spec : {"S4", "Q16", "D12", "C12", "Heis3"}) {
    FiniteGroup g = builtin(spec);
    SubgroupLattice lat = all_subgroups(g);
    for (elem_t x = 0; x < g.order(); ++x)
      for (elem_t y = x; y < g.order(); ++y)
        CHECK(generates_pair(g, x, y) == generates_pair(g, lat, x, y));
  }
}

TEST_CASE("sylow subgroups") {
  FiniteGroup s3 = builtin("S3");
  Subgroup syl3 = sylow_subgroup(s3, 3);
  CHECK(syl3.order == 3);
  CHECK(sylow_subgroup(s3, 2).order == 2);
  CHECK_THROWS_AS(sylow_subgroup(s3, 5), std::invalid_argument);

  FiniteGroup s4 = builtin("S4");
  Subgroup syl2 = sylow_subgroup(s4, 2);
  CHECK(syl2.order == 8);
  // the returned set is a genuine subgroup
  Subgroup closed = subgroup_closure(s4, syl2.elements());
  CHECK(closed.members == syl2.members);

  FiniteGroup h27 = builtin("Heis3");
  CHECK(sylow_subgroup(h27, 3).order == 27);

  FiniteGroup g = builtin("D8xC3");
  CHECK(sylow_subgroup(g, 2).order == 8);
  CHECK(sylow_subgroup(g, 3).order == 3);
}

TEST_CASE("p-decomposition") {
  FiniteGroup g = builtin("C12");
  for (elem_t x = 0; x < g.order(); ++x) {
    auto [xp, xq] = p_decompose(g, x, 2);
    CHECK(g.product(xp, xq) == x);
    CHECK(g.commute(xp, xq));
    std::uint32_t op = g.element_order(xp);
    while (op % 2 == 0) op /= 2;
    CHECK(op == 1);
    CHECK(g.element_order(xq) % 2 != 0);
  }
  FiniteGroup h = builtin("D8xC3");
  for (elem_t x = 0; x < h.order(); ++x) {
    auto [xp, xq] = p_decompose(h, x, 2);
    CHECK(h.product(xp, xq) == x);
    CHECK(h.commute(xp, xq));
  }
}

TEST_CASE("is_cyclic") {
  CHECK(is_cyclic(builtin("C24")));
  CHECK(is_cyclic(builtin("C1")));
  CHECK(!is_cyclic(builtin("C2xC2")));
  CHECK(!is_cyclic(builtin("S3")));
}
