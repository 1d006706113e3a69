#include "doctest.h"

#include <algorithm>

#include "ncgraph/corpus.hpp"
#include "ncgraph/lattice.hpp"

using namespace ncg;

TEST_CASE("centralizer") {
  FiniteGroup s3 = builtin("S3");
  CHECK(centralizer(s3, kIdentity).order == 6);
  // a transposition centralizes only itself and the identity
  elem_t t = 0;
  for (elem_t x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) t = x;
  Subgroup c = centralizer(s3, t);
  CHECK(c.order == 2);
  CHECK(c.contains(t));

  FiniteGroup c12 = builtin("C12");
  for (elem_t x = 0; x < 12; ++x) CHECK(centralizer(c12, x).order == 12);
}

TEST_CASE("center") {
  CHECK(center(builtin("C9")).order == 9);
  CHECK(center(builtin("S4")).order == 1);
  CHECK(center(builtin("D8")).order == 2);
  CHECK(center(builtin("Q8")).order == 2);
}

TEST_CASE("subgroup_closure") {
  FiniteGroup s3 = builtin("S3");
  elem_t id = kIdentity;
  CHECK(subgroup_closure(s3, std::span<const elem_t>(&id, 1)).order == 1);
  CHECK(subgroup_closure(s3, s3.generator_indices()).order == 6);

  // two transpositions sharing a point generate the whole of S3
  std::vector<elem_t> transpositions;
  for (elem_t x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) transpositions.push_back(x);
  REQUIRE(transpositions.size() == 3);
  std::vector<elem_t> two{transpositions[0], transpositions[1]};
  CHECK(subgroup_closure(s3, two).order == 6);
}

TEST_CASE("all_subgroups counts (frozen by brute force)") {
  struct Row {
    const char* spec;
    std::size_t subgroups;
    std::size_t maximal;
  };
  for (Row r : {Row{"C5", 2, 1}, Row{"S3", 6, 4}, Row{"S4", 30, 8}, Row{"Q8", 6, 3},
                Row{"D8", 10, 3}, Row{"A4", 10, 5}, Row{"D12", 16, 6},
                Row{"D16", 19, 3}, Row{"C4", 3, 1}}) {
    FiniteGroup g = builtin(r.spec);
    SubgroupLattice lat = all_subgroups(g);
    CHECK_MESSAGE(lat.subgroups.size() == r.subgroups, r.spec);
    CHECK_MESSAGE(lat.maximal_ids.size() == r.maximal, r.spec);
    // basic structure
    CHECK(lat.subgroups[lat.trivial_id].order == 1);
    CHECK(lat.subgroups[lat.whole_id].order == g.order());
    for (const Subgroup& s : lat.subgroups) {
      CHECK(g.order() % s.order == 0);
      CHECK(s.contains(kIdentity));
    }
  }
}

TEST_CASE("lattice cap") {
  CHECK_THROWS_AS(all_subgroups(builtin("S4"), 10), cap_error);
}

TEST_CASE("maximal subgroups of D16: one cyclic, two dihedral") {
  FiniteGroup g = builtin("D16");
  SubgroupLattice lat = all_subgroups(g);
  REQUIRE(lat.maximal_ids.size() == 3);
  std::size_t abelian = 0;
  for (std::uint32_t id : lat.maximal_ids) {
    CHECK(lat.subgroups[id].order == 8);
    if (lat.abelian[id]) {
      ++abelian;
      bool has8 = false;
      lat.subgroups[id].members.for_each_set(
          [&](std::size_t x) { has8 |= g.element_order(static_cast<elem_t>(x)) == 8; });
      CHECK(has8);  // the cyclic one
    }
  }
  CHECK(abelian == 1);
}

TEST_CASE("frattini subgroups") {
  {
    FiniteGroup g = direct_product(builtin("C2"), builtin("C2"));
    CHECK(all_subgroups(g).frattini().order == 1);
  }
  CHECK(all_subgroups(builtin("C4")).frattini().order == 2);
  {
    SubgroupLattice lat = all_subgroups(builtin("D16"));
    const Subgroup& phi = lat.frattini();
    CHECK(phi.order == 4);
    bool cyclic = false;
    phi.members.for_each_set([&](std::size_t x) {
      cyclic |= lat.parent->element_order(static_cast<elem_t>(x)) == 4;
    });
    CHECK(cyclic);
  }
  {
    // Q8: Frattini = centre of order 2
    SubgroupLattice lat = all_subgroups(builtin("Q8"));
    CHECK(lat.frattini().order == 2);
    CHECK(lat.frattini().members == center(*lat.parent).members);
  }
}

TEST_CASE("is_normal") {
  FiniteGroup s3 = builtin("S3");
  CHECK(is_normal(s3, center(s3)));
  SubgroupLattice lat = all_subgroups(s3);
  for (const Subgroup& s : lat.subgroups) {
    if (s.order == 3) CHECK(is_normal(s3, s));   // index 2
    if (s.order == 2) CHECK(!is_normal(s3, s));  // generated by a transposition
  }
}

TEST_CASE("containment relation and frattini as non-generators (spot check)") {
  for (const char* spec : {"S3", "D8", "Q8", "C12", "A4"}) {
    FiniteGroup g = builtin(spec);
    SubgroupLattice lat = all_subgroups(g);
    // no duplicate member sets
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
      for (std::size_t j = i + 1; j < lat.subgroups.size(); ++j)
        CHECK(!(lat.subgroups[i].members == lat.subgroups[j].members));
    // frattini members are exactly the non-generators: adjoining one to any
    // set never turns a non-generating set into a generating one
    const DynBitset& phi = lat.frattini().members;
    const std::uint32_t n = g.order();
    for (elem_t x = 0; x < n; ++x) {
      bool non_generator = true;
      // subsets of size <= 3 suffice at these orders (subgroup chains are short)
      std::vector<elem_t> s;
      auto test = [&](std::initializer_list<elem_t> seed) {
        std::vector<elem_t> with(seed);
        with.push_back(x);
        if (subgroup_closure(g, with).order == n &&
            subgroup_closure(g, std::vector<elem_t>(seed)).order != n)
          non_generator = false;
      };
      for (elem_t a = 0; a < n && non_generator; ++a) {
        test({a});
        for (elem_t b = a; b < n && non_generator; ++b) {
          test({a, b});
          for (elem_t c = b; c < n && non_generator; ++c) test({a, b, c});
        }
      }
      CHECK(phi.test(x) == non_generator);
    }
  }
}

TEST_CASE("subgroup_as_group materializes A3 as C3") {
  FiniteGroup s3 = builtin("S3");
  SubgroupLattice lat = all_subgroups(s3);
  for (const Subgroup& s : lat.subgroups)
    if (s.order == 3) {
      MaterializedSubgroup m = subgroup_as_group(s, "A3");
      CHECK(m.group.order() == 3);
      CHECK(m.group.element_order(1) == 3);
      CHECK(m.to_parent.size() == 3);
      CHECK(m.to_parent[0] == kIdentity);
    }
}

TEST_CASE("normalizer") {
  FiniteGroup s3 = builtin("S3");
  SubgroupLattice lat = all_subgroups(s3);
  for (const Subgroup& s : lat.subgroups) {
    if (s.order == 2) CHECK(normalizer(s3, s).order == 2);
    if (s.order == 3) CHECK(normalizer(s3, s).order == 6);
  }
}
