#include "doctest.h"

#include <filesystem>

#include "ncgraph/classify.hpp"
#include "ncgraph/corpus.hpp"
#include "ncgraph/group_io.hpp"

using namespace ncg;

namespace {

FiniteGroup load_fixture(const char* file) {
  return load_group(read_group_file(std::filesystem::path(NCGRAPH_FIXTURE_DIR) / file));
}

PGroupClassification classify(const FiniteGroup& g) {
  SubgroupLattice lat = all_subgroups(g);
  return classify_p_group(g, lat);
}

}  // namespace

TEST_CASE("p-group case i") {
  CHECK(classify(builtin("C8")).kase == PGroupCase::i_abelian_or_minimal);
  CHECK(classify(builtin("Heis3")).kase == PGroupCase::i_abelian_or_minimal);
  CHECK(classify(builtin("Q8")).kase == PGroupCase::i_abelian_or_minimal);
  CHECK(classify(builtin("Heis3")).prediction.no_edges);
}

TEST_CASE("p-group case ii") {
  PGroupClassification c = classify(builtin("D8xC2"));
  CHECK(c.kase == PGroupCase::ii_not_two_generated);
  CHECK(c.prediction.diameter == 2);
  CHECK(c.prediction.target == GraphKind::nc);
}

TEST_CASE("p-group case iii(a): D16") {
  FiniteGroup g = builtin("D16");
  SubgroupLattice lat = all_subgroups(g);
  PGroupClassification c = classify_p_group(g, lat);
  CHECK(c.kase == PGroupCase::iiia_abelian_maximal);
  CHECK(c.prediction.target == GraphKind::nd);
  CHECK(c.prediction.diameter == 2);
  REQUIRE(c.prediction.isolated.has_value());
  CHECK(c.prediction.isolated->size() == 4);  // M \ Phi
  for (elem_t v : *c.prediction.isolated) CHECK(g.element_order(v) == 8);
  REQUIRE(c.abelian_maximal_id.has_value());
  CHECK(lat.subgroups[*c.abelian_maximal_id].order == 8);
}

TEST_CASE("p-group cases of the catalog fixtures") {
  {
    FiniteGroup g = load_fixture("16_7.json");
    CHECK(g.order() == 16);
    CHECK(classify(g).kase == PGroupCase::iiia_abelian_maximal);
  }
  {
    FiniteGroup g = load_fixture("32_6.json");
    CHECK(g.order() == 32);
    PGroupClassification c = classify(g);
    CHECK(c.kase == PGroupCase::iiic_centre_exceeds);
    CHECK(c.prediction.diameter == 3);
  }
  {
    FiniteGroup g = load_fixture("243_3.json");
    CHECK(g.order() == 243);
    PGroupClassification c = classify(g);
    CHECK(c.kase == PGroupCase::iiib_all_centres_equal);
    CHECK(c.prediction.diameter == 2);
  }
}

TEST_CASE("classify_p_group rejects non-p-groups") {
  FiniteGroup g = builtin("C6");
  SubgroupLattice lat = all_subgroups(g);
  CHECK_THROWS_AS(classify_p_group(g, lat), std::invalid_argument);
}

TEST_CASE("p-group trichotomy picks exactly one case on the corpus p-groups") {
  for (const char* spec : {"C2", "C16", "C2xC2", "C4xC4", "D8", "D16", "D32", "Q8",
                           "Q16", "Q32", "Heis2", "Heis3", "D8xC2", "Q8xC2", "C3^2"}) {
    FiniteGroup g = builtin(spec);
    SubgroupLattice lat = all_subgroups(g);
    StructuralPredicates p = structural_predicates(g, lat);
    bool c1 = p.is_abelian || p.is_minimal_nonabelian;
    bool c2 = !p.is_abelian && !p.is_two_generated;
    bool c3 = !p.is_abelian && p.is_two_generated && !p.is_minimal_nonabelian;
    CHECK_MESSAGE(int(c1) + int(c2) + int(c3) == 1, spec);
    CHECK_NOTHROW(classify_p_group(g, lat));
  }
}

TEST_CASE("nilpotent case i") {
  NilpotentClassification c = classify_nilpotent(builtin("C6"));
  CHECK(c.kase == NilpotentCase::i_abelian);
  CHECK(c.prediction.empty_graph);
}

TEST_CASE("nilpotent case ii: D8 x C3^2") {
  NilpotentClassification c = classify_nilpotent(builtin("D8xC3^2"));
  CHECK(c.kase == NilpotentCase::ii_two_noncyclic_sylows);
  CHECK(c.prediction.diameter == 2);
  CHECK(c.prediction.target == GraphKind::nc);
}

TEST_CASE("nilpotent case iii(b): D8 x C3") {
  FiniteGroup g = builtin("D8xC3");
  NilpotentClassification c = classify_nilpotent(g);
  CHECK(c.kase == NilpotentCase::iiib_isolated_in_sylow);
  CHECK(c.sylow_prime == 2);
  CHECK(c.cyclic_part_order == 3);
  CHECK(c.prediction.target == GraphKind::nd);
  CHECK(c.prediction.diameter == 2);
  REQUIRE(c.prediction.isolated.has_value());
  // D8 is minimal non-abelian: all 6 non-central Sylow elements are isolated
  // in its own graph, paired with the 2 generators of C3
  CHECK(c.prediction.isolated->size() == 12);
  // observed isolated set matches exactly
  ElementGraph nc = build_graph(g, GraphKind::nc);
  CHECK(nc.isolated_vertices() == *c.prediction.isolated);
}

TEST_CASE("nilpotent case iii(b): Q8 x C5 has 6 x 4 isolated vertices") {
  NilpotentClassification c = classify_nilpotent(builtin("Q8xC5"));
  CHECK(c.kase == NilpotentCase::iiib_isolated_in_sylow);
  REQUIRE(c.prediction.isolated.has_value());
  CHECK(c.prediction.isolated->size() == 24);
}

TEST_CASE("nilpotent case iii(a): D16 x C3") {
  // nc(D16) has isolated vertices, so D16 x C3 stays in case iii(b);
  // a Sylow with no isolated vertices comes from a case-ii 2-group
  FiniteGroup g = builtin("D8xC2xC3");
  NilpotentClassification c = classify_nilpotent(g);
  CHECK(c.kase == NilpotentCase::iiia_no_isolated_in_sylow);
  CHECK(c.prediction.target == GraphKind::nc);
  CHECK(c.prediction.diameter == 2);
  ComponentSummary s = component_summary(build_graph(g, GraphKind::nc));
  CHECK(s.connected());
  CHECK(s.overall == Diameter::finite(2));
}

TEST_CASE("classify_nilpotent rejects bad hypotheses") {
  CHECK_THROWS_AS(classify_nilpotent(builtin("Q8")), std::invalid_argument);  // one prime
  CHECK_THROWS_AS(classify_nilpotent(builtin("S3")), std::invalid_argument);  // not nilpotent
}
