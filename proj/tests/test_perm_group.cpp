#include "doctest.h"

#include "ncgraph/corpus.hpp"
#include "ncgraph/group.hpp"

using namespace ncg;

namespace {

Permutation perm(std::vector<elem_t> im) { return Permutation(std::move(im)); }

}  // namespace

TEST_CASE("compose applies left operand first") {
  Permutation id = Permutation::identity(3);
  Permutation p = perm({1, 2, 0});
  CHECK(compose(id, p) == p);
  CHECK(compose(p, id) == p);

  Permutation swap2 = perm({1, 0});
  CHECK(compose(swap2, swap2).is_identity());

  // (0 1 2) twice is (0 2 1)
  CHECK(compose(p, p) == perm({2, 0, 1}));
  CHECK(compose(p, p)(0) == 2);
}

TEST_CASE("permutation validation and inverse") {
  CHECK_THROWS_AS(perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 3}), std::invalid_argument);
  Permutation p = perm({2, 0, 1, 3});
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("enumerate: S3 from a transposition and a 3-cycle") {
  FiniteGroup g = FiniteGroup::enumerate({perm({1, 0, 2}), perm({1, 2, 0})}, "S3");
  CHECK(g.order() == 6);
  CHECK(g.generator_indices().size() == 2);
  CHECK(g.element_order(kIdentity) == 1);
}

TEST_CASE("enumerate: empty generator list gives the trivial group") {
  FiniteGroup g = FiniteGroup::enumerate({}, "triv", kDefaultOrderCap, 1);
  CHECK(g.order() == 1);
  CHECK(g.product(0, 0) == 0);
}

TEST_CASE("enumerate: dihedral relations force order 16") {
  std::vector<elem_t> rot(8), refl(8);
  for (elem_t i = 0; i < 8; ++i) {
    rot[i] = (i + 1) % 8;
    refl[i] = (8 - i) % 8;
  }
  FiniteGroup g = FiniteGroup::enumerate({perm(rot), perm(refl)}, "D16");
  CHECK(g.order() == 16);
}

TEST_CASE("enumerate: cap exceeded") {
  CHECK_THROWS_AS(
      FiniteGroup::enumerate({perm({1, 0, 2}), perm({1, 2, 0})}, "S3", 5),
      cap_error);
}

TEST_CASE("enumerate: mismatched generator degrees") {
  CHECK_THROWS_AS(FiniteGroup::enumerate({perm({1, 0}), perm({1, 2, 0})}, "bad"),
                  std::invalid_argument);
}

TEST_CASE("enumerate is deterministic") {
  auto build = [] {
    return FiniteGroup::enumerate({perm({1, 0, 2, 3}), perm({1, 2, 3, 0})}, "S4");
  };
  FiniteGroup a = build();
  FiniteGroup b = build();
  REQUIRE(a.order() == b.order());
  CHECK(a.cayley_table() == b.cayley_table());
  CHECK(a.generator_indices() == b.generator_indices());
}

TEST_CASE("element orders in S4") {
  FiniteGroup g = builtin("S4");
  CHECK(g.order() == 24);
  std::size_t order2 = 0, order3 = 0;
  for (elem_t x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == 2) ++order2;
    if (g.element_order(x) == 3) ++order3;
  }
  CHECK(order2 == 9);  // six transpositions + three double transpositions
  CHECK(order3 == 8);
}

TEST_CASE("from_cayley_table: valid tables") {
  CHECK(FiniteGroup::from_cayley_table({{0}}, "triv").order() == 1);

  // Klein four-group: all element orders divide 2
  std::vector<std::vector<elem_t>> klein = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  FiniteGroup k4 = FiniteGroup::from_cayley_table(klein, "K4");
  CHECK(k4.order() == 4);
  for (elem_t x = 0; x < 4; ++x) CHECK(k4.element_order(x) <= 2);

  std::vector<std::vector<elem_t>> c6(6, std::vector<elem_t>(6));
  for (elem_t i = 0; i < 6; ++i)
    for (elem_t j = 0; j < 6; ++j) c6[i][j] = (i + j) % 6;
  FiniteGroup g6 = FiniteGroup::from_cayley_table(c6, "C6");
  bool has6 = false;
  for (elem_t x = 0; x < 6; ++x) has6 |= g6.element_order(x) == 6;
  CHECK(has6);
}

TEST_CASE("from_cayley_table: rejects bad tables") {
  CHECK_THROWS_WITH_AS(
      FiniteGroup::from_cayley_table({{0, 1}, {1, 1}}, "bad"),
      "table row is not a permutation", std::invalid_argument);
  // Latin square whose identity is not at index 0
  CHECK_THROWS_WITH_AS(
      FiniteGroup::from_cayley_table({{1, 0}, {0, 1}}, "bad"),
      "identity row/column missing at index 0", std::invalid_argument);
  // smallest loop that is not a group (frozen by exhaustive search)
  std::vector<std::vector<elem_t>> loop5 = {{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 3, 4, 0, 1},
                                            {3, 4, 1, 2, 0},
                                            {4, 2, 0, 1, 3}};
  CHECK_THROWS_WITH_AS(FiniteGroup::from_cayley_table(loop5, "loop"),
                       "associativity violation", std::invalid_argument);
}

TEST_CASE("from_cayley_table: sampled validation above the exhaustive bound") {
  const std::uint32_t n = 600;
  std::vector<std::vector<elem_t>> c600(n, std::vector<elem_t>(n));
  for (elem_t i = 0; i < n; ++i)
    for (elem_t j = 0; j < n; ++j) c600[i][j] = (i + j) % n;
  FiniteGroup g = FiniteGroup::from_cayley_table(c600, "C600", 7);
  CHECK(g.order() == n);
  CHECK(g.element_order(1) == n);

  // loop5 x C120: Latin with identity, densely non-associative
  std::vector<std::vector<elem_t>> loop5 = {{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 3, 4, 0, 1},
                                            {3, 4, 1, 2, 0},
                                            {4, 2, 0, 1, 3}};
  std::vector<std::vector<elem_t>> big(n, std::vector<elem_t>(n));
  for (elem_t i = 0; i < n; ++i)
    for (elem_t j = 0; j < n; ++j) {
      elem_t a = loop5[i / 120][j / 120];
      elem_t b = (i % 120 + j % 120) % 120;
      big[i][j] = a * 120 + b;
    }
  CHECK_THROWS_WITH_AS(FiniteGroup::from_cayley_table(big, "bigloop", 7),
                       "associativity violation", std::invalid_argument);
}

TEST_CASE("inverse anti-homomorphism law") {
  for (const char* spec : {"S4", "Q8", "D12", "C9"}) {
    FiniteGroup g = builtin(spec);
    for (elem_t i = 0; i < g.order(); ++i)
      for (elem_t j = 0; j < g.order(); ++j)
        CHECK(g.inverse(g.product(i, j)) == g.product(g.inverse(j), g.inverse(i)));
  }
}

TEST_CASE("rebuilding from the own Cayley table is the identity") {
  for (const char* spec : {"S3", "Q8", "D16"}) {
    FiniteGroup g = builtin(spec);
    FiniteGroup h = FiniteGroup::from_cayley_table(g.cayley_table(), g.name());
    CHECK(g.cayley_table() == h.cayley_table());
  }
}

TEST_CASE("element orders divide the group order") {
  for (const char* spec : {"S4", "Q16", "D24", "Heis3"}) {
    FiniteGroup g = builtin(spec);
    for (elem_t x = 0; x < g.order(); ++x) CHECK(g.order() % g.element_order(x) == 0);
  }
}

TEST_CASE("direct product basics") {
  FiniteGroup triv = builtin("C1");
  FiniteGroup s4 = builtin("S4");
  FiniteGroup p = direct_product(s4, triv);
  CHECK(p.order() == 24);
  CHECK(p.cayley_table() == s4.cayley_table());

  FiniteGroup k = direct_product(builtin("C2"), builtin("C2"));
  CHECK(k.order() == 4);
  for (elem_t x = 0; x < 4; ++x) CHECK(k.element_order(x) <= 2);

  FiniteGroup s4c2 = direct_product(s4, builtin("C2"));
  CHECK(s4c2.order() == 48);
  CHECK(s4c2.name() == "S4xC2");
  // index convention: (g, h) -> g*|H| + h
  FiniteGroup c3 = builtin("C3");
  FiniteGroup q = direct_product(s4, c3);
  for (elem_t a = 0; a < 4; ++a)
    for (elem_t b = 0; b < 3; ++b)
      CHECK(q.product(a * 3 + b, 0) == a * 3 + b);
  CHECK(q.product(1 * 3 + 1, 2 * 3 + 2) ==
        s4.product(1, 2) * 3 + c3.product(1, 2));
}

TEST_CASE("power helper") {
  FiniteGroup g = builtin("C12");
  CHECK(g.power(1, 0) == 0);
  CHECK(g.power(1, 5) == 5);
  CHECK(g.power(1, 12) == 0);
  CHECK(g.power(5, 100) == (5 * 100) % 12);
}
