#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "fixtures.hpp"

using namespace alexspan;

TEST_CASE("worked example: trees per root", "[spanning]")
{
  const auto g = fixtures::fig1_graph();
  CHECK(enumerate_trees(g, "v1").size() == 2);
  CHECK(enumerate_trees(g, "v2").size() == 3);
  CHECK(enumerate_trees(g, "v3").size() == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(enumerate_trees(g, g.vertex(r)).size() == fixtures::subset_tree_number(g, r));
  }

  const auto v3 = enumerate_trees(g, "v3");
  CHECK(v3[0].root == "v3");
  CHECK(v3[0].edges == std::vector<EdgeId>{"v1v2", "v3v1"});
  CHECK(tree_weight(g, v3[0]) == 20);
}

TEST_CASE("worked example: counts agree with (i+k)(j+k)", "[spanning]")
{
  for (auto [i, j, k] : std::vector<std::tuple<int, int, int>>{{1, 2, 3}, {2, 2, 1}, {5, 1, 4}, {3, 7, 2}}) {
    const auto g = fixtures::fig1_graph(i, j, k);
    const BigInt expect = BigInt(i + k) * (j + k);
    for (const auto & v : g.vertices()) {
      CHECK(count_by_enumeration(g, v) == expect);
      CHECK(count_by_determinant(g, v) == expect);
    }
    CHECK(balanced_count(g) == expect);
  }
}

TEST_CASE("worked example: Laplacian and its cofactors", "[spanning]")
{
  const auto lap = laplacian(fixtures::fig1_graph());
  const std::vector<std::vector<int>> expect{{6, -5, -1}, {-2, 5, -3}, {-4, 0, 4}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(lap(r, c) == expect[r][c]);
    }
    CHECK(lap.row_sum(r) == 0);
    CHECK(lap.col_sum(r) == 0);
  }
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(cofactor(lap, r, c) == 20);
    }
  }
  std::ostringstream os;
  os << lap;
  CHECK(os.str() == "6 -5 -1\n-2 5 -3\n-4 0 4\n");
}

TEST_CASE("small closed forms", "[spanning]")
{
  SECTION("two-cycle") {
    const auto g = fixtures::cycle_graph(2, 2);
    CHECK(count_by_determinant(g, "c0") == 2);
    CHECK(count_by_enumeration(g, "c1") == 2);
  }
  SECTION("n-cycle of weight k has one tree of weight k^(n-1)") {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto g = fixtures::cycle_graph(n, 3);
      CHECK(enumerate_trees(g, "c0").size() == 1);
      CHECK(balanced_count(g) == boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n - 1)));
    }
  }
  SECTION("single vertex: the empty tree") {
    DirectedMultigraph g({"a"}, {{"l", "a", "a", 9}});
    const auto trees = enumerate_trees(g, "a");
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].edges.empty());
    CHECK(count_by_determinant(g, "a") == 1);
  }
  SECTION("unreachable vertex gives zero") {
    DirectedMultigraph g({"a", "b"}, {{"e", "a", "b", 4}});
    CHECK(count_by_enumeration(g, "a") == 4);
    CHECK(count_by_enumeration(g, "b") == 0);
    CHECK(count_by_determinant(g, "b") == 0);
  }
}

TEST_CASE("tree validation", "[spanning]")
{
  const auto g = fixtures::fig1_graph();
  CHECK_NOTHROW(check_tree(g, {"v3", {"v1v2", "v3v1"}}));
  CHECK_THROWS_AS(check_tree(g, {"v1", {"v1v2", "v3v1"}}), InvalidInput);
  CHECK_THROWS_AS(check_tree(g, {"v3", {"v1v2"}}), InvalidInput);
  CHECK_THROWS_AS(check_tree(g, {"v2", {"v1v2", "v2v1"}}), InvalidInput);
}

TEST_CASE("preconditions and guards", "[spanning]")
{
  DirectedMultigraph split({"a", "b"}, {});
  CHECK_THROWS_AS(enumerate_trees(split, "a"), PreconditionFailed);

  DirectedMultigraph unbalanced({"a", "b"}, {{"e", "a", "b", 1}});
  CHECK_THROWS_AS(balanced_count(unbalanced), PreconditionFailed);

  const auto big = fixtures::cycle_graph(kEnumerationMaxVertices + 1, 1);
  CHECK_THROWS_AS(count_by_enumeration(big, "c0"), GuardLimitExceeded);
  CHECK(count_by_enumeration(big, "c0", {true}) == 1);
  CHECK(count_by_determinant(big, "c0") == 1);
}

TEST_CASE("enumeration yields distinct valid trees", "[spanning][property]")
{
  Rng rng(21);
  for (int k = 0; k < 60; ++k) {
    const auto g = random_digraph(rng, 1 + rng.below(5), 3);
    const auto root = g.vertex(rng.below(g.vertex_count()));
    const auto trees = enumerate_trees(g, root);
    std::set<std::vector<EdgeId>> seen;
    for (const auto & t : trees) {
      CHECK_NOTHROW(check_tree(g, t));
      CHECK(seen.insert(t.edges).second);
    }
    CHECK(trees.size() == fixtures::subset_tree_number(g, g.vertex_index(root)));
  }
}

TEST_CASE("determinant matches enumeration and the subset oracle", "[spanning][property]")
{
  Rng rng(22);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng.below(6);
    const auto g = (k % 2) ? random_balanced_graph(rng, n, 5) : random_digraph(rng, n, 5);
    for (std::size_t r = 0; r < g.vertex_count(); ++r) {
      const BigInt det = count_by_determinant(g, g.vertex(r));
      CHECK(det == count_by_enumeration(g, g.vertex(r)));
      if (g.edge_count() <= 12) {CHECK(det == fixtures::subset_tree_count(g, r));}
    }
  }
}

TEST_CASE("Bareiss agrees with the Leibniz expansion", "[spanning][property]")
{
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = rng.below(6);
    Matrix<BigInt> m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {m(r, c) = rng.between(-4, 4);}
    }
    CHECK(bareiss_determinant(m) == (n == 0 ? BigInt(1) : fixtures::leibniz_determinant(m)));
  }
}

TEST_CASE("balanced weights make every cofactor equal", "[spanning][property]")
{
  Rng rng(24);
  for (int k = 0; k < 100; ++k) {
    const auto g = random_balanced_graph(rng, 1 + rng.below(6), 5);
    const auto lap = laplacian(g);
    const BigInt n = balanced_count(g);
    CHECK(n >= 1);
    for (std::size_t r = 0; r < lap.rows(); ++r) {
      for (std::size_t c = 0; c < lap.cols(); ++c) {CHECK(cofactor(lap, r, c) == n);}
    }
  }
}

TEST_CASE("negative weights count with sign", "[spanning]")
{
  DirectedMultigraph g({"a", "b", "c"}, {
    {"ab", "a", "b", -2}, {"bc", "b", "c", 3}, {"ac", "a", "c", -1}, {"ca", "c", "a", 5}});
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(count_by_determinant(g, g.vertex(r)) == fixtures::subset_tree_count(g, r));
    CHECK(count_by_enumeration(g, g.vertex(r)) == fixtures::subset_tree_count(g, r));
  }
  CHECK(count_by_determinant(g, "a") == -6 + 2);
}

TEST_CASE("unbalanced weights make the count depend on the root", "[spanning]")
{
  DirectedMultigraph g({"a", "b"}, {{"ab", "a", "b", 1}, {"ba", "b", "a", 2}});
  CHECK(count_by_determinant(g, "a") == 1);
  CHECK(count_by_determinant(g, "b") == 2);
}
