#ifndef ALEXSPAN_SPANNING_HPP_
#define ALEXSPAN_SPANNING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alexspan/bigint.hpp"
#include "alexspan/errors.hpp"
#include "alexspan/graph.hpp"
#include "alexspan/matrix.hpp"

namespace alexspan
{

/// Oriented spanning tree: every vertex except the root has exactly one tree
/// edge pointing into it and there is no oriented cycle.
struct SpanningTree
{
  VertexId root;
  std::vector<EdgeId> edges;  ///< sorted

  bool operator==(const SpanningTree &) const = default;

  bool contains(const EdgeId & e) const
  {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
};

using LaplacianMatrix = Matrix<BigInt>;

struct EnumerationOptions
{
  bool force = false;
};

inline constexpr std::size_t kEnumerationMaxVertices = 12;
inline constexpr std::uint64_t kEnumerationMaxBranching = 10'000'000;

/// Why `edges` fails to be an oriented spanning tree rooted at `root`;
/// nullopt when it is one.
inline std::optional<std::string> tree_defect(
  const DirectedMultigraph & g, std::size_t root, const std::vector<std::size_t> & edges)
{
  const std::size_t n = g.vertex_count();
  if (edges.size() + 1 != n) {
    return "has " + std::to_string(edges.size()) + " edges, expected " + std::to_string(n - 1);
  }
  std::vector<std::optional<std::size_t>> parent(n);
  for (auto e : edges) {
    if (e >= g.edge_count()) {return std::string("edge index out of range");}
    const auto h = g.head_index(e);
    if (h == root) {return "edge '" + g.edge(e).id + "' points into the root";}
    if (parent[h]) {return "vertex '" + g.vertex(h) + "' has in-degree 2";}
    parent[h] = g.tail_index(e);
  }
  // n-1 edges, in-degree 1 off the root: acyclic iff every vertex climbs to the root.
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t cur = v;
    for (std::size_t steps = 0; cur != root; ++steps) {
      if (steps > n) {return "oriented cycle through '" + g.vertex(v) + "'";}
      cur = *parent[cur];
    }
  }
  return std::nullopt;
}

namespace detail
{

inline std::vector<std::size_t> tree_edge_indices(const DirectedMultigraph & g, const SpanningTree & t)
{
  std::vector<std::size_t> idx;
  idx.reserve(t.edges.size());
  for (const auto & id : t.edges) {idx.push_back(g.edge_index(id));}
  return idx;
}

inline SpanningTree make_tree(const DirectedMultigraph & g, std::size_t root,
  const std::vector<std::size_t> & edges)
{
  SpanningTree t{g.vertex(root), {}};
  for (auto e : edges) {t.edges.push_back(g.edge(e).id);}
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

inline std::vector<std::size_t> tree_in_edges(const DirectedMultigraph & g, std::size_t v)
{
  std::vector<std::size_t> out;
  for (auto e : g.in_edges(v)) {
    if (!g.edge(e).is_loop()) {out.push_back(e);}
  }
  return out;
}

}  // namespace detail

/// Throws InvalidInput unless `t` is an oriented spanning tree of `g`.
inline void check_tree(const DirectedMultigraph & g, const SpanningTree & t)
{
  const auto root = g.vertex_index(t.root);
  if (auto why = tree_defect(g, root, detail::tree_edge_indices(g, t))) {
    throw InvalidInput("invalid spanning tree rooted at '" + t.root + "': " + *why);
  }
}

/// Throws GuardLimitExceeded when brute-force enumeration at `root` is too big.
inline void check_enumeration_guard(const DirectedMultigraph & g, std::size_t root,
  const EnumerationOptions & opts)
{
  if (opts.force) {return;}
  if (g.vertex_count() > kEnumerationMaxVertices) {
    throw GuardLimitExceeded("tree enumeration refused: " + std::to_string(g.vertex_count()) +
      " vertices exceeds " + std::to_string(kEnumerationMaxVertices) + " (use force)");
  }
  std::uint64_t product = 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == root) {continue;}
    product *= std::max<std::uint64_t>(1, detail::tree_in_edges(g, v).size());
    if (product > kEnumerationMaxBranching) {
      throw GuardLimitExceeded("tree enumeration refused: in-degree product exceeds " +
        std::to_string(kEnumerationMaxBranching) + " (use force)");
    }
  }
}

/**
 * @brief Visit every oriented spanning tree rooted at `root`.
 *
 * Backtracks over the non-root vertices in canonical order, choosing one
 * in-edge each (edges in canonical order), and prunes as soon as a choice
 * closes an oriented cycle. Trees are produced in lexicographic order of the
 * chosen edge tuple. The callback receives edge indices in vertex order.
 */
inline void for_each_tree(const DirectedMultigraph & g, const VertexId & root_id,
  const std::function<void(const std::vector<std::size_t> &)> & visit,
  const EnumerationOptions & opts = {})
{
  const std::size_t root = g.vertex_index(root_id);
  if (!is_connected(g)) {
    throw PreconditionFailed("tree enumeration requires a connected graph");
  }
  check_enumeration_guard(g, root, opts);

  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> choices;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == root) {continue;}
    order.push_back(v);
    choices.push_back(detail::tree_in_edges(g, v));
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, none);
  std::vector<std::size_t> chosen;
  chosen.reserve(order.size());

  auto closes_cycle = [&](std::size_t tail, std::size_t head) {
      for (std::size_t cur = tail; cur != none; cur = parent[cur]) {
        if (cur == head) {return true;}
      }
      return false;
    };

  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
      if (depth == order.size()) {
        visit(chosen);
        return;
      }
      const std::size_t v = order[depth];
      for (auto e : choices[depth]) {
        const std::size_t u = g.tail_index(e);
        if (closes_cycle(u, v)) {continue;}
        parent[v] = u;
        chosen.push_back(e);
        recurse(depth + 1);
        chosen.pop_back();
        parent[v] = none;
      }
    };
  recurse(0);
}

inline std::vector<SpanningTree> enumerate_trees(const DirectedMultigraph & g,
  const VertexId & root, const EnumerationOptions & opts = {})
{
  std::vector<SpanningTree> trees;
  const auto r = g.vertex_index(root);
  for_each_tree(g, root,
    [&](const std::vector<std::size_t> & edges) {trees.push_back(detail::make_tree(g, r, edges));},
    opts);
  return trees;
}

/// Product of the tree's edge weights; the empty product is 1.
inline BigInt tree_weight(const DirectedMultigraph & g, const SpanningTree & t)
{
  check_tree(g, t);
  BigInt w = 1;
  for (const auto & id : t.edges) {w *= g.edge(g.edge_index(id)).weight;}
  return w;
}

inline BigInt count_by_enumeration(const DirectedMultigraph & g, const VertexId & root,
  const EnumerationOptions & opts = {})
{
  BigInt total = 0;
  for_each_tree(g, root,
    [&](const std::vector<std::size_t> & edges) {
      BigInt w = 1;
      for (auto e : edges) {w *= g.edge(e).weight;}
      total += w;
    }, opts);
  return total;
}

/// Off-diagonal (i,j) is minus the total weight of edges i->j; the diagonal
/// entry of column j is the total weight entering j. Self-loops contribute 0.
inline LaplacianMatrix laplacian(const DirectedMultigraph & g)
{
  const std::size_t n = g.vertex_count();
  LaplacianMatrix lap(n, n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto i = g.tail_index(e);
    const auto j = g.head_index(e);
    if (i == j) {continue;}
    const BigInt & w = g.edge(e).weight;
    lap(i, j) -= w;
    lap(j, j) += w;
  }
  return lap;
}

/// Weighted count of trees rooted at `root` via the reduced Laplacian.
inline BigInt count_by_determinant(const DirectedMultigraph & g, const VertexId & root)
{
  const auto r = g.vertex_index(root);
  return bareiss_determinant(laplacian(g).without(r, r));
}

/**
 * @brief The root-independent weighted tree count N(g) of a balanced graph.
 *
 * Evaluates the determinant at every root and throws InternalError if any
 * two disagree.
 */
inline BigInt balanced_count(const DirectedMultigraph & g)
{
  if (!is_balanced(g)) {
    throw PreconditionFailed("balanced_count requires a balanced weight");
  }
  if (!is_connected(g)) {
    throw PreconditionFailed("balanced_count requires a connected graph");
  }
  const LaplacianMatrix lap = laplacian(g);
  BigInt value = bareiss_determinant(lap.without(0, 0));
  for (std::size_t r = 1; r < g.vertex_count(); ++r) {
    BigInt other = bareiss_determinant(lap.without(r, r));
    if (other != value) {
      throw InternalError("root counts disagree on a balanced graph: " + value.str() +
        " at '" + g.vertex(0) + "' vs " + other.str() + " at '" + g.vertex(r) + "'");
    }
  }
  return value;
}

}  // namespace alexspan

#endif  // ALEXSPAN_SPANNING_HPP_
