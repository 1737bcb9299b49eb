#ifndef ALEXSPAN_KAUFFMAN_HPP_
#define ALEXSPAN_KAUFFMAN_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "alexspan/bigint.hpp"
#include "alexspan/errors.hpp"
#include "alexspan/laurent.hpp"
#include "alexspan/planar.hpp"
#include "alexspan/spanning.hpp"

namespace alexspan
{

/// One corner per crossing, indexed by the generating edge.
struct KauffmanState
{
  std::vector<Corner> corners;

  bool operator==(const KauffmanState &) const = default;
};

/// Face-dual graph: dual edge e joins the west and east faces of edge e.
struct DualGraph
{
  std::size_t face_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline DualGraph dual_graph(const DecoratedDiagram & d)
{
  DualGraph dual{d.face_count(), {}};
  for (std::size_t e = 0; e < d.crossing_count(); ++e) {
    dual.edges.emplace_back(d.west_face(e), d.east_face(e));
  }
  return dual;
}

/**
 * @brief All Kauffman states of a decorated diagram.
 *
 * Backtracks over crossings in edge order, trying north, west, east, with
 * every unmarked region claimed exactly once. The base point crossing is
 * fixed to north. A branch is abandoned as soon as some unclaimed region has
 * no remaining crossing that could reach it.
 */
inline std::vector<KauffmanState> enumerate_states(const DecoratedDiagram & d)
{
  const std::size_t n = d.crossing_count();
  const std::size_t regions = d.region_count();
  constexpr Corner kOrder[] = {Corner::north, Corner::west, Corner::east};

  std::vector<bool> claimed(regions, false);
  std::vector<int> reach(regions, 0);  // unprocessed crossings able to claim each region
  auto [ru, rv] = d.marked_regions();
  claimed[ru] = claimed[rv] = true;

  auto admissible = [&](std::size_t e, Corner c) {
      return e != d.basepoint() || c == Corner::north;
    };
  for (std::size_t e = 0; e < n; ++e) {
    for (Corner c : kOrder) {
      if (admissible(e, c)) {++reach[d.corner_region(e, c)];}
    }
  }

  std::vector<KauffmanState> out;
  KauffmanState cur{std::vector<Corner>(n, Corner::north)};

  std::function<void(std::size_t)> recurse = [&](std::size_t e) {
      if (e == n) {
        out.push_back(cur);
        return;
      }
      for (Corner c : kOrder) {
        if (admissible(e, c)) {--reach[d.corner_region(e, c)];}
      }
      for (Corner c : kOrder) {
        if (!admissible(e, c)) {continue;}
        const auto r = d.corner_region(e, c);
        if (claimed[r]) {continue;}
        claimed[r] = true;
        bool feasible = true;
        for (Corner other : kOrder) {
          const auto q = d.corner_region(e, other);
          if (!claimed[q] && reach[q] == 0) {feasible = false;}
        }
        if (feasible) {
          cur.corners[e] = c;
          recurse(e + 1);
        }
        claimed[r] = false;
      }
      for (Corner c : kOrder) {
        if (admissible(e, c)) {++reach[d.corner_region(e, c)];}
      }
    };
  recurse(0);
  return out;
}

/// Local contribution of `corner` at the crossing of `edge` (weight i):
/// west t^(-i/2), east t^(i/2), north [i]; the base point crossing only
/// admits north, contributing t^(i/2).
inline HalfLaurent local_weight(const DecoratedDiagram & d, std::size_t edge, Corner corner)
{
  const auto i = to_int64(d.graph().edge(edge).weight, "edge weight");
  if (i < 1) {
    throw PreconditionFailed("edge '" + d.graph().edge(edge).id + "' must have positive weight");
  }
  if (edge == d.basepoint()) {
    if (corner != Corner::north) {
      throw InvalidInput("the base point crossing only has a north corner");
    }
    return monomial(1, i);
  }
  switch (corner) {
    case Corner::west: return monomial(1, -i);
    case Corner::east: return monomial(1, i);
    case Corner::north: return quantum_integer(i);
  }
  throw InternalError("bad corner");
}

inline HalfLaurent state_polynomial(const DecoratedDiagram & d, const KauffmanState & s)
{
  HalfLaurent p(1);
  for (std::size_t e = 0; e < d.crossing_count(); ++e) {
    p *= local_weight(d, e, s.corners.at(e));
  }
  return p;
}

/// Alexander polynomial of a plane diagram as the sum over Kauffman states.
inline HalfLaurent state_sum(const DecoratedDiagram & d)
{
  HalfLaurent total;
  for (const auto & s : enumerate_states(d)) {total += state_polynomial(d, s);}
  return total;
}

/// Root of the trees matching the states: the head of the base point edge.
inline const VertexId & state_root(const DecoratedDiagram & d)
{
  return d.graph().vertex(d.graph().head_index(d.basepoint()));
}

namespace detail
{

inline std::vector<bool> tree_mask(const DecoratedDiagram & d, const SpanningTree & t)
{
  const auto & g = d.graph();
  check_tree(g, t);
  std::vector<bool> in_tree(g.edge_count(), false);
  for (const auto & id : t.edges) {in_tree[g.edge_index(id)] = true;}
  return in_tree;
}

}  // namespace detail

/// Duals of the edges outside `t`, checked to span the dual graph as a tree.
inline std::vector<EdgeId> dual_tree(const DecoratedDiagram & d, const SpanningTree & t)
{
  const auto in_tree = detail::tree_mask(d, t);
  const auto dual = dual_graph(d);
  std::vector<std::size_t> parent(dual.face_count);
  for (std::size_t f = 0; f < parent.size(); ++f) {parent[f] = f;}
  std::function<std::size_t(std::size_t)> find = [&](std::size_t f) {
      return parent[f] == f ? f : parent[f] = find(parent[f]);
    };

  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < dual.edges.size(); ++e) {
    if (in_tree[e]) {continue;}
    const auto a = find(dual.edges[e].first);
    const auto b = find(dual.edges[e].second);
    if (a == b) {
      throw InternalError("dual of the complement of a tree has a cycle through '" +
        d.graph().edge(e).id + "'");
    }
    parent[a] = b;
    out.push_back(d.graph().edge(e).id);
  }
  if (out.size() + 1 != dual.face_count) {
    throw InternalError("dual complement of a tree does not span the faces");
  }
  return out;
}

/**
 * @brief Kauffman state attached to an oriented spanning tree.
 *
 * Tree edges and the base point edge go north. The other crossings are
 * oriented by walking the dual tree breadth-first from the two marked faces:
 * crossing a dual edge into a new face sends its crossing to the corner in
 * that face.
 */
inline KauffmanState tree_to_state(const DecoratedDiagram & d, const SpanningTree & t)
{
  const auto & g = d.graph();
  if (t.root != state_root(d)) {
    throw PreconditionFailed("tree is rooted at '" + t.root + "' but the base point enters '" +
      state_root(d) + "'");
  }
  const auto in_tree = detail::tree_mask(d, t);
  const std::size_t base = d.basepoint();

  KauffmanState s{std::vector<Corner>(g.edge_count(), Corner::north)};
  std::vector<std::vector<std::size_t>> incident(d.face_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e] || e == base) {continue;}
    incident[d.west_face(e)].push_back(e);
    incident[d.east_face(e)].push_back(e);
  }

  std::vector<bool> visited(d.face_count(), false);
  std::vector<bool> used(g.edge_count(), false);
  auto [ru, rv] = d.marked_regions();
  std::deque<std::size_t> queue;
  for (auto f : {std::min(ru, rv), std::max(ru, rv)}) {
    visited[f] = true;
    queue.push_back(f);
  }
  std::size_t assigned = 0;
  while (!queue.empty()) {
    const auto f = queue.front();
    queue.pop_front();
    for (auto e : incident[f]) {
      if (used[e]) {continue;}
      used[e] = true;
      const auto w = d.west_face(e);
      const auto target = (w == f) ? d.east_face(e) : w;
      if (visited[target]) {
        throw InternalError("dual tree traversal revisited a face via '" + g.edge(e).id + "'");
      }
      visited[target] = true;
      s.corners[e] = (target == w) ? Corner::west : Corner::east;
      ++assigned;
      queue.push_back(target);
    }
  }
  if (assigned + 2 != d.face_count() ||
    !std::all_of(visited.begin(), visited.end(), [](bool b) { return b; }))
  {
    throw InternalError("dual tree traversal did not reach every face");
  }
  return s;
}

/// Inverse of tree_to_state: the north-assigned edges minus the base point.
inline SpanningTree state_to_tree(const DecoratedDiagram & d, const KauffmanState & s)
{
  const auto & g = d.graph();
  if (s.corners.size() != g.edge_count()) {
    throw InvalidInput("state has the wrong number of crossings");
  }
  std::vector<std::size_t> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (s.corners[e] == Corner::north && e != d.basepoint()) {edges.push_back(e);}
  }
  const auto root = g.head_index(d.basepoint());
  if (auto why = tree_defect(g, root, edges)) {
    throw InternalError("state does not yield an oriented spanning tree: " + *why);
  }
  return detail::make_tree(g, root, edges);
}

}  // namespace alexspan

#endif  // ALEXSPAN_KAUFFMAN_HPP_
