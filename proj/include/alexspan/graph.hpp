#ifndef ALEXSPAN_GRAPH_HPP_
#define ALEXSPAN_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alexspan/bigint.hpp"
#include "alexspan/errors.hpp"

namespace alexspan
{

using VertexId = std::string;
using EdgeId = std::string;

struct Edge
{
  EdgeId id;
  VertexId tail;
  VertexId head;
  BigInt weight;

  bool is_loop() const { return tail == head; }
};

/**
 * @brief Directed multigraph with integer edge weights.
 *
 * Parallel edges and self-loops are allowed. Vertices and edges are kept in
 * lexicographic id order, and every index-based accessor refers to that
 * canonical order. Instances are immutable once constructed.
 */
class DirectedMultigraph
{
public:
  DirectedMultigraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
  : vertices_(std::move(vertices)), edges_(std::move(edges))
  {
    if (vertices_.empty()) {
      throw InvalidInput("graph must have at least one vertex");
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (auto dup = std::adjacent_find(vertices_.begin(), vertices_.end()); dup != vertices_.end()) {
      throw InvalidInput("duplicate vertex id '" + *dup + "'");
    }
    std::sort(edges_.begin(), edges_.end(),
      [](const Edge & a, const Edge & b) { return a.id < b.id; });
    for (std::size_t e = 1; e < edges_.size(); ++e) {
      if (edges_[e].id == edges_[e - 1].id) {
        throw InvalidInput("duplicate edge id '" + edges_[e].id + "'");
      }
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      vertex_pos_.emplace(vertices_[v], v);
    }
    in_.resize(vertices_.size());
    out_.resize(vertices_.size());
    tail_.reserve(edges_.size());
    head_.reserve(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const Edge & edge = edges_[e];
      auto t = vertex_pos_.find(edge.tail);
      auto h = vertex_pos_.find(edge.head);
      if (t == vertex_pos_.end() || h == vertex_pos_.end()) {
        throw InvalidInput("edge '" + edge.id + "' references unknown vertex '" +
          (t == vertex_pos_.end() ? edge.tail : edge.head) + "'");
      }
      tail_.push_back(t->second);
      head_.push_back(h->second);
      out_[t->second].push_back(e);
      in_[h->second].push_back(e);
      edge_pos_.emplace(edge.id, e);
    }
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<VertexId> & vertices() const { return vertices_; }
  const std::vector<Edge> & edges() const { return edges_; }
  const Edge & edge(std::size_t e) const { return edges_.at(e); }
  const VertexId & vertex(std::size_t v) const { return vertices_.at(v); }

  bool has_vertex(const VertexId & id) const { return vertex_pos_.count(id) != 0; }
  bool has_edge(const EdgeId & id) const { return edge_pos_.count(id) != 0; }

  std::size_t vertex_index(const VertexId & id) const
  {
    auto it = vertex_pos_.find(id);
    if (it == vertex_pos_.end()) {throw UnknownId("vertex", id);}
    return it->second;
  }

  std::size_t edge_index(const EdgeId & id) const
  {
    auto it = edge_pos_.find(id);
    if (it == edge_pos_.end()) {throw UnknownId("edge", id);}
    return it->second;
  }

  std::size_t tail_index(std::size_t e) const { return tail_.at(e); }
  std::size_t head_index(std::size_t e) const { return head_.at(e); }

  /// Edge indices with head v, in canonical order (self-loops included).
  const std::vector<std::size_t> & in_edges(std::size_t v) const { return in_.at(v); }
  /// Edge indices with tail v, in canonical order (self-loops included).
  const std::vector<std::size_t> & out_edges(std::size_t v) const { return out_.at(v); }

  /// An id of the form `<stem>`, `<stem>'`, `<stem>''`... not used by any vertex or edge.
  std::string fresh_id(std::string stem) const
  {
    while (has_vertex(stem) || has_edge(stem)) {
      stem += '\'';
    }
    return stem;
  }

private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> vertex_pos_;
  std::map<EdgeId, std::size_t> edge_pos_;
  std::vector<std::size_t> tail_;
  std::vector<std::size_t> head_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Weight flowing into v minus weight flowing out of v. Self-loops cancel.
inline BigInt net_inflow(const DirectedMultigraph & g, std::size_t v)
{
  BigInt net = 0;
  for (auto e : g.in_edges(v)) {net += g.edge(e).weight;}
  for (auto e : g.out_edges(v)) {net -= g.edge(e).weight;}
  return net;
}

inline bool is_balanced(const DirectedMultigraph & g)
{
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (net_inflow(g, v) != 0) {return false;}
  }
  return true;
}

inline bool all_weights_positive(const DirectedMultigraph & g)
{
  return std::all_of(g.edges().begin(), g.edges().end(),
           [](const Edge & e) { return e.weight > 0; });
}

inline bool has_self_loops(const DirectedMultigraph & g)
{
  return std::any_of(g.edges().begin(), g.edges().end(),
           [](const Edge & e) { return e.is_loop(); });
}

namespace detail
{

enum class Direction { forward, backward, both };

inline std::vector<bool> search(const DirectedMultigraph & g, std::size_t start, Direction dir)
{
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      };
    if (dir != Direction::backward) {
      for (auto e : g.out_edges(v)) {visit(g.head_index(e));}
    }
    if (dir != Direction::forward) {
      for (auto e : g.in_edges(v)) {visit(g.tail_index(e));}
    }
  }
  return seen;
}

inline bool all_true(const std::vector<bool> & v)
{
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace detail

/// Vertices reachable from `start` along directed paths (start included).
inline std::vector<bool> reachable_from(const DirectedMultigraph & g, std::size_t start)
{
  return detail::search(g, start, detail::Direction::forward);
}

/// Connectivity of the underlying undirected graph.
inline bool is_connected(const DirectedMultigraph & g)
{
  return detail::all_true(detail::search(g, 0, detail::Direction::both));
}

inline bool is_strongly_connected(const DirectedMultigraph & g)
{
  return detail::all_true(detail::search(g, 0, detail::Direction::forward)) &&
         detail::all_true(detail::search(g, 0, detail::Direction::backward));
}

/// Connected, positive and balanced: an abstract MOY graph.
inline bool is_moy_graph(const DirectedMultigraph & g)
{
  return all_weights_positive(g) && is_balanced(g) && is_connected(g);
}

struct Subdivision
{
  DirectedMultigraph graph;
  VertexId vertex;     ///< the inserted degree-2 vertex
  EdgeId first;        ///< tail(e) -> vertex
  EdgeId second;       ///< vertex -> head(e)
};

/// Replace edge `id` by a directed 2-path through a fresh vertex; both halves
/// keep the original weight.
inline Subdivision subdivide_edge(const DirectedMultigraph & g, const EdgeId & id)
{
  const Edge & old = g.edge(g.edge_index(id));
  const VertexId mid = g.fresh_id(id + "/mid");
  const EdgeId first = g.fresh_id(id + "/1");
  const EdgeId second = g.fresh_id(id + "/2");

  std::vector<VertexId> vertices = g.vertices();
  vertices.push_back(mid);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 1);
  for (const Edge & e : g.edges()) {
    if (e.id != id) {edges.push_back(e);}
  }
  edges.push_back({first, old.tail, mid, old.weight});
  edges.push_back({second, mid, old.head, old.weight});
  return {DirectedMultigraph(std::move(vertices), std::move(edges)), mid, first, second};
}

}  // namespace alexspan

#endif  // ALEXSPAN_GRAPH_HPP_
