#ifndef ALEXSPAN_RANDOM_HPP_
#define ALEXSPAN_RANDOM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "alexspan/errors.hpp"
#include "alexspan/graph.hpp"
#include "alexspan/planar.hpp"
#include "alexspan/spanning.hpp"

namespace alexspan
{

/// Deterministic generator. Draws use plain modular reduction so the streams
/// do not depend on the standard library's distribution implementations.
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// Integer in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance(int percent) { return below(100) < static_cast<std::size_t>(percent); }

  template<typename T>
  void shuffle(std::vector<T> & v)
  {
    for (std::size_t k = v.size(); k > 1; --k) {std::swap(v[k - 1], v[below(k)]);}
  }

private:
  std::mt19937_64 engine_;
};

struct PlaneInstance
{
  CombinatorialMap map;
  EdgeId basepoint;

  const DirectedMultigraph & graph() const { return map.graph(); }
};

namespace detail
{

inline std::string padded(char prefix, std::size_t k)
{
  return std::string(1, prefix) + (k < 10 ? "0" : "") + std::to_string(k);
}

inline DirectedMultigraph build_graph(std::size_t n,
  const std::vector<std::tuple<std::size_t, std::size_t, int>> & arcs)
{
  std::vector<VertexId> vs;
  for (std::size_t v = 0; v < n; ++v) {vs.push_back(padded('v', v));}
  std::vector<Edge> es;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    auto [t, h, w] = arcs[k];
    es.push_back({padded('e', k), vs[t], vs[h], BigInt(w)});
  }
  return DirectedMultigraph(std::move(vs), std::move(es));
}

/// Mutable plane diagram used while growing random instances.
class DiagramBuilder
{
public:
  struct Arc
  {
    std::size_t tail, head;
    int weight;
  };

  std::vector<Arc> arcs;
  std::vector<std::vector<Dart>> rot;

  std::size_t vertex_count() const { return rot.size(); }

  std::size_t add_vertex()
  {
    rot.emplace_back();
    return rot.size() - 1;
  }

  std::size_t add_arc(std::size_t t, std::size_t h, int w)
  {
    arcs.push_back({t, h, w});
    return arcs.size() - 1;
  }

  std::size_t origin(Dart d) const { return d.end == End::tail ? arcs[d.edge].tail : arcs[d.edge].head; }

  std::size_t position(Dart d) const
  {
    const auto & cyc = rot[origin(d)];
    return static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), d) - cyc.begin());
  }

  Dart successor(Dart d) const
  {
    const auto & cyc = rot[origin(d)];
    return cyc[(position(d) + 1) % cyc.size()];
  }

  void insert_after(Dart anchor, Dart d)
  {
    auto & cyc = rot[origin(anchor)];
    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(position(anchor) + 1), d);
  }

  void insert_before(Dart anchor, Dart d)
  {
    auto & cyc = rot[origin(anchor)];
    cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(position(anchor)), d);
  }

  std::vector<std::vector<Dart>> face_orbits() const
  {
    std::vector<std::vector<Dart>> out;
    std::vector<bool> used(2 * arcs.size(), false);
    for (std::size_t id = 0; id < used.size(); ++id) {
      if (used[id]) {continue;}
      std::vector<Dart> f;
      for (Dart d = Dart::from_id(id); !used[d.id()]; d = successor(d.twin())) {
        used[d.id()] = true;
        f.push_back(d);
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  /// Split `e` at a new vertex; both halves keep the weight.
  void subdivide(std::size_t e)
  {
    const std::size_t x = add_vertex();
    const std::size_t head = arcs[e].head;
    const std::size_t e2 = add_arc(x, head, arcs[e].weight);
    auto & hc = rot[head];
    *std::find(hc.begin(), hc.end(), Dart{e, End::head}) = Dart{e2, End::head};
    arcs[e].head = x;
    rot[x] = {Dart{e, End::head}, Dart{e2, End::tail}};
  }

  /// Split `e` into two parallel edges bounding a new digon.
  void double_edge(std::size_t e, int split)
  {
    const auto [t, h, w] = arcs[e];
    arcs[e].weight = w - split;
    const std::size_t e2 = add_arc(t, h, split);
    insert_before(Dart{e, End::tail}, Dart{e2, End::tail});
    insert_after(Dart{e, End::head}, Dart{e2, End::head});
  }

  /// Directed path (edge list) from `from` to `to`, shortest by edge count.
  std::optional<std::vector<std::size_t>> path(std::size_t from, std::size_t to) const
  {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> via(rot.size(), none);
    std::vector<bool> seen(rot.size(), false);
    std::queue<std::size_t> q;
    q.push(from);
    seen[from] = true;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      if (v == to) {break;}
      for (std::size_t e = 0; e < arcs.size(); ++e) {
        if (arcs[e].tail == v && !seen[arcs[e].head]) {
          seen[arcs[e].head] = true;
          via[arcs[e].head] = e;
          q.push(arcs[e].head);
        }
      }
    }
    if (!seen[to]) {return std::nullopt;}
    std::vector<std::size_t> edges;
    for (std::size_t v = to; v != from; v = arcs[via[v]].tail) {edges.push_back(via[v]);}
    return edges;
  }

  /**
   * Draw a new edge u -> v of weight w across one face and restore balance by
   * adding w along a directed path v -> u. Returns false when no admissible
   * placement keeps weights within `max_weight`.
   */
  bool add_chord(Rng & rng, int w, int max_weight)
  {
    struct Slot { std::size_t vertex; Dart anchor; };
    auto orbits = face_orbits();
    rng.shuffle(orbits);
    for (const auto & orbit : orbits) {
      // Corner at the endpoint of d, between twin(d) and its successor.
      std::vector<Slot> out_slots, in_slots;
      for (const auto & d : orbit) {
        const Dart a = d.twin();
        const Dart b = successor(a);
        const Slot s{origin(a), a};
        if (!(a.end == End::head && b.end == End::head)) {out_slots.push_back(s);}
        if (!(a.end == End::tail && b.end == End::tail)) {in_slots.push_back(s);}
      }
      rng.shuffle(out_slots);
      rng.shuffle(in_slots);
      for (const auto & su : out_slots) {
        for (const auto & sv : in_slots) {
          if (su.vertex == sv.vertex) {continue;}
          auto p = path(sv.vertex, su.vertex);
          if (!p) {continue;}
          const bool fits = std::all_of(p->begin(), p->end(),
              [&](std::size_t e) { return arcs[e].weight + w <= max_weight; });
          if (!fits) {continue;}
          for (auto e : *p) {arcs[e].weight += w;}
          const std::size_t c = add_arc(su.vertex, sv.vertex, w);
          insert_after(su.anchor, Dart{c, End::tail});
          insert_after(sv.anchor, Dart{c, End::head});
          return true;
        }
      }
    }
    return false;
  }

  CombinatorialMap finish() const
  {
    std::vector<std::tuple<std::size_t, std::size_t, int>> es;
    for (const auto & a : arcs) {es.emplace_back(a.tail, a.head, a.weight);}
    return CombinatorialMap(build_graph(rot.size(), es), rot);
  }
};

inline DiagramBuilder seed_cycle(std::size_t n, int w)
{
  DiagramBuilder b;
  for (std::size_t v = 0; v < n; ++v) {b.add_vertex();}
  for (std::size_t v = 0; v < n; ++v) {b.add_arc(v, (v + 1) % n, w);}
  for (std::size_t v = 0; v < n; ++v) {
    b.rot[v] = {Dart{(v + n - 1) % n, End::head}, Dart{v, End::tail}};
  }
  return b;
}

/// Two vertices, edges p, q: 0 -> 1 and r: 1 -> 0 drawn around the outside.
inline DiagramBuilder seed_theta(int wp, int wq)
{
  DiagramBuilder b;
  b.add_vertex();
  b.add_vertex();
  b.add_arc(0, 1, wp);
  b.add_arc(0, 1, wq);
  b.add_arc(1, 0, wp + wq);
  b.rot[0] = {Dart{0, End::tail}, Dart{2, End::head}, Dart{1, End::tail}};
  b.rot[1] = {Dart{2, End::tail}, Dart{0, End::head}, Dart{1, End::head}};
  return b;
}

/// Triangle with two outer arcs, weights i, j, k as in the standard example.
inline DiagramBuilder seed_triangle_with_arcs(int i, int j, int k)
{
  DiagramBuilder b;
  for (int v = 0; v < 3; ++v) {b.add_vertex();}
  const auto a31 = b.add_arc(2, 0, i + k);
  const auto a21 = b.add_arc(1, 0, j);
  const auto a23 = b.add_arc(1, 2, k);
  const auto a13 = b.add_arc(0, 2, i);
  const auto a12 = b.add_arc(0, 1, j + k);
  b.rot[0] = {Dart{a13, End::tail}, Dart{a12, End::tail}, Dart{a21, End::head}, Dart{a31, End::head}};
  b.rot[1] = {Dart{a23, End::tail}, Dart{a21, End::tail}, Dart{a12, End::head}};
  b.rot[2] = {Dart{a13, End::head}, Dart{a31, End::tail}, Dart{a23, End::head}};
  return b;
}

}  // namespace detail

struct PlaneParams
{
  std::size_t max_vertices = 8;
  int max_weight = 5;
  std::size_t max_edges = 14;
};

/**
 * @brief Random connected plane diagram with positive balanced weights.
 *
 * Starts from a cycle, a theta graph or the weighted triangle with two outer
 * arcs, then applies random subdivisions, parallel-edge splits and
 * face chords (each chord balanced by a return path). The result is
 * validated before it is returned.
 */
inline PlaneInstance random_plane_diagram(Rng & rng, const PlaneParams & params = {})
{
  if (params.max_vertices < 2 || params.max_weight < 2 || params.max_edges < 3) {
    throw InvalidInput("plane diagram parameters too small");
  }
  detail::DiagramBuilder b;
  switch (rng.below(3)) {
    case 0:
      b = detail::seed_cycle(std::min<std::size_t>(params.max_vertices, 2 + rng.below(2)),
          rng.between(1, std::min(3, params.max_weight)));
      break;
    case 1: {
        const int wp = rng.between(1, params.max_weight - 1);
        b = detail::seed_theta(wp, rng.between(1, params.max_weight - wp));
        break;
      }
    default: {
        const int cap = std::max(1, params.max_weight / 2);
        b = params.max_weight >= 2 && params.max_vertices >= 3 ?
          detail::seed_triangle_with_arcs(rng.between(1, cap), rng.between(1, cap), rng.between(1, cap)) :
          detail::seed_cycle(2, 1);
        break;
      }
  }

  const std::size_t target_vertices = std::max<std::size_t>(b.vertex_count(),
      2 + rng.below(params.max_vertices - 1));
  const std::size_t extra_moves = rng.below(5);
  std::size_t moves = 0;
  for (int guard = 0; guard < 200; ++guard) {
    const bool want_vertices = b.vertex_count() < target_vertices;
    if (!want_vertices && moves >= extra_moves) {break;}
    const bool room = b.arcs.size() < params.max_edges;
    const auto op = rng.below(3);
    if (op == 0 && want_vertices && room) {
      b.subdivide(rng.below(b.arcs.size()));
    } else if (op == 1 && room) {
      std::vector<std::size_t> heavy;
      for (std::size_t e = 0; e < b.arcs.size(); ++e) {
        if (b.arcs[e].weight >= 2) {heavy.push_back(e);}
      }
      if (heavy.empty()) {continue;}
      const auto e = heavy[rng.below(heavy.size())];
      b.double_edge(e, rng.between(1, b.arcs[e].weight - 1));
    } else if (op == 2 && room) {
      if (!b.add_chord(rng, 1, params.max_weight)) {continue;}
    } else if (want_vertices && room) {
      b.subdivide(rng.below(b.arcs.size()));
    } else {
      continue;
    }
    ++moves;
  }

  CombinatorialMap map = b.finish();
  for (const auto & d : validate_map(map)) {
    throw InternalError("random plane diagram is invalid: " + d.message);
  }
  const EdgeId base = map.graph().edge(rng.below(map.graph().edge_count())).id;
  return {std::move(map), base};
}

/// Random connected graph with positive balanced weights: a union of random
/// directed cycles (parallel edges allowed), grown until connected.
inline DirectedMultigraph random_balanced_graph(Rng & rng, std::size_t n, int max_weight)
{
  if (n < 1 || max_weight < 1) {throw InvalidInput("balanced graph needs n >= 1 and max_weight >= 1");}
  std::vector<std::tuple<std::size_t, std::size_t, int>> arcs;
  if (n == 1) {
    if (rng.chance(50)) {arcs.emplace_back(0, 0, rng.between(1, max_weight));}
    return detail::build_graph(1, arcs);
  }
  std::vector<std::size_t> parent(n);
  auto find = [&](std::size_t v) {
      while (parent[v] != v) {v = parent[v] = parent[parent[v]];}
      return v;
    };
  for (std::size_t v = 0; v < n; ++v) {parent[v] = v;}
  std::size_t components = n;
  std::size_t extra_cycles = rng.below(3);
  for (;;) {
    std::vector<std::size_t> perm(n);
    for (std::size_t v = 0; v < n; ++v) {perm[v] = v;}
    rng.shuffle(perm);
    const std::size_t len = 2 + rng.below(n - 1);
    const int w = rng.between(1, max_weight);
    for (std::size_t k = 0; k < len; ++k) {
      const auto t = perm[k];
      const auto h = perm[(k + 1) % len];
      arcs.emplace_back(t, h, w);
      if (auto a = find(t), c = find(h); a != c) {
        parent[a] = c;
        --components;
      }
    }
    if (components == 1) {
      if (extra_cycles == 0) {break;}
      --extra_cycles;
    }
  }
  return detail::build_graph(n, arcs);
}

/// Random connected directed multigraph with weights in [1, max_weight];
/// almost always unbalanced. Occasional parallel edges and self-loops.
inline DirectedMultigraph random_digraph(Rng & rng, std::size_t n, int max_weight)
{
  if (n < 1 || max_weight < 1) {throw InvalidInput("digraph needs n >= 1 and max_weight >= 1");}
  std::vector<std::tuple<std::size_t, std::size_t, int>> arcs;
  for (std::size_t v = 1; v < n; ++v) {
    const auto u = rng.below(v);
    if (rng.chance(50)) {
      arcs.emplace_back(u, v, rng.between(1, max_weight));
    } else {
      arcs.emplace_back(v, u, rng.between(1, max_weight));
    }
  }
  const std::size_t extra = rng.below(2 * n + 1);
  for (std::size_t k = 0; k < extra; ++k) {
    const auto t = rng.below(n);
    const auto h = rng.chance(10) ? t : rng.below(n);
    arcs.emplace_back(t, h, rng.between(1, max_weight));
  }
  return detail::build_graph(n, arcs);
}

struct InstanceParams
{
  std::size_t vertices = 4;
  bool planar = false;
  bool balanced = true;
  int max_weight = 5;
};

struct RandomInstance
{
  DirectedMultigraph graph;
  std::optional<CombinatorialMap> map;
  std::optional<EdgeId> basepoint;
};

/// Seeded entry point used by the CLI and the self-test. Planar instances
/// have at most `vertices` vertices, abstract ones exactly `vertices`.
inline RandomInstance generate_random_instance(std::uint64_t seed, const InstanceParams & p)
{
  if (p.vertices < 1 || p.vertices > kEnumerationMaxVertices) {
    throw InvalidInput("vertex count must be between 1 and " + std::to_string(kEnumerationMaxVertices));
  }
  Rng rng(seed);
  if (p.planar) {
    if (!p.balanced || p.vertices < 2) {
      throw InvalidInput("planar instances are balanced and need at least 2 vertices");
    }
    auto inst = random_plane_diagram(rng, {p.vertices, p.max_weight, 2 * p.vertices + 2});
    auto g = inst.map.graph();
    return {std::move(g), std::move(inst.map), inst.basepoint};
  }
  return {p.balanced ? random_balanced_graph(rng, p.vertices, p.max_weight)
                     : random_digraph(rng, p.vertices, p.max_weight), std::nullopt, std::nullopt};
}

}  // namespace alexspan

#endif  // ALEXSPAN_RANDOM_HPP_
