#ifndef ALEXSPAN_PLANAR_HPP_
#define ALEXSPAN_PLANAR_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alexspan/errors.hpp"
#include "alexspan/graph.hpp"

namespace alexspan
{

enum class End { tail, head };

/// Half-edge: the end of `edge` incident to its tail or its head.
struct Dart
{
  std::size_t edge;
  End end;

  std::size_t id() const { return 2 * edge + (end == End::head ? 1 : 0); }
  Dart twin() const { return {edge, end == End::tail ? End::head : End::tail}; }
  static Dart from_id(std::size_t id) { return {id / 2, (id % 2) ? End::head : End::tail}; }

  bool operator==(const Dart &) const = default;
};

inline std::string dart_name(const DirectedMultigraph & g, Dart d)
{
  return g.edge(d.edge).id + (d.end == End::tail ? ":t" : ":h");
}

using Rotation = std::vector<std::vector<Dart>>;

/**
 * @brief Rotation system of a plane diagram.
 *
 * `rotation[v]` lists the darts at vertex v in counterclockwise order. The
 * map may be ill-formed; validate_map() reports what is wrong and the
 * face/decoration operations refuse ill-formed maps.
 */
class CombinatorialMap
{
public:
  CombinatorialMap(DirectedMultigraph graph, Rotation rotation)
  : graph_(std::move(graph)), rotation_(std::move(rotation))
  {
    if (rotation_.size() != graph_.vertex_count()) {
      throw InvalidInput("rotation must list every vertex");
    }
    for (const auto & cyc : rotation_) {
      for (const auto & d : cyc) {
        if (d.edge >= graph_.edge_count()) {throw InvalidInput("rotation dart out of range");}
      }
    }
    index_darts();
  }

  const DirectedMultigraph & graph() const { return graph_; }
  const Rotation & rotation() const { return rotation_; }

  std::size_t dart_count() const { return 2 * graph_.edge_count(); }

  std::size_t origin(Dart d) const
  {
    return d.end == End::tail ? graph_.tail_index(d.edge) : graph_.head_index(d.edge);
  }

  /// Every dart appears exactly once, in the rotation of its own endpoint.
  bool rotation_complete() const { return !rotation_problem_; }
  const std::optional<std::string> & rotation_problem() const { return rotation_problem_; }

  /// Counterclockwise successor of `d` around its origin.
  Dart successor(Dart d) const
  {
    require_complete();
    const auto & cyc = rotation_[origin(d)];
    return cyc[(position_[d.id()] + 1) % cyc.size()];
  }

  /// Face permutation: leave along the twin, then turn to the next dart.
  Dart face_next(Dart d) const { return successor(d.twin()); }

  void require_complete() const
  {
    if (rotation_problem_) {throw PreconditionFailed("invalid rotation: " + *rotation_problem_);}
  }

private:
  void index_darts()
  {
    position_.assign(dart_count(), 0);
    std::vector<int> seen(dart_count(), 0);
    for (std::size_t v = 0; v < rotation_.size(); ++v) {
      for (std::size_t k = 0; k < rotation_[v].size(); ++k) {
        const Dart d = rotation_[v][k];
        if (origin(d) != v) {
          rotation_problem_ = "dart " + dart_name(graph_, d) + " listed at vertex '" +
            graph_.vertex(v) + "' which is not its endpoint";
          return;
        }
        if (seen[d.id()]++) {
          rotation_problem_ = "dart " + dart_name(graph_, d) + " listed twice";
          return;
        }
        position_[d.id()] = k;
      }
    }
    for (std::size_t id = 0; id < dart_count(); ++id) {
      if (!seen[id]) {
        rotation_problem_ = "dart " + dart_name(graph_, Dart::from_id(id)) + " missing from rotation";
        return;
      }
    }
  }

  DirectedMultigraph graph_;
  Rotation rotation_;
  std::vector<std::size_t> position_;
  std::optional<std::string> rotation_problem_;
};

using Face = std::vector<Dart>;

/// Orbits of the face permutation, discovered in increasing dart id order.
/// The face of dart d lies to the right of d traversed away from its origin.
inline std::vector<Face> faces(const CombinatorialMap & map)
{
  map.require_complete();
  std::vector<Face> out;
  std::vector<bool> used(map.dart_count(), false);
  for (std::size_t id = 0; id < map.dart_count(); ++id) {
    if (used[id]) {continue;}
    Face f;
    Dart d = Dart::from_id(id);
    while (!used[d.id()]) {
      used[d.id()] = true;
      f.push_back(d);
      d = map.face_next(d);
    }
    out.push_back(std::move(f));
  }
  return out;
}

struct Diagnostic
{
  enum class Kind { rotation, self_loop, contiguity, connectivity, planarity, balance, positivity };

  Kind kind;
  std::string subject;  ///< offending vertex or edge id; empty for global checks
  std::string message;
};

inline const char * kind_name(Diagnostic::Kind k)
{
  switch (k) {
    case Diagnostic::Kind::rotation: return "rotation";
    case Diagnostic::Kind::self_loop: return "self-loop";
    case Diagnostic::Kind::contiguity: return "contiguity";
    case Diagnostic::Kind::connectivity: return "connectivity";
    case Diagnostic::Kind::planarity: return "planarity";
    case Diagnostic::Kind::balance: return "balance";
    case Diagnostic::Kind::positivity: return "positivity";
  }
  return "?";
}

/// In-darts and out-darts occupy complementary arcs of the cyclic order.
inline bool is_transverse(const std::vector<Dart> & cyc)
{
  std::size_t switches = 0;
  for (std::size_t k = 0; k < cyc.size(); ++k) {
    if (cyc[k].end != cyc[(k + 1) % cyc.size()].end) {++switches;}
  }
  return switches <= 2;
}

namespace detail
{

inline std::size_t face_count_for_euler(const CombinatorialMap & map)
{
  // A single vertex without edges still bounds one region of the sphere.
  return map.graph().edge_count() == 0 ? 1 : faces(map).size();
}

}  // namespace detail

/// Every violated structural or MOY invariant, with the offending element.
inline std::vector<Diagnostic> validate_map(const CombinatorialMap & map)
{
  using K = Diagnostic::Kind;
  const auto & g = map.graph();
  std::vector<Diagnostic> out;

  if (auto problem = map.rotation_problem()) {
    out.push_back({K::rotation, "", *problem});
  }
  for (const auto & e : g.edges()) {
    if (e.is_loop()) {out.push_back({K::self_loop, e.id, "edge '" + e.id + "' is a self-loop"});}
    if (e.weight <= 0) {
      out.push_back({K::positivity, e.id, "edge '" + e.id + "' has non-positive weight " + e.weight.str()});
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!is_transverse(map.rotation()[v])) {
      out.push_back({K::contiguity, g.vertex(v),
          "incoming and outgoing darts interleave at vertex '" + g.vertex(v) + "'"});
    }
    if (auto net = net_inflow(g, v); net != 0) {
      out.push_back({K::balance, g.vertex(v),
          "vertex '" + g.vertex(v) + "' has net inflow " + net.str()});
    }
  }
  const bool connected = is_connected(g);
  if (!connected) {
    out.push_back({K::connectivity, "", "underlying graph is disconnected"});
  }
  if (connected && map.rotation_complete()) {
    const long v = static_cast<long>(g.vertex_count());
    const long e = static_cast<long>(g.edge_count());
    const long f = static_cast<long>(detail::face_count_for_euler(map));
    if (v - e + f != 2) {
      out.push_back({K::planarity, "", "V - E + F = " + std::to_string(v - e + f) +
          " (not a sphere: " + std::to_string(f) + " faces)"});
    }
  }
  return out;
}

enum class Corner { north, west, east };

inline char corner_letter(Corner c)
{
  switch (c) {
    case Corner::north: return 'N';
    case Corner::west: return 'W';
    case Corner::east: return 'E';
  }
  return '?';
}

struct Region
{
  enum class Kind { face, circle };
  Kind kind;
  std::size_t index;  ///< face number or vertex index
};

/**
 * @brief Plane diagram with a base point on one edge.
 *
 * Crossings are indexed by their generating edge. Regions 0..F-1 are the
 * faces and F..F+V-1 the circle regions around the vertices. The crossing of
 * edge e sits at head(e): its north corner is the circle there, its west
 * corner the face to the left of e and its east corner the face to the right.
 */
class DecoratedDiagram
{
public:
  const CombinatorialMap & map() const { return map_; }
  const DirectedMultigraph & graph() const { return map_.graph(); }
  std::size_t basepoint() const { return basepoint_; }
  const EdgeId & basepoint_id() const { return graph().edge(basepoint_).id; }

  const std::vector<Face> & faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t crossing_count() const { return graph().edge_count(); }
  std::size_t region_count() const { return faces_.size() + graph().vertex_count(); }

  Region region(std::size_t r) const
  {
    return r < faces_.size() ? Region{Region::Kind::face, r}
                             : Region{Region::Kind::circle, r - faces_.size()};
  }

  std::string region_name(std::size_t r) const
  {
    const Region reg = region(r);
    return reg.kind == Region::Kind::face ? "F" + std::to_string(reg.index)
                                          : "O(" + graph().vertex(reg.index) + ")";
  }

  std::size_t face_of(Dart d) const { return face_of_dart_[d.id()]; }

  std::size_t corner_region(std::size_t edge, Corner c) const
  {
    switch (c) {
      case Corner::north: return faces_.size() + graph().head_index(edge);
      case Corner::west: return face_of({edge, End::head});
      case Corner::east: return face_of({edge, End::tail});
    }
    throw InternalError("bad corner");
  }

  std::size_t west_face(std::size_t edge) const { return corner_region(edge, Corner::west); }
  std::size_t east_face(std::size_t edge) const { return corner_region(edge, Corner::east); }

  /// The two faces flanking the base point (R_u west, R_v east).
  std::pair<std::size_t, std::size_t> marked_regions() const
  {
    return {west_face(basepoint_), east_face(basepoint_)};
  }

  bool is_marked(std::size_t r) const
  {
    auto [u, v] = marked_regions();
    return r == u || r == v;
  }

  friend DecoratedDiagram decorate(const CombinatorialMap & map, const EdgeId & basepoint);

private:
  DecoratedDiagram(CombinatorialMap map, std::size_t basepoint, std::vector<Face> faces)
  : map_(std::move(map)), basepoint_(basepoint), faces_(std::move(faces))
  {
    face_of_dart_.assign(map_.dart_count(), 0);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      for (const auto & d : faces_[f]) {face_of_dart_[d.id()] = f;}
    }
  }

  CombinatorialMap map_;
  std::size_t basepoint_;
  std::vector<Face> faces_;
  std::vector<std::size_t> face_of_dart_;
};

/// Decorate `map` with a base point on edge `basepoint`. The map must be a
/// loop-free, connected, transverse plane map in which no edge is a bridge.
inline DecoratedDiagram decorate(const CombinatorialMap & map, const EdgeId & basepoint)
{
  const auto & g = map.graph();
  const std::size_t base = g.edge_index(basepoint);
  for (const auto & d : validate_map(map)) {
    switch (d.kind) {
      case Diagnostic::Kind::balance:
      case Diagnostic::Kind::positivity:
        break;
      default:
        throw PreconditionFailed(std::string("cannot decorate: ") + kind_name(d.kind) + ": " + d.message);
    }
  }
  DecoratedDiagram dd(map, base, faces(map));
  if (dd.west_face(base) == dd.east_face(base)) {
    throw PreconditionFailed("cannot decorate: marked regions coincide (base point edge '" +
      basepoint + "' has the same face on both sides)");
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (dd.west_face(e) == dd.east_face(e)) {
      throw PreconditionFailed("cannot decorate: edge '" + g.edge(e).id +
        "' has the same face on both sides");
    }
  }
  if (dd.region_count() != dd.crossing_count() + 2) {
    throw InternalError("region/crossing count mismatch after decoration");
  }
  return dd;
}

}  // namespace alexspan

#endif  // ALEXSPAN_PLANAR_HPP_
