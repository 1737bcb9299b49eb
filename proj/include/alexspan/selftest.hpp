#ifndef ALEXSPAN_SELFTEST_HPP_
#define ALEXSPAN_SELFTEST_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "alexspan/graph.hpp"
#include "alexspan/kauffman.hpp"
#include "alexspan/laurent.hpp"
#include "alexspan/planar.hpp"
#include "alexspan/random.hpp"
#include "alexspan/skein.hpp"
#include "alexspan/spanning.hpp"

namespace alexspan
{

struct PropertyResult
{
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;

  bool ok() const { return passed == total; }
};

namespace detail
{

/// Run `check` on `count` instances; exceptions count as failures.
inline PropertyResult run_property(const std::string & name, std::size_t count,
  const std::function<bool(std::size_t, std::string &)> & check)
{
  PropertyResult r{name, 0, count, {}};
  for (std::size_t k = 0; k < count; ++k) {
    std::string why;
    bool good = false;
    try {
      good = check(k, why);
    } catch (const std::exception & e) {
      why = e.what();
    }
    if (good) {
      ++r.passed;
    } else if (r.first_failure.empty()) {
      r.first_failure = "instance " + std::to_string(k) + (why.empty() ? "" : ": " + why);
    }
  }
  return r;
}

}  // namespace detail

/// Randomized property suite over seeded instances. Every property draws from
/// its own stream derived from `seed`.
inline std::vector<PropertyResult> run_selftest(std::uint64_t seed)
{
  std::vector<PropertyResult> out;
  auto stream = [seed](std::uint64_t tag) { return Rng(seed * 1000003ULL + tag); };

  {
    Rng rng = stream(1);
    out.push_back(detail::run_property("matrix-tree", 200, [&](std::size_t k, std::string & why) {
        const std::size_t n = 1 + rng.below(6);
        const auto g = (k % 2) ? random_balanced_graph(rng, n, 5) : random_digraph(rng, n, 5);
        for (const auto & v : g.vertices()) {
          if (count_by_determinant(g, v) != count_by_enumeration(g, v)) {
            why = "root " + v;
            return false;
          }
        }
        return true;
      }));
  }
  {
    Rng rng = stream(2);
    out.push_back(detail::run_property("root-independence", 100, [&](std::size_t, std::string &) {
        const auto g = random_balanced_graph(rng, 1 + rng.below(7), 5);
        const BigInt n = count_by_determinant(g, g.vertex(0));
        for (const auto & v : g.vertices()) {
          if (count_by_determinant(g, v) != n) {return false;}
        }
        return true;
      }));
  }
  {
    Rng rng = stream(3);
    out.push_back(detail::run_property("main-theorem-plane", 50, [&](std::size_t, std::string & why) {
        const auto inst = random_plane_diagram(rng);
        const auto d = decorate(inst.map, inst.basepoint);
        const auto rep = verify_main_theorem(d);
        why = "Delta(1)=" + rep.alexander_at_one.str() + " N=" + rep.tree_count.str();
        return rep.holds;
      }));
  }
  {
    Rng rng = stream(4);
    out.push_back(detail::run_property("tree-state-bijection", 50, [&](std::size_t, std::string & why) {
        const auto inst = random_plane_diagram(rng);
        const auto d = decorate(inst.map, inst.basepoint);
        const auto trees = enumerate_trees(d.graph(), state_root(d));
        const auto states = enumerate_states(d);
        if (trees.size() != states.size()) {
          why = std::to_string(trees.size()) + " trees vs " + std::to_string(states.size()) + " states";
          return false;
        }
        for (const auto & t : trees) {
          const auto s = tree_to_state(d, t);
          if (state_to_tree(d, s) != t) {return false;}
          if (tree_weight(d.graph(), t) != eval_one(state_polynomial(d, s))) {return false;}
        }
        for (const auto & s : states) {
          if (tree_to_state(d, state_to_tree(d, s)) != s) {return false;}
        }
        return true;
      }));
  }
  {
    Rng rng = stream(5);
    out.push_back(detail::run_property("skein-t1", 100, [&](std::size_t, std::string & why) {
        const auto g = random_balanced_graph(rng, 2 + rng.below(4), 4);
        if (g.edge_count() < 2) {return true;}
        const auto e1 = rng.below(g.edge_count());
        auto e2 = rng.below(g.edge_count() - 1);
        if (e2 >= e1) {++e2;}
        const auto rep = verify_skein_t1(g, {g.edge(e1).id, g.edge(e2).id});
        why = "residual " + to_string(rep.residual);
        return rep.holds;
      }));
  }
  {
    Rng rng = stream(6);
    out.push_back(detail::run_property("subdivision", 50, [&](std::size_t, std::string &) {
        const auto g = random_balanced_graph(rng, 1 + rng.below(6), 5);
        if (g.edge_count() == 0) {return true;}
        const auto & e = g.edge(rng.below(g.edge_count()));
        return balanced_count(subdivide_edge(g, e.id).graph) == e.weight * balanced_count(g);
      }));
  }
  {
    Rng rng = stream(7);
    out.push_back(detail::run_property("positivity-strong-connectivity", 100, [&](std::size_t, std::string &) {
        const auto g = random_balanced_graph(rng, 1 + rng.below(7), 5);
        return is_strongly_connected(g) && balanced_count(g) >= 1;
      }));
  }
  {
    Rng rng = stream(8);
    out.push_back(detail::run_property("euler-regions", 50, [&](std::size_t, std::string &) {
        const auto inst = random_plane_diagram(rng);
        const auto d = decorate(inst.map, inst.basepoint);
        const auto & g = d.graph();
        return g.vertex_count() + d.face_count() == g.edge_count() + 2 &&
               d.region_count() == d.crossing_count() + 2;
      }));
  }
  return out;
}

}  // namespace alexspan

#endif  // ALEXSPAN_SELFTEST_HPP_
