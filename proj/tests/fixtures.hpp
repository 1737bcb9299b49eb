#ifndef ALEXSPAN_TESTS_FIXTURES_HPP_
#define ALEXSPAN_TESTS_FIXTURES_HPP_

// Shared instances and brute-force oracles. Nothing here calls into the
// library's own counting, face or state code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "alexspan/alexspan.hpp"

namespace fixtures
{

using alexspan::BigInt;
using alexspan::CombinatorialMap;
using alexspan::Dart;
using alexspan::DirectedMultigraph;
using alexspan::End;
using alexspan::Rotation;

/// The three-vertex worked example with weights i, j, k.
inline DirectedMultigraph fig1_graph(int i = 1, int j = 2, int k = 3)
{
  return DirectedMultigraph({"v1", "v2", "v3"}, {
    {"v3v1", "v3", "v1", i + k},
    {"v2v1", "v2", "v1", j},
    {"v2v3", "v2", "v3", k},
    {"v1v3", "v1", "v3", i},
    {"v1v2", "v1", "v2", j + k},
  });
}

inline Dart dart(const DirectedMultigraph & g, const std::string & edge, char end)
{
  return {g.edge_index(edge), end == 't' ? End::tail : End::head};
}

inline Rotation fig1_rotation(const DirectedMultigraph & g)
{
  return {
    {dart(g, "v1v3", 't'), dart(g, "v1v2", 't'), dart(g, "v2v1", 'h'), dart(g, "v3v1", 'h')},
    {dart(g, "v2v3", 't'), dart(g, "v2v1", 't'), dart(g, "v1v2", 'h')},
    {dart(g, "v1v3", 'h'), dart(g, "v3v1", 't'), dart(g, "v2v3", 'h')},
  };
}

inline CombinatorialMap fig1_map(int i = 1, int j = 2, int k = 3)
{
  auto g = fig1_graph(i, j, k);
  auto rot = fig1_rotation(g);
  return CombinatorialMap(std::move(g), std::move(rot));
}

/// Directed n-cycle 0 -> 1 -> ... -> 0 with uniform weight.
inline DirectedMultigraph cycle_graph(std::size_t n, int w)
{
  std::vector<std::string> vs;
  std::vector<alexspan::Edge> es;
  for (std::size_t v = 0; v < n; ++v) {vs.push_back("c" + std::to_string(v));}
  for (std::size_t v = 0; v < n; ++v) {
    es.push_back({"e" + std::to_string(v), vs[v], vs[(v + 1) % n], w});
  }
  return DirectedMultigraph(vs, es);
}

/**
 * Weighted arborescence count by trying every (n-1)-subset of edges: root has
 * in-degree 0, everyone else in-degree 1, and everything is reachable from the
 * root along chosen edges.
 */
inline BigInt subset_tree_count(const DirectedMultigraph & g, std::size_t root)
{
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n == 1) {return 1;}
  if (m + 1 < n) {return 0;}
  BigInt total = 0;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), true);
  // prev_permutation over a sorted-descending mask walks every subset once.
  do {
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<std::size_t>> out(n);
    BigInt w = 1;
    for (std::size_t e = 0; e < m; ++e) {
      if (!pick[e]) {continue;}
      indeg[g.head_index(e)]++;
      out[g.tail_index(e)].push_back(g.head_index(e));
      w *= g.edge(e).weight;
    }
    bool ok = indeg[root] == 0;
    for (std::size_t v = 0; ok && v < n; ++v) {
      if (v != root && indeg[v] != 1) {ok = false;}
    }
    if (!ok) {continue;}
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto u : out[v]) {
        if (!seen[u]) {seen[u] = true; ++reached; stack.push_back(u);}
      }
    }
    if (reached == n) {total += w;}
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

/// Unweighted number of arborescences, by the same subset walk.
inline std::size_t subset_tree_number(const DirectedMultigraph & g, std::size_t root)
{
  std::vector<alexspan::Edge> unit;
  for (auto e : g.edges()) {e.weight = 1; unit.push_back(e);}
  return static_cast<std::size_t>(subset_tree_count(DirectedMultigraph(g.vertices(), unit), root));
}

/// Leibniz expansion; fine up to 7x7.
inline BigInt leibniz_determinant(const alexspan::Matrix<BigInt> & m)
{
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (perm[a] > perm[b]) {++inversions;}
      }
    }
    BigInt term = (inversions % 2) ? -1 : 1;
    for (std::size_t r = 0; r < n; ++r) {term *= m(r, perm[r]);}
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Face orbits of a rotation system, counted with plain arrays.
inline std::size_t orbit_count(const DirectedMultigraph & g, const Rotation & rot)
{
  const std::size_t darts = 2 * g.edge_count();
  std::vector<std::size_t> succ(darts);
  for (const auto & cyc : rot) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      succ[cyc[k].id()] = cyc[(k + 1) % cyc.size()].id();
    }
  }
  std::vector<bool> seen(darts, false);
  std::size_t orbits = 0;
  for (std::size_t d0 = 0; d0 < darts; ++d0) {
    if (seen[d0]) {continue;}
    ++orbits;
    for (std::size_t d = d0; !seen[d]; d = succ[d ^ 1]) {seen[d] = true;}
  }
  return orbits;
}

/// Coefficient list (lowest doubled exponent first) of a Laurent polynomial.
inline std::vector<BigInt> coefficients(const alexspan::HalfLaurent & p)
{
  std::vector<BigInt> out;
  if (p.is_zero()) {return out;}
  for (auto d = p.min_exponent(); d <= p.max_exponent(); ++d) {out.push_back(p.coefficient(d));}
  return out;
}

}  // namespace fixtures

#endif  // ALEXSPAN_TESTS_FIXTURES_HPP_
