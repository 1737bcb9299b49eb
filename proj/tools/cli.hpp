#ifndef ALEXSPAN_TOOLS_CLI_HPP_
#define ALEXSPAN_TOOLS_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alexspan/alexspan.hpp"

namespace alexspan::cli
{

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct Invocation
{
  std::string command;
  std::string input;
  std::optional<std::string> root;
  std::string method = "det";
  bool list = false;
  bool force = false;
  std::uint64_t seed = 1;
  std::optional<std::string> edge;
  std::optional<std::string> edge_i;
  std::optional<std::string> edge_j;
};

/// Raised for option combinations that make no sense; exit code 2.
class UsageError : public Error
{
public:
  using Error::Error;
};

namespace detail
{

inline std::string join_tree(const SpanningTree & t)
{
  std::string s = "{";
  for (std::size_t k = 0; k < t.edges.size(); ++k) {
    s += (k ? "," : "") + t.edges[k];
  }
  return s + "}";
}

inline std::string state_inline(const DecoratedDiagram & d, const KauffmanState & s)
{
  std::string out;
  for (std::size_t e = 0; e < s.corners.size(); ++e) {
    out += (e ? " " : "") + d.graph().edge(e).id + ":" + corner_letter(s.corners[e]);
  }
  return out;
}

inline DecoratedDiagram diagram_for(const GraphDocument & doc, const Invocation & inv)
{
  const auto & map = doc.require_map();
  std::optional<EdgeId> base = inv.edge ? inv.edge : doc.basepoint;
  if (!base) {throw UsageError("no base point: add \"basepoint\" to the input or pass --edge");}
  return decorate(map, *base);
}

inline const VertexId & root_for(const GraphDocument & doc, const Invocation & inv)
{
  if (!inv.root) {return doc.graph.vertex(0);}
  doc.graph.vertex_index(*inv.root);
  return *inv.root;
}

inline std::vector<Diagnostic> graph_diagnostics(const DirectedMultigraph & g)
{
  using K = Diagnostic::Kind;
  std::vector<Diagnostic> out;
  for (const auto & e : g.edges()) {
    if (e.weight <= 0) {
      out.push_back({K::positivity, e.id, "edge '" + e.id + "' has non-positive weight " + e.weight.str()});
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (auto net = net_inflow(g, v); net != 0) {
      out.push_back({K::balance, g.vertex(v), "vertex '" + g.vertex(v) + "' has net inflow " + net.str()});
    }
  }
  if (!is_connected(g)) {out.push_back({K::connectivity, "", "underlying graph is disconnected"});}
  return out;
}

inline int cmd_validate(const GraphDocument & doc, std::ostream & out)
{
  const auto diags = doc.map ? validate_map(*doc.map) : graph_diagnostics(doc.graph);
  const auto & g = doc.graph;
  out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
  out << "balanced=" << (is_balanced(g) ? "true" : "false")
      << " connected=" << (is_connected(g) ? "true" : "false")
      << " strongly_connected=" << (is_strongly_connected(g) ? "true" : "false") << '\n';
  if (doc.map && doc.map->rotation_complete()) {
    out << "faces=" << faces(*doc.map).size() << '\n';
  }
  for (const auto & d : diags) {
    out << "violation " << kind_name(d.kind) << (d.subject.empty() ? "" : " [" + d.subject + "]")
        << ": " << d.message << '\n';
  }
  out << (diags.empty() ? "ok" : "invalid") << '\n';
  return diags.empty() ? kOk : kFailed;
}

inline int cmd_trees(const GraphDocument & doc, const Invocation & inv, std::ostream & out)
{
  const auto & g = doc.graph;
  const auto & root = root_for(doc, inv);
  const auto trees = enumerate_trees(g, root, {inv.force});
  BigInt total = 0;
  out << "root=" << root << '\n';
  for (const auto & t : trees) {
    const BigInt w = tree_weight(g, t);
    total += w;
    if (inv.list) {out << join_tree(t) << " weight=" << w << '\n';}
  }
  out << "trees=" << trees.size() << '\n';
  out << "weighted=" << total << '\n';
  return kOk;
}

inline int cmd_count(const GraphDocument & doc, const Invocation & inv, std::ostream & out)
{
  const auto & g = doc.graph;
  const auto & root = root_for(doc, inv);
  if (inv.method != "enum" && inv.method != "det" && inv.method != "all") {
    throw UsageError("--method must be enum, det or all");
  }
  std::optional<BigInt> by_enum, by_det;
  if (inv.method != "det") {by_enum = count_by_enumeration(g, root, {inv.force});}
  if (inv.method != "enum") {by_det = count_by_determinant(g, root);}
  if (by_enum) {out << "enum=" << *by_enum << '\n';}
  if (by_det) {out << "det=" << *by_det << '\n';}
  if (by_enum && by_det) {
    const bool agree = *by_enum == *by_det;
    out << "agree=" << (agree ? "true" : "false") << '\n';
    return agree ? kOk : kFailed;
  }
  return kOk;
}

inline int cmd_alexander(const GraphDocument & doc, const Invocation & inv, std::ostream & out)
{
  const auto d = diagram_for(doc, inv);
  const auto delta = state_sum(d);
  out << delta << '\n';
  out << "eval@1 = " << eval_one(delta) << '\n';
  return kOk;
}

inline int cmd_states(const GraphDocument & doc, const Invocation & inv, std::ostream & out)
{
  const auto d = diagram_for(doc, inv);
  const auto states = enumerate_states(d);
  out << "states=" << states.size() << '\n';
  for (std::size_t k = 0; k < states.size(); ++k) {
    out << "state " << (k + 1) << '\n';
    for (std::size_t e = 0; e < d.crossing_count(); ++e) {
      out << d.graph().edge(e).id << " -> " << corner_letter(states[k].corners[e]) << '\n';
    }
  }
  return kOk;
}

inline int cmd_bijection(const GraphDocument & doc, const Invocation & inv, std::ostream & out)
{
  const auto d = diagram_for(doc, inv);
  const auto & g = d.graph();
  const auto trees = enumerate_trees(g, state_root(d), {inv.force});
  const auto states = enumerate_states(d);
  bool ok = trees.size() == states.size();
  out << "root=" << state_root(d) << " trees=" << trees.size() << " states=" << states.size() << '\n';
  for (const auto & t : trees) {
    const auto s = tree_to_state(d, t);
    const BigInt w = tree_weight(g, t);
    const BigInt p = eval_one(state_polynomial(d, s));
    const bool round = state_to_tree(d, s) == t &&
      std::find(states.begin(), states.end(), s) != states.end();
    ok = ok && round && w == p;
    out << join_tree(t) << " -> " << state_inline(d, s) << " c(T)=" << w << " P_s(1)=" << p
        << (round ? "" : " ROUNDTRIP-FAILED") << '\n';
  }
  for (const auto & s : states) {
    ok = ok && tree_to_state(d, state_to_tree(d, s)) == s;
  }
  out << "bijection=" << (ok ? "true" : "false") << '\n';
  return ok ? kOk : kFailed;
}

inline int cmd_skein(const GraphDocument & doc, const Invocation & inv, std::ostream & out)
{
  if (!inv.edge_i || !inv.edge_j) {throw UsageError("skein needs --edge-i and --edge-j");}
  const auto rep = verify_skein_t1(doc.graph, {*inv.edge_i, *inv.edge_j});
  out << "i=" << rep.i << " j=" << rep.j << '\n';
  out << "N(G)=" << rep.count << '\n';
  out << "N(G1)=" << rep.count_g1 << '\n';
  out << "N(G2)=" << rep.count_g2 << '\n';
  out << "residual=" << to_string(rep.residual) << '\n';
  return rep.holds ? kOk : kFailed;
}

inline int cmd_subdivide_check(const GraphDocument & doc, const Invocation & inv, std::ostream & out)
{
  if (!inv.edge) {throw UsageError("subdivide-check needs --edge");}
  const auto & g = doc.graph;
  const BigInt w = g.edge(g.edge_index(*inv.edge)).weight;
  const BigInt before = balanced_count(g);
  const BigInt after = balanced_count(subdivide_edge(g, *inv.edge).graph);
  const bool holds = after == w * before;
  out << "N(g)=" << before << '\n';
  out << "N(g')=" << after << '\n';
  out << "weight=" << w << '\n';
  out << "holds=" << (holds ? "true" : "false") << '\n';
  return holds ? kOk : kFailed;
}

inline int cmd_selftest(const Invocation & inv, std::ostream & out)
{
  bool ok = true;
  for (const auto & r : run_selftest(inv.seed)) {
    out << r.name << ": " << r.passed << "/" << r.total << " passed";
    if (!r.ok()) {out << " (first failure: " << r.first_failure << ")";}
    out << '\n';
    ok = ok && r.ok();
  }
  out << (ok ? "all properties hold" : "PROPERTY FAILURES") << '\n';
  return ok ? kOk : kFailed;
}

}  // namespace detail

/// Execute one command. Reports go to `out`, errors to `err`.
inline int run(const Invocation & inv, std::ostream & out, std::ostream & err)
{
  try {
    if (inv.command == "selftest") {return detail::cmd_selftest(inv, out);}
    const GraphDocument doc = load_document(inv.input);
    if (inv.command == "validate") {return detail::cmd_validate(doc, out);}
    if (inv.command == "trees") {return detail::cmd_trees(doc, inv, out);}
    if (inv.command == "count") {return detail::cmd_count(doc, inv, out);}
    if (inv.command == "laplacian") {
      out << laplacian(doc.graph);
      return kOk;
    }
    if (inv.command == "alexander") {return detail::cmd_alexander(doc, inv, out);}
    if (inv.command == "states") {return detail::cmd_states(doc, inv, out);}
    if (inv.command == "bijection") {return detail::cmd_bijection(doc, inv, out);}
    if (inv.command == "skein") {return detail::cmd_skein(doc, inv, out);}
    if (inv.command == "subdivide-check") {return detail::cmd_subdivide_check(doc, inv, out);}
    err << "error: unknown command '" << inv.command << "'\n";
    return kUsage;
  } catch (const PreconditionFailed & e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const InternalError & e) {
    err << "internal error: " << e.what() << '\n';
    return kFailed;
  } catch (const Error & e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

/// Parse `args` (without the program name) and run.
inline int main_with_args(std::vector<std::string> args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Alexander polynomials and weighted spanning tree counts of MOY graphs"};
  app.require_subcommand(1);
  Invocation inv;

  auto add_input = [&](CLI::App * sub) {
      sub->add_option("input", inv.input, "graph document (JSON)")->required();
    };
  auto add_force = [&](CLI::App * sub) {
      sub->add_flag("--force", inv.force, "lift the brute-force enumeration size guard");
    };
  auto add_edge = [&](CLI::App * sub, const char * help) {
      sub->add_option("--edge", inv.edge, help);
    };

  auto * validate = app.add_subcommand("validate", "check balance, connectivity and the rotation");
  add_input(validate);

  auto * trees = app.add_subcommand("trees", "enumerate oriented spanning trees at a root");
  add_input(trees);
  trees->add_option("--root", inv.root, "root vertex (default: first vertex)");
  trees->add_flag("--list", inv.list, "print every tree");
  add_force(trees);

  auto * count = app.add_subcommand("count", "weighted number of spanning trees at a root");
  add_input(count);
  count->add_option("--root", inv.root, "root vertex (default: first vertex)");
  count->add_option("--method", inv.method, "enum, det or all")
  ->check(CLI::IsMember({"enum", "det", "all"}));
  add_force(count);

  auto * lap = app.add_subcommand("laplacian", "print the Laplacian matrix");
  add_input(lap);

  auto * alex = app.add_subcommand("alexander", "Kauffman state sum of a plane diagram");
  add_input(alex);
  add_edge(alex, "base point edge (overrides the document)");

  auto * states = app.add_subcommand("states", "list the Kauffman states");
  add_input(states);
  add_edge(states, "base point edge (overrides the document)");

  auto * bij = app.add_subcommand("bijection", "check the tree/state correspondence");
  add_input(bij);
  add_edge(bij, "base point edge (overrides the document)");
  add_force(bij);

  auto * skein = app.add_subcommand("skein", "check the t=1 skein relation at a pair of edges");
  add_input(skein);
  skein->add_option("--edge-i", inv.edge_i, "strand of weight i (c -> b)")->required();
  skein->add_option("--edge-j", inv.edge_j, "strand of weight j (d -> a)")->required();

  auto * sub = app.add_subcommand("subdivide-check", "check N scales by the weight of a subdivided edge");
  add_input(sub);
  add_edge(sub, "edge to subdivide");
  sub->get_option("--edge")->required();

  auto * self = app.add_subcommand("selftest", "run the randomized property suite");
  self->add_option("--seed", inv.seed, "random seed");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp & e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError & e) {
    app.exit(e, out, err);
    return kUsage;
  }
  inv.command = app.get_subcommands().front()->get_name();
  return run(inv, out, err);
}

}  // namespace alexspan::cli

#endif  // ALEXSPAN_TOOLS_CLI_HPP_
