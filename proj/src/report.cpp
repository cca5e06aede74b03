#include "semigraph/report.hpp"

#include <sstream>

#include "semigraph/graph_analysis.hpp"
#include "semigraph/graphs.hpp"
#include "semigraph/green.hpp"
#include "semigraph/planarity.hpp"

namespace semigraph {

namespace {

std::string join_labels(const CayleyTable& s, const std::vector<int>& elements) {
  std::string out = "{";
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ", ";
    out += s.label(elements[i]);
  }
  return out + "}";
}

std::string join_ints(const std::vector<int>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string shape_line(const SimpleGraph& g, const GraphClassification& c) {
  int n = g.vertex_count();
  if (c.null && n > 1) return "null graph";
  if (c.complete) return "complete K_" + std::to_string(n);
  if (is_star(g)) return "star K_{1," + std::to_string(n - 1) + "}";
  if (c.tree) return "tree";
  return "-";
}

}  // namespace

std::string analysis_report(const CayleyTable& s) {
  std::ostringstream os;
  int n = s.order();
  os << "order: " << n << "\n";
  {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    os << "elements: " << join_labels(s, all) << "\n";
  }
  std::vector<int> idem = idempotents(s);
  os << "idempotents E(S): " << join_labels(s, idem) << " (" << idem.size() << ")\n";
  os << "pi(S): " << join_ints(pi_set(s)) << "\n";
  os << "exponent: " << exponent(s) << "\n";
  os << "monogenic data per element:\n";
  for (int a = 0; a < n; ++a) {
    MonogenicData d = monogenic_data(s, a);
    os << "  " << s.label(a) << ": index " << d.index << ", period " << d.period << ", order "
       << d.order << ", idempotent " << s.label(d.idempotent) << ", kernel "
       << join_labels(s, d.kernel) << "\n";
  }
  GreenPartition gp = green_relations(s);
  os << "green classes: L=" << gp.l.classes.size() << " R=" << gp.r.classes.size()
     << " J=" << gp.j.classes.size() << " H=" << gp.h.classes.size()
     << " D=" << gp.d.classes.size() << "\n";
  RegularityResult reg = is_completely_regular(s);
  os << "completely regular: " << (reg.completely_regular ? "true" : "false");
  if (reg.witness) os << " (witness " << s.label(*reg.witness) << ")";
  os << "\n";
  std::vector<SubsemigroupSet> maximal = maximal_monogenic(s);
  os << "maximal monogenic subsemigroups (" << maximal.size() << "):\n";
  for (const auto& m : maximal)
    os << "  " << join_labels(s, m.elements) << "  generators: " << join_labels(s, m.generators)
       << "\n";

  SimpleGraph g = enhanced_power_graph(s);
  GraphClassification c = classify(g);
  os << "enhanced power graph:\n";
  os << "  vertices: " << g.vertex_count() << ", edges: " << g.edge_count() << "\n";
  os << "  components: " << components(g).classes.size() << "\n";
  os << "  connected: " << (c.connected ? "true" : "false") << "\n";
  os << "  complete: " << (c.complete ? "true" : "false") << "\n";
  os << "  null: " << (c.null ? "true" : "false") << "\n";
  os << "  tree: " << (c.tree ? "true" : "false") << "\n";
  os << "  acyclic: " << (c.acyclic ? "true" : "false") << "\n";
  os << "  bipartite: " << (c.bipartite ? "true" : "false") << "\n";
  os << "  shape: " << shape_line(g, c) << "\n";
  if (c.regular_degree)
    os << "  regular: " << *c.regular_degree << "-regular\n";
  os << "  min degree (delta): " << c.min_degree << "\n";
  os << "  max degree: " << c.max_degree << "\n";
  os << "  diameter per component: " << join_ints(c.diameter_per_component) << "\n";
  try {
    IndependentSetResult mis = independence_number(g);
    os << "  independence number (alpha): " << mis.alpha << ", witness "
       << join_labels(s, mis.witness) << "\n";
    os << "  clique number (omega): " << clique_number(g) << "\n";
    if (g.vertex_count() <= kChromaticVertexLimit) {
      os << "  chromatic number (chi): " << chromatic_number(g) << "\n";
    } else {
      os << "  chromatic number (chi): >= " << clique_number(g) << " (clique bound; graph above "
         << kChromaticVertexLimit << " vertices)\n";
    }
  } catch (const SizeLimitError& e) {
    os << "  alpha/omega/chi: n/a (" << e.what() << ")\n";
  }
  PlanarityResult pl = is_planar(g);
  os << "  planar: " << (pl.planar ? "true" : "false") << "\n";
  if (!pl.planar && pl.witness) {
    const KuratowskiWitness& w = *pl.witness;
    if (w.kind == KuratowskiWitness::Kind::k33) {
      std::vector<int> part_a(w.branch_vertices.begin(), w.branch_vertices.begin() + 3);
      std::vector<int> part_b(w.branch_vertices.begin() + 3, w.branch_vertices.end());
      os << "  kuratowski witness: K_{3,3} subdivision on parts " << join_labels(s, part_a)
         << " | " << join_labels(s, part_b) << "\n";
    } else {
      os << "  kuratowski witness: K_5 subdivision on " << join_labels(s, w.branch_vertices)
         << "\n";
    }
  }
  return os.str();
}

}  // namespace semigraph
