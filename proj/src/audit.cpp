#include "semigraph/audit.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "semigraph/enumerate.hpp"
#include "semigraph/graph_analysis.hpp"
#include "semigraph/graphs.hpp"
#include "semigraph/green.hpp"
#include "semigraph/planarity.hpp"

namespace semigraph {

CheckOutcome TheoremCheck::evaluate(const CayleyTable& s) const {
  CheckOutcome out;
  out.hypothesis = !hypothesis || hypothesis(s);
  if (!out.hypothesis) return out;
  out.lhs = lhs(s);
  out.rhs = rhs(s);
  out.ok = direction == Direction::iff ? out.lhs == out.rhs : !out.lhs || out.rhs;
  if (extra) out.ok = out.ok && extra(s);
  return out;
}

namespace {

std::vector<std::vector<int>> sf_family(const CayleyTable& s) {
  std::vector<std::vector<int>> out;
  for (int f : idempotents(s)) out.push_back(s_f(s, f));
  return out;
}

bool set_is_monogenic(const CayleyTable& s, const std::vector<int>& members) {
  for (int c = 0; c < s.order(); ++c) {
    std::vector<int> pw = power_list(s, c);
    std::sort(pw.begin(), pw.end());
    if (pw == members) return true;
  }
  return false;
}

bool subset_is_group(const CayleyTable& s, const std::vector<int>& members) {
  for (int u : members)
    for (int v : members)
      if (!std::binary_search(members.begin(), members.end(), s.product(u, v))) return false;
  int identity = -1;
  for (int e : members) {
    bool ok = true;
    for (int u : members)
      if (s.product(e, u) != u || s.product(u, e) != u) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) return false;
  for (int u : members) {
    bool has_inverse = false;
    for (int v : members)
      if (s.product(u, v) == identity && s.product(v, u) == identity) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return false;
  }
  return true;
}

bool orders_at_most(const CayleyTable& s, int bound) {
  for (int a = 0; a < s.order(); ++a)
    if (monogenic_data(s, a).order > bound) return false;
  return true;
}

bool pi_within_two(const CayleyTable& s) {
  std::vector<int> pi = pi_set(s);
  return std::all_of(pi.begin(), pi.end(), [](int o) { return o <= 2; });
}

// Elements of order four with index two whose generated subsemigroups share
// exactly three elements, taken over distinct unordered triples.
bool has_bad_order_four_triple(const CayleyTable& s) {
  int n = s.order();
  std::vector<int> quads;
  std::vector<std::vector<int>> pw(n);
  for (int a = 0; a < n; ++a) {
    MonogenicData d = monogenic_data(s, a);
    if (d.order == 4 && d.index == 2) {
      quads.push_back(a);
      pw[a] = d.powers;
      std::sort(pw[a].begin(), pw[a].end());
    }
  }
  for (size_t i = 0; i < quads.size(); ++i)
    for (size_t j = i + 1; j < quads.size(); ++j)
      for (size_t k = j + 1; k < quads.size(); ++k) {
        std::vector<int> ij, ijk;
        std::set_intersection(pw[quads[i]].begin(), pw[quads[i]].end(), pw[quads[j]].begin(),
                              pw[quads[j]].end(), std::back_inserter(ij));
        std::set_intersection(ij.begin(), ij.end(), pw[quads[k]].begin(), pw[quads[k]].end(),
                              std::back_inserter(ijk));
        if (ijk.size() == 3) return true;
      }
  return false;
}

bool isolated_matches(const CayleyTable& s, bool proof_reading) {
  SimpleGraph g = enhanced_power_graph(s);
  GreenPartition gp = green_relations(s);
  for (int a = 0; a < s.order(); ++a) {
    bool isolated = g.degree(a) == 0;
    bool idem = s.product(a, a) == a;
    bool conds = idem;
    if (conds) conds = gp.h.classes[gp.h.label[a]].size() == 1;
    if (conds) {
      std::vector<int> sa = s_f(s, a);
      if (proof_reading) {
        conds = sa.size() == 1;
      } else {
        for (int x : sa) conds = conds && monogenic_data(s, x).index == 1;
      }
    }
    if (isolated != conds) return false;
  }
  return true;
}

}  // namespace

std::vector<TheoremCheck> builtin_checks() {
  using D = TheoremCheck::Direction;
  std::vector<TheoremCheck> checks;

  checks.push_back(
      {"component-formula",
       "components computed from the power equations x^m = y^n coincide with the "
       "traversal components of the enhanced power graph",
       D::iff, nullptr,
       [](const CayleyTable& s) {
         std::vector<std::vector<int>> formula;
         for (int x = 0; x < s.order(); ++x) {
           std::vector<int> c = component_of(s, x);
           if (std::find(formula.begin(), formula.end(), c) == formula.end())
             formula.push_back(std::move(c));
         }
         std::sort(formula.begin(), formula.end());
         Partition traversal = components(enhanced_power_graph(s));
         return formula == traversal.classes;
       },
       [](const CayleyTable&) { return true; }, nullptr});

  checks.push_back(
      {"connectivity",
       "the enhanced power graph is connected iff all pairs of generated subsemigroups "
       "intersect, and then every component has diameter at most 2",
       D::iff, nullptr,
       [](const CayleyTable& s) { return classify(enhanced_power_graph(s)).connected; },
       [](const CayleyTable& s) {
         for (int x = 0; x < s.order(); ++x)
           for (int y = x + 1; y < s.order(); ++y)
             if (gen_intersection(s, x, y).empty()) return false;
         return true;
       },
       [](const CayleyTable& s) {
         GraphClassification c = classify(enhanced_power_graph(s));
         if (!c.connected) return true;
         return std::all_of(c.diameter_per_component.begin(), c.diameter_per_component.end(),
                            [](int d) { return d <= 2; });
       }});

  checks.push_back({"unique-idempotent",
                    "every generated subsemigroup <a> contains exactly one idempotent", D::iff,
                    nullptr,
                    [](const CayleyTable& s) {
                      for (int a = 0; a < s.order(); ++a) {
                        int count = 0;
                        for (int p : power_list(s, a))
                          if (s.product(p, p) == p) ++count;
                        if (count != 1) return false;
                      }
                      return true;
                    },
                    [](const CayleyTable&) { return true; }, nullptr});

  checks.push_back({"idempotent-components",
                    "the components of the enhanced power graph are exactly the sets S_f, one "
                    "per idempotent f",
                    D::iff, nullptr,
                    [](const CayleyTable& s) {
                      std::vector<std::vector<int>> family = sf_family(s);
                      std::sort(family.begin(), family.end());
                      Partition comps = components(enhanced_power_graph(s));
                      return family == comps.classes &&
                             family.size() == idempotents(s).size();
                    },
                    [](const CayleyTable&) { return true; }, nullptr});

  checks.push_back({"band-null", "the semigroup is a band iff its enhanced power graph is null",
                    D::iff, nullptr, [](const CayleyTable& s) { return is_band(s); },
                    [](const CayleyTable& s) { return classify(enhanced_power_graph(s)).null; },
                    nullptr});

  checks.push_back(
      {"order-exponent-bounds",
       "every element order is at most twice the exponent, and every <x> lies inside "
       "some maximal monogenic subsemigroup",
       D::iff, nullptr,
       [](const CayleyTable& s) {
         int e = exponent(s);
         std::vector<SubsemigroupSet> maximal = maximal_monogenic(s);
         for (int x = 0; x < s.order(); ++x) {
           MonogenicData d = monogenic_data(s, x);
           if (d.order > 2 * e) return false;
           std::vector<int> pw = d.powers;
           std::sort(pw.begin(), pw.end());
           bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const SubsemigroupSet& m) {
             return std::includes(m.elements.begin(), m.elements.end(), pw.begin(), pw.end());
           });
           if (!covered) return false;
         }
         return true;
       },
       [](const CayleyTable&) { return true; }, nullptr});

  checks.push_back({"complete-monogenic",
                    "the enhanced power graph is complete iff the semigroup is monogenic", D::iff,
                    nullptr,
                    [](const CayleyTable& s) { return classify(enhanced_power_graph(s)).complete; },
                    [](const CayleyTable& s) { return is_monogenic(s).has_value(); }, nullptr});

  checks.push_back(
      {"bipartite-acyclic-orders",
       "bipartite iff acyclic iff every element order is at most 2", D::iff, nullptr,
       [](const CayleyTable& s) { return classify(enhanced_power_graph(s)).bipartite; },
       [](const CayleyTable& s) { return pi_within_two(s); },
       [](const CayleyTable& s) {
         GraphClassification c = classify(enhanced_power_graph(s));
         return c.acyclic == c.bipartite;
       }});

  checks.push_back({"tree",
                    "the enhanced power graph is a tree iff there is exactly one idempotent and "
                    "every element order is at most 2",
                    D::iff, nullptr,
                    [](const CayleyTable& s) { return classify(enhanced_power_graph(s)).tree; },
                    [](const CayleyTable& s) {
                      return idempotents(s).size() == 1 && pi_within_two(s);
                    },
                    nullptr});

  checks.push_back(
      {"regular",
       "the enhanced power graph is k-regular iff the semigroup is a disjoint union of "
       "monogenic subsemigroups of size k+1",
       D::iff, nullptr,
       [](const CayleyTable& s) {
         return classify(enhanced_power_graph(s)).regular_degree.has_value();
       },
       [](const CayleyTable& s) {
         std::vector<std::vector<int>> family = sf_family(s);
         for (const auto& part : family) {
           if (part.size() != family.front().size()) return false;
           if (!set_is_monogenic(s, part)) return false;
         }
         return true;
       },
       [](const CayleyTable& s) {
         GraphClassification c = classify(enhanced_power_graph(s));
         if (!c.regular_degree) return true;
         std::vector<std::vector<int>> family = sf_family(s);
         bool decomposes = std::all_of(family.begin(), family.end(), [&](const auto& part) {
           return part.size() == family.front().size() && set_is_monogenic(s, part);
         });
         if (!decomposes) return true;  // handled by the biconditional itself
         return static_cast<int>(family.front().size()) == *c.regular_degree + 1;
       }});

  checks.push_back(
      {"components-complete",
       "every component of the enhanced power graph is complete iff the semigroup is a "
       "disjoint union of monogenic subsemigroups",
       D::iff, nullptr,
       [](const CayleyTable& s) {
         SimpleGraph g = enhanced_power_graph(s);
         for (const auto& cls : components(g).classes)
           if (!classify(g.induced(cls)).complete) return false;
         return true;
       },
       [](const CayleyTable& s) {
         std::vector<std::vector<int>> family = sf_family(s);
         return std::all_of(family.begin(), family.end(),
                            [&](const auto& part) { return set_is_monogenic(s, part); });
       },
       nullptr});

  checks.push_back({"completely-regular-groups",
                    "the semigroup is completely regular iff every component of the enhanced "
                    "power graph forms a group",
                    D::iff, nullptr,
                    [](const CayleyTable& s) { return is_completely_regular(s).completely_regular; },
                    [](const CayleyTable& s) {
                      std::vector<std::vector<int>> family = sf_family(s);
                      return std::all_of(family.begin(), family.end(), [&](const auto& part) {
                        return subset_is_group(s, part);
                      });
                    },
                    nullptr});

  checks.push_back(
      {"isolated-vertex",
       "a vertex is isolated iff it is idempotent with trivial H-class and its S_a "
       "collapses (both the per-element index reading and the singleton reading are "
       "evaluated)",
       D::iff, nullptr,
       [](const CayleyTable& s) { return isolated_matches(s, /*proof_reading=*/false); },
       [](const CayleyTable& s) { return isolated_matches(s, /*proof_reading=*/true); },
       [](const CayleyTable& s) { return isolated_matches(s, /*proof_reading=*/false); }});

  checks.push_back({"planar-order-bound",
                    "a planar enhanced power graph forces every element order below 5",
                    D::implies, nullptr,
                    [](const CayleyTable& s) { return is_planar(enhanced_power_graph(s)).planar; },
                    [](const CayleyTable& s) { return orders_at_most(s, 4); }, nullptr});

  checks.push_back(
      {"planarity",
       "when every element of order 4 has index 1 or 2: planar iff all orders are at "
       "most 4 and no three index-2 elements of order 4 share exactly three powers",
       D::iff,
       [](const CayleyTable& s) {
         for (int a = 0; a < s.order(); ++a) {
           MonogenicData d = monogenic_data(s, a);
           if (d.order == 4 && d.index > 2) return false;
         }
         return true;
       },
       [](const CayleyTable& s) { return is_planar(enhanced_power_graph(s)).planar; },
       [](const CayleyTable& s) {
         return orders_at_most(s, 4) && !has_bad_order_four_triple(s);
       },
       nullptr});

  checks.push_back(
      {"min-degree-independence",
       "the minimum degree is min order over maximal monogenic generators minus 1, and "
       "the independence number counts the maximal monogenic subsemigroups",
       D::iff, nullptr,
       [](const CayleyTable& s) {
         std::vector<SubsemigroupSet> maximal = maximal_monogenic(s);
         size_t min_size = maximal.front().elements.size();
         for (const auto& m : maximal) min_size = std::min(min_size, m.elements.size());
         SimpleGraph g = enhanced_power_graph(s);
         GraphClassification c = classify(g);
         if (c.min_degree != static_cast<int>(min_size) - 1) return false;
         return independence_number(g).alpha == static_cast<int>(maximal.size());
       },
       [](const CayleyTable&) { return true; }, nullptr});

  return checks;
}

bool AuditReport::clean() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.counterexamples.empty(); });
}

AuditReport run_audit(const std::vector<TheoremCheck>& checks,
                      const std::vector<CayleyTable>& corpus) {
  AuditReport report;
  report.corpus_size = corpus.size();
  for (const TheoremCheck& check : checks) {
    CheckReport cr;
    cr.check_id = check.id;
    cr.corpus_size = corpus.size();
    for (const CayleyTable& s : corpus) {
      CheckOutcome out = check.evaluate(s);
      if (!out.hypothesis) continue;
      ++cr.hypothesis_count;
      if (out.ok)
        ++cr.agreements;
      else
        cr.counterexamples.push_back(
            {s.order() <= kMaxCanonicalOrder
                 ? canonical_form(s, DedupMode::up_to_iso_and_anti)
                 : s,
             out.lhs, out.rhs});
    }
    report.checks.push_back(std::move(cr));
  }
  return report;
}

std::string render_audit_text(const AuditReport& report) {
  std::ostringstream os;
  os << "corpus size: " << report.corpus_size << "\n";
  for (const CheckReport& cr : report.checks) {
    os << "check " << cr.check_id << ": instances " << cr.hypothesis_count << "/"
       << cr.corpus_size << ", agreements " << cr.agreements << ", counterexamples "
       << cr.counterexamples.size() << "\n";
    for (const Counterexample& ce : cr.counterexamples) {
      os << "  counterexample (lhs=" << (ce.lhs ? "true" : "false")
         << ", rhs=" << (ce.rhs ? "true" : "false") << "), table:";
      for (int v : ce.table.flat()) os << " " << v;
      os << "\n";
    }
  }
  os << (report.clean() ? "no counterexamples\n" : "COUNTEREXAMPLES FOUND\n");
  return os.str();
}

std::string render_audit_jsonl(const AuditReport& report) {
  std::ostringstream os;
  for (const CheckReport& cr : report.checks)
    for (const Counterexample& ce : cr.counterexamples) {
      nlohmann::json record;
      record["check"] = cr.check_id;
      record["order"] = ce.table.order();
      std::vector<std::vector<int>> rows;
      for (int i = 0; i < ce.table.order(); ++i) {
        std::vector<int> row;
        for (int j = 0; j < ce.table.order(); ++j) row.push_back(ce.table.product(i, j));
        rows.push_back(std::move(row));
      }
      record["table"] = rows;
      record["lhs"] = ce.lhs;
      record["rhs"] = ce.rhs;
      os << record.dump() << "\n";
    }
  return os.str();
}

CayleyTable k33_example_semigroup() {
  constexpr int n = 6;
  // Elements: a=0, x=1, y=2, z=3, b=4, c=5. Powers of each generator:
  // g^2 = x, g^3 = y, g^4 = z, g^5 = x again (order 4, index 2, period 3).
  const std::vector<int> generators{0, 4, 5};
  std::vector<int> t(n * n, -1);
  // exponent arithmetic on the shared chain: x, y, z carry exponents 2, 3, 4
  auto reduce = [](int exp) { return exp <= 4 ? exp : 2 + (exp - 2) % 3; };
  for (int g : generators) {
    t[g * n + g] = 1;                       // g * g = x
    for (int p = 1; p <= 3; ++p) {          // g * g^(p+1), both sides
      int result = reduce(1 + p + 1) - 1;   // exponents p+1 in {2,3,4} are x,y,z
      t[g * n + p] = result;
      t[p * n + g] = result;
    }
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) t[i * n + j] = reduce(i + 1 + j + 1) - 1;

  // The six cross products among the generators are the only free cells.
  std::vector<std::pair<int, int>> free_cells;
  for (int g : generators)
    for (int h : generators)
      if (g != h) free_cells.emplace_back(g, h);

  auto associative_so_far = [&]() {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int ij = t[i * n + j];
        if (ij < 0) continue;
        for (int k = 0; k < n; ++k) {
          int jk = t[j * n + k];
          if (jk < 0) continue;
          int left = t[ij * n + k];
          int right = t[i * n + jk];
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    return true;
  };

  auto fill = [&](auto&& self, size_t idx) -> bool {
    if (idx == free_cells.size()) return true;
    auto [i, j] = free_cells[idx];
    for (int v = 0; v < n; ++v) {
      t[i * n + j] = v;
      if (associative_so_far() && self(self, idx + 1)) return true;
      t[i * n + j] = -1;
    }
    return false;
  };
  if (!fill(fill, 0))
    throw ConstructionFailedError(
        "no associative completion for the shared-kernel three-generator table");

  CayleyTable table(n, t, {"a", "x", "y", "z", "b", "c"});
  for (int g : generators) {
    MonogenicData d = monogenic_data(table, g);
    if (d.order != 4 || d.index != 2)
      throw ConstructionFailedError("completion violates the generator power structure");
  }
  return table;
}

}  // namespace semigraph
