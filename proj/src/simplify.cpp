#include <algorithm>
#include <map>

#include "chowgen/error.hpp"
#include "chowgen/presentations.hpp"

namespace chowgen {

namespace {

struct Elimination {
  std::size_t relation;
  std::size_t var;
  Polynomial value;  ///< what the variable equals modulo the relation
};

bool is_unit_variable_term(const Monomial& m, std::size_t var) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != (i == var ? 1u : 0u)) return false;
  return true;
}

/// A relation u*g + rest with u = +-1 and g absent from rest gives g = -u*rest.
/// Among candidates in one relation the heaviest (then last declared) wins.
std::optional<Elimination> find_elimination(const Presentation& p) {
  const auto& ring = p.ring();
  for (std::size_t r = 0; r < p.relations().size(); ++r) {
    const Polynomial& poly = p.relations()[r].poly;
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < ring.size(); ++v) {
      int hits = 0;
      bool unit = false;
      for (const auto& [m, c] : poly.terms()) {
        if (m[v] == 0) continue;
        ++hits;
        unit = is_unit_variable_term(m, v) && (c == 1 || c == -1);
      }
      if (hits != 1 || !unit) continue;
      if (!best || ring.weight(v) >= ring.weight(*best)) best = v;
    }
    if (!best) continue;
    Monomial g(ring.size());
    g[*best] = 1;
    const Integer u = poly.coefficient(g);
    Polynomial rest = poly - Polynomial::term(ring, g, u);
    return Elimination{r, *best, rest * Integer(-u)};
  }
  return std::nullopt;
}

Presentation eliminate(const Presentation& p, const Elimination& e) {
  const GradedRingSpec smaller = p.ring().without(e.var);
  std::vector<Relation> rels;
  for (std::size_t r = 0; r < p.relations().size(); ++r) {
    if (r == e.relation) continue;
    const Relation& rel = p.relations()[r];
    rels.push_back({rel.label, rebase(substitute(rel.poly, e.var, e.value), smaller)});
  }
  Presentation out(smaller, std::move(rels), p.provenance());
  for (const auto& n : p.notes()) out.add_note(n);
  out.add_note("eliminated " + p.ring().name(e.var) + " = " + to_string(e.value) + " using " +
               p.relations()[e.relation].label);
  return out;
}

/// Replace each degree's relations by HNF rows of the degree slice that are
/// not already generated by lower-degree relations.
Presentation reduce_lattices(const Presentation& p, const ResourceGuard& guard) {
  const auto& ring = p.ring();
  std::map<int, std::vector<const Relation*>> by_degree;
  for (const auto& r : p.relations()) by_degree[*r.poly.homogeneous_degree()].push_back(&r);

  std::vector<Relation> kept;
  std::vector<Polynomial> kept_polys;
  for (const auto& [deg, rels] : by_degree) {
    const DegreeSlice lower = degree_slice(ring, kept_polys, deg, guard);
    IntMatrix full = lower.relation_matrix;
    for (const Relation* r : rels) full.append_row(lower.coordinates(r->poly));
    const HermiteForm target = hermite_normal_form(full);

    IntMatrix current = lower.relation_matrix;
    HermiteForm span = hermite_normal_form(current);
    int fresh = 0;
    for (std::size_t i = 0; i < target.rank(); ++i) {
      const auto row = target.basis.row(i);
      if (span.contains(row)) continue;
      const Polynomial q = lower.polynomial(ring, row);
      std::string label;
      for (const Relation* r : rels)
        if (r->poly == q || r->poly == -q) label = r->label;
      if (label.empty()) label = "deg" + std::to_string(deg) + "[" + std::to_string(++fresh) + "]";
      kept.push_back({label, q});
      kept_polys.push_back(q);
      current.append_row(row);
      span = hermite_normal_form(current);
    }
  }
  Presentation out(ring, std::move(kept), p.provenance());
  for (const auto& n : p.notes()) out.add_note(n);
  return out;
}

}  // namespace

Presentation simplify(const Presentation& input, const ResourceGuard& guard) {
  Presentation p = input;
  for (int round = 0; round < 1000; ++round) {
    while (auto e = find_elimination(p)) p = eliminate(p, *e);
    Presentation next = reduce_lattices(p, guard);
    const bool same = next.relations() == p.relations();
    p = std::move(next);
    if (same) return p;
  }
  throw InternalError("simplify: no fixed point after 1000 rounds");
}

}  // namespace chowgen
