#include "chowgen/grstruct.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "chowgen/error.hpp"

namespace chowgen {

ResourceGuard ResourceGuard::parse(std::string_view text) {
  const auto x = text.find('x');
  auto parse_count = [&](std::string_view part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos)
      throw InvalidArgument("resource guard must look like <rows>x<cols>, got '" + std::string(text) + "'");
    return static_cast<std::size_t>(std::stoull(std::string(part)));
  };
  if (x == std::string_view::npos)
    throw InvalidArgument("resource guard must look like <rows>x<cols>, got '" + std::string(text) + "'");
  ResourceGuard g;
  g.max_rows = parse_count(text.substr(0, x));
  g.max_basis = parse_count(text.substr(x + 1));
  return g;
}

ResourceGuard ResourceGuard::from_env() {
  const char* env = std::getenv("CHOWGEN_GUARD");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

namespace {

void enumerate(const GradedRingSpec& ring, std::size_t var, int remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (var == ring.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int w = ring.weight(var);
  for (int e = remaining / w; e >= 0; --e) {
    current[var] = static_cast<unsigned>(e);
    enumerate(ring, var + 1, remaining - e * w, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const GradedRingSpec& ring, int n) {
  if (n < 0) throw InvalidArgument("monomial_basis: negative degree");
  std::vector<Monomial> out;
  Monomial current(ring.size());
  enumerate(ring, 0, n, current, out);
  return out;
}

std::vector<Integer> DegreeSlice::coordinates(const Polynomial& p) const {
  std::vector<Integer> v(basis.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m, [](const Monomial& a, const Monomial& b) { return a > b; });
    if (it == basis.end() || *it != m)
      throw InvalidArgument("DegreeSlice::coordinates: polynomial has a term outside degree " + std::to_string(degree));
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

Polynomial DegreeSlice::polynomial(const GradedRingSpec& ring, std::span<const Integer> coords) const {
  Polynomial p(ring);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
  return p;
}

DegreeSlice degree_slice(const GradedRingSpec& ring, std::span<const Polynomial> relations, int n,
                         const ResourceGuard& guard) {
  DegreeSlice slice;
  slice.degree = n;
  slice.basis = monomial_basis(ring, n);
  if (slice.basis.size() > guard.max_basis)
    throw ScaleExceeded("scale exceeded: degree " + std::to_string(n) + " slice has " +
                        std::to_string(slice.basis.size()) + " basis monomials (guard " +
                        std::to_string(guard.max_basis) + ")");

  std::vector<std::pair<const Polynomial*, std::vector<Monomial>>> work;
  std::size_t rows = 0;
  for (const auto& r : relations) {
    if (!(r.ring() == ring)) throw RingMismatch("degree_slice: relation over another ring");
    if (r.is_zero()) continue;
    const auto h = r.homogeneous_degree();
    if (!h) throw InvalidArgument("degree_slice: relation is not homogeneous");
    if (*h > n) continue;
    auto mult = monomial_basis(ring, n - *h);
    rows += mult.size();
    work.emplace_back(&r, std::move(mult));
  }
  if (rows > guard.max_rows)
    throw ScaleExceeded("scale exceeded: degree " + std::to_string(n) + " slice has " + std::to_string(rows) +
                        " relation rows (guard " + std::to_string(guard.max_rows) + ")");

  slice.relation_matrix = IntMatrix(0, slice.basis.size());
  for (const auto& [rel, mult] : work)
    for (const auto& m : mult) slice.relation_matrix.append_row(slice.coordinates(Polynomial::term(ring, m, 1) * *rel));
  return slice;
}

std::string GroupStructure::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " ⊕ ";
    out += part;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) append("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

std::string GroupStructure::to_latex() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " \\oplus ";
    out += part;
  };
  if (free_rank == 1) append("\\mathbb{Z}");
  if (free_rank > 1) append("\\mathbb{Z}^{" + std::to_string(free_rank) + "}");
  for (const auto& t : torsion) append("\\mathbb{Z}/" + t.get_str());
  return out.empty() ? "0" : out;
}

std::string GradedAbelianGroup::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ", ";
    out += degrees[i].to_string();
  }
  return out + "]";
}

GroupStructure cokernel_structure(std::size_t basis_size, const IntMatrix& relations) {
  const auto inv = invariant_factors(relations);
  GroupStructure g;
  g.free_rank = basis_size - inv.size();
  for (const auto& d : inv)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

GroupStructure graded_group(const Presentation& p, int n, const ResourceGuard& guard) {
  const auto rels = p.relation_polys();
  const DegreeSlice slice = degree_slice(p.ring(), rels, n, guard);
  return cokernel_structure(slice.basis.size(), slice.relation_matrix);
}

GradedAbelianGroup graded_groups(const Presentation& p, int max_degree, const ResourceGuard& guard) {
  GradedAbelianGroup g;
  for (int n = 0; n <= max_degree; ++n) g.degrees.push_back(graded_group(p, n, guard));
  return g;
}

bool torsion_check(const Presentation& p, int lo, int hi, const ResourceGuard& guard) {
  if (lo < 1) throw InvalidArgument("torsion_check: degree range must exclude 0");
  for (int n = lo; n <= hi; ++n)
    if (graded_group(p, n, guard).free_rank != 0) return false;
  return true;
}

}  // namespace chowgen
