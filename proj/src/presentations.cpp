#include "chowgen/presentations.hpp"

#include <map>

#include "chowgen/chern.hpp"
#include "chowgen/error.hpp"
#include "chowgen/locusideals.hpp"

namespace chowgen {

const char* family_name(Family f) {
  switch (f) {
    case Family::O: return "orthogonal";
    case Family::SO_odd: return "special-orthogonal";
    case Family::GL2: return "gl2";
    case Family::SL2n: return "sl2n";
    case Family::HilbertEven: return "hilbert-even";
    case Family::HilbertOdd: return "hilbert-odd";
    case Family::HilbertRational: return "hilbert-rational";
  }
  return "?";
}

void validate(const GroupSpec& spec) {
  const int p = spec.parameter;
  auto fail = [&](const std::string& why) {
    throw InvalidArgument(std::string(family_name(spec.family)) + ": " + why + " (got " + std::to_string(p) + ")");
  };
  switch (spec.family) {
    case Family::O:
      if (p < 1) fail("k must be >= 1");
      break;
    case Family::SO_odd:
      if (p < 1 || p % 2 == 0) fail("n must be odd and >= 1");
      break;
    case Family::GL2:
      break;
    case Family::SL2n:
      if (p < 1) fail("n must be >= 1");
      break;
    case Family::HilbertEven:
      if (p < 2 || p % 2 != 0) fail("d must be even and >= 2");
      break;
    case Family::HilbertOdd:
      if (p < 1 || p % 2 == 0) fail("d must be odd and >= 1");
      break;
    case Family::HilbertRational:
      if (p < 1) fail("d must be >= 1");
      break;
  }
}

namespace {

std::string cname(int i) { return "c" + std::to_string(i); }

}  // namespace

Presentation present_orthogonal(int k) {
  validate({Family::O, k});
  const GradedRingSpec ring = chern_ring(k);
  std::vector<Relation> rels;
  for (int i = 1; i <= k; i += 2) rels.push_back({"2" + cname(i), Polynomial::variable(ring, cname(i)) * Integer(2)});
  return Presentation(ring, std::move(rels), "classifying space of O(" + std::to_string(k) + ")");
}

Presentation present_special_orthogonal_odd(int n) {
  validate({Family::SO_odd, n});
  const GradedRingSpec ring = chern_ring(n);
  std::vector<Relation> rels{{"c1", Polynomial::variable(ring, "c1")}};
  for (int i = 3; i <= n; i += 2) rels.push_back({"2" + cname(i), Polynomial::variable(ring, cname(i)) * Integer(2)});
  return Presentation(ring, std::move(rels), "classifying space of SO(" + std::to_string(n) + ")");
}

Presentation present_gl2() { return Presentation(chern_ring(2), {}, "classifying space of GL(2)"); }

Presentation present_sl2n(int n) {
  validate({Family::SL2n, n});
  const GradedRingSpec ring = chern_ring(2);
  return Presentation(ring, {{std::to_string(n) + "c1", Polynomial::variable(ring, "c1") * Integer(n)}},
                      "classifying space of SL(V," + std::to_string(n) + ") = det^-1(mu_" + std::to_string(n) + ")");
}

namespace {

GradedRingSpec hilbert_even_ring() { return GradedRingSpec({{"c1", 1}, {"c2", 2}, {"c3", 3}, {"L", 1}}); }

/// c(Sym^m S) for the rank-3 tautological bundle, with c(Sym^m S) = 1 for m < 1.
ChernSeries rank3_sym(int m, int trunc, const GradedRingSpec& ring) {
  if (m < 1) return ChernSeries::unit(ring, trunc);
  return sym_power_chern(3, m, trunc).rebased(ring);
}

}  // namespace

Presentation present_hilbert_even(int d, const HilbertEvenOptions& options) {
  validate({Family::HilbertEven, d});
  const int n = d / 2;
  const int top = d + 1;
  const GradedRingSpec ring = hilbert_even_ring();
  const Polynomial c1 = Polynomial::variable(ring, "c1");
  const Polynomial c3 = Polynomial::variable(ring, "c3");
  const Polynomial line = Polynomial::variable(ring, "L");

  const Polynomial twist = power(Polynomial::one(ring) + line, static_cast<unsigned>(d + 1), top);
  const ChernSeries numer = rank3_sym(n - 2, top, ring);
  const ChernSeries denom = rank3_sym(n, top, ring);
  Polynomial series = poly_mul(poly_mul(twist, numer.series(), top), invert_series(denom).series(), top);
  if (options.impose_c1_zero) series = substitute(series, ring.require_index("c1"), Polynomial(ring));

  std::vector<Relation> rels{{"c1", c1}, {"2c3", c3 * Integer(2)}};
  for (int i = 1; i <= top; ++i) rels.push_back({"alpha'" + std::to_string(i), graded_component(series, i)});

  if (options.with_chern_relation) {
    // c(F_d) = c(Sym^n S*) / c(Sym^(n-2) S*); the projective bundle is over (d+1) copies.
    const int r = (d + 1) * (d + 1);
    const ChernSeries fd = series_quotient(dual_chern(rank3_sym(n, r, ring)), dual_chern(rank3_sym(n - 2, r, ring)));
    const Polynomial total = power(fd.series(), static_cast<unsigned>(d + 1), r);
    rels.push_back({"p(L)", chern_relation(ChernSeries(r, total, r, false), line)});
  }

  std::string prov = "A*(" + std::to_string(d) + "), even degree: PGL(2) = SO(3) quotient, relation series (1+L)^" +
                     std::to_string(d + 1) + " c(Sym^" + std::to_string(n - 2) + " S) / c(Sym^" + std::to_string(n) + " S)";
  if (options.impose_c1_zero) prov += " with c1 = 0";
  return Presentation(ring, std::move(rels), std::move(prov));
}

Presentation present_hilbert_odd(int d) {
  validate({Family::HilbertOdd, d});
  const int n = (d + 1) / 2;
  const GradedRingSpec ring = chern_ring(2);
  const ChernSeries sym = sym_power_chern(2, d, d + 1);
  std::vector<Relation> rels{{std::to_string(n) + "c1", Polynomial::variable(ring, "c1") * Integer(n)}};
  for (int i = 1; i <= d + 1; ++i)
    rels.push_back({"c" + std::to_string(i) + "(Sym^" + std::to_string(d) + " S)", sym.component(i)});
  return Presentation(ring, std::move(rels),
                      "A*(" + std::to_string(d) + "), odd degree: SL(V," + std::to_string(n) +
                          ") quotient, Chern classes of Sym^" + std::to_string(d) + " S");
}

Presentation present_hilbert_rational(int d) {
  validate({Family::HilbertRational, d});
  const GradedRingSpec ring = chern_ring(2);
  const ChernSeries sym = sym_power_chern(2, d, d + 1);
  std::vector<Relation> rels;
  for (int i = 1; i <= d + 1; ++i)
    rels.push_back({"c" + std::to_string(i) + "(Sym^" + std::to_string(d) + " S)", sym.component(i)});
  return Presentation(ring, std::move(rels),
                      "GL(V)-equivariant ring of the non-degenerate locus, d = " + std::to_string(d) +
                          " (rationally A*(" + std::to_string(d) + "))");
}

Presentation present(const GroupSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::O: return present_orthogonal(spec.parameter);
    case Family::SO_odd: return present_special_orthogonal_odd(spec.parameter);
    case Family::GL2: return present_gl2();
    case Family::SL2n: return present_sl2n(spec.parameter);
    case Family::HilbertEven: return present_hilbert_even(spec.parameter);
    case Family::HilbertOdd: return present_hilbert_odd(spec.parameter);
    case Family::HilbertRational: return present_hilbert_rational(spec.parameter);
  }
  throw InvalidArgument("unknown family");
}

Presentation present_simplified(const GroupSpec& spec, const ResourceGuard& guard) {
  Presentation p = simplify(present(spec), guard);
  const auto li = p.ring().index_of("L");
  if (spec.family == Family::HilbertEven && spec.parameter == 2 && li && !p.ring().index_of("H")) {
    const GradedRingSpec renamed = p.ring().renamed(*li, "H");
    std::vector<Relation> rels;
    for (const auto& r : p.relations()) {
      Polynomial q(renamed);
      for (const auto& [m, c] : r.poly.terms()) q.add_term(m, c);
      rels.push_back({r.label, std::move(q)});
    }
    Presentation out(renamed, std::move(rels), p.provenance() + "; L = H");
    for (const auto& note : p.notes()) out.add_note(note);
    return out;
  }
  return p;
}

namespace {

/// Hermite forms of an ideal's degree slices, computed on demand.
class IdealSlices {
 public:
  IdealSlices(GradedRingSpec ring, const std::vector<Polynomial>& gens, const ResourceGuard& guard)
      : ring_(std::move(ring)), gens_(gens), guard_(guard) {}

  bool contains(const Polynomial& target) {
    if (target.is_zero()) return true;
    const auto deg = target.homogeneous_degree();
    if (!deg) throw InvalidArgument("ideal membership: target is not homogeneous");
    auto it = cache_.find(*deg);
    if (it == cache_.end()) {
      DegreeSlice slice = degree_slice(ring_, gens_, *deg, guard_);
      HermiteForm h = hermite_normal_form(slice.relation_matrix);
      it = cache_.emplace(*deg, std::make_pair(std::move(slice), std::move(h))).first;
    }
    return it->second.second.contains(it->second.first.coordinates(target));
  }

 private:
  GradedRingSpec ring_;
  const std::vector<Polynomial>& gens_;
  ResourceGuard guard_;
  std::map<int, std::pair<DegreeSlice, HermiteForm>> cache_;
};

GradedRingSpec common_ring(const Polynomial& target, const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) target.check_ring(g, "ideal membership");
  return target.ring();
}

}  // namespace

bool ideal_contains(const Polynomial& target, const std::vector<Polynomial>& gens, const ResourceGuard& guard) {
  IdealSlices slices(common_ring(target, gens), gens, guard);
  return slices.contains(target);
}

std::optional<std::vector<Polynomial>> membership_certificate(const Polynomial& target,
                                                              const std::vector<Polynomial>& gens,
                                                              const ResourceGuard& guard) {
  const GradedRingSpec ring = common_ring(target, gens);
  std::vector<Polynomial> mult(gens.size(), Polynomial(ring));
  if (target.is_zero()) return mult;
  const auto deg = target.homogeneous_degree();
  if (!deg) throw InvalidArgument("membership_certificate: target is not homogeneous");
  const DegreeSlice slice = degree_slice(ring, gens, *deg, guard);
  const HermiteForm h = hermite_normal_form(slice.relation_matrix, true);
  const auto x = h.solve(slice.coordinates(target));
  if (!x) return std::nullopt;
  // Rows of the slice follow degree_slice's order: generators in sequence,
  // multiplier monomials in basis order.
  std::size_t row = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero() || *gens[i].homogeneous_degree() > *deg) continue;
    for (const auto& m : monomial_basis(ring, *deg - *gens[i].homogeneous_degree())) mult[i].add_term(m, (*x)[row++]);
  }
  Polynomial check(ring);
  for (std::size_t i = 0; i < gens.size(); ++i) check += mult[i] * gens[i];
  if (check != target) throw InternalError("membership_certificate: certificate does not reproduce the target");
  return mult;
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const ResourceGuard& guard) {
  if (a.empty() && b.empty()) return true;
  const GradedRingSpec ring = a.empty() ? b.front().ring() : a.front().ring();
  for (const auto& p : a)
    if (!(p.ring() == ring)) throw RingMismatch("ideal_equal: generators over different rings");
  for (const auto& p : b)
    if (!(p.ring() == ring)) throw RingMismatch("ideal_equal: generators over different rings");
  IdealSlices sa(ring, a, guard), sb(ring, b, guard);
  for (const auto& p : a)
    if (!sb.contains(p)) return false;
  for (const auto& p : b)
    if (!sa.contains(p)) return false;
  return true;
}

HyperplaneRelation hyperplane_class(int d) {
  validate({Family::HilbertEven, d});
  const int n = d / 2;
  HyperplaneRelation h;
  h.modulus = d + 1;
  const Integer m = d + 1;
  h.resultant_degree = 2 * d;
  h.h_in_l = mod_floor(h.resultant_degree, m);
  h.l_in_h = n;
  if (h.h_in_l != mod_floor(-2, m)) throw InternalError("hyperplane_class: 2d is not -2 modulo d+1");
  if (mod_floor(Integer(n) * -2, m) != 1) throw InternalError("hyperplane_class: n * (-2) is not 1 modulo d+1");
  if (mod_floor(h.l_in_h * h.h_in_l, m) != 1) throw InternalError("hyperplane_class: L = nH is inconsistent");
  return h;
}

namespace {
constexpr long kMaxRootTerms = 200000;
}  // namespace

bool verify_cs_membership(int k, const ResourceGuard& guard) {
  if (k < 1) throw InvalidArgument("verify_cs_membership: k must be >= 1");
  const int r = 2 * k + 1;
  const int s = r * (r + 1) / 2;
  // The root product has up to C(s + r - 1, r - 1) terms before reduction.
  if (binomial(s + r - 1, r - 1) > kMaxRootTerms)
    throw ScaleExceeded("scale exceeded: c_" + std::to_string(s) + "(Sym^2 S*) for rank " + std::to_string(r) +
                        " has too many root monomials");
  const GradedRingSpec ring = chern_ring(r);
  if (monomial_basis(ring, s).size() > guard.max_basis)
    throw ScaleExceeded("scale exceeded: degree " + std::to_string(s) + " slice exceeds the basis guard");

  // Roots of Sym^2 S* are -(a_i + a_j), i <= j.
  const GradedRingSpec roots = root_ring(r);
  Polynomial top = Polynomial::constant(roots, s % 2 == 0 ? 1 : -1);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Monomial mi(roots.size()), mj(roots.size());
      mi[i] += 1;
      mj[j] += 1;
      top = top * (Polynomial::term(roots, mi, 1) + Polynomial::term(roots, mj, 1));
    }
  const Polynomial cs = symmetric_reduce({r, top});
  const DegeneracyIdeal beta = ideal_I2(ChernSeries::generic(ring, r, r));
  return ideal_contains(cs, beta.polys(), guard);
}

}  // namespace chowgen
