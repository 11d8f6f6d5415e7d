#include "chowgen/chern.hpp"

#include <algorithm>
#include <map>

#include "chowgen/error.hpp"

namespace chowgen {

GradedRingSpec chern_ring(int rank, std::string_view prefix) {
  if (rank < 0) throw InvalidArgument("chern_ring: negative rank");
  std::vector<Variable> vars;
  for (int i = 1; i <= rank; ++i) vars.push_back({std::string(prefix) + std::to_string(i), i});
  return GradedRingSpec(std::move(vars));
}

ChernSeries::ChernSeries(int rank, Polynomial series, int trunc, bool genuine)
    : rank_(rank), series_(std::move(series)), trunc_(trunc), genuine_(genuine) {
  if (rank_ < 1) throw InvalidArgument("ChernSeries: rank must be positive");
  if (trunc_ < 0) throw InvalidArgument("ChernSeries: negative truncation bound");
  if (graded_component(series_, 0) != Polynomial::one(series_.ring()))
    throw InvalidArgument("ChernSeries: constant term must be 1");
  if (series_.degree() > trunc_) throw InvalidArgument("ChernSeries: terms above the truncation bound");
  if (genuine_ && series_.degree() > rank_)
    throw InvalidArgument("ChernSeries: bundle series has classes above its rank");
}

ChernSeries ChernSeries::generic(const GradedRingSpec& ring, int rank, int trunc, std::string_view prefix) {
  Polynomial s = Polynomial::one(ring);
  for (int i = 1; i <= std::min(rank, trunc); ++i) {
    const std::string name = std::string(prefix) + std::to_string(i);
    const std::size_t idx = ring.require_index(name);
    if (ring.weight(idx) != i) throw InvalidArgument("ChernSeries::generic: '" + name + "' must have weight " + std::to_string(i));
    s += Polynomial::variable(ring, name);
  }
  return ChernSeries(rank, std::move(s), trunc);
}

ChernSeries ChernSeries::unit(const GradedRingSpec& ring, int trunc, int rank) {
  return ChernSeries(rank, Polynomial::one(ring), trunc);
}

ChernSeries ChernSeries::with_trunc(int trunc) const {
  if (trunc <= trunc_) return ChernSeries(rank_, truncate(series_, trunc), trunc, genuine_);
  if (!genuine_ && trunc_ < trunc)
    throw TruncationTooSmall("series known only up to degree " + std::to_string(trunc_) + ", degree " +
                             std::to_string(trunc) + " requested");
  return ChernSeries(rank_, series_, trunc, genuine_);
}

ChernSeries ChernSeries::rebased(const GradedRingSpec& ring) const {
  return ChernSeries(rank_, rebase(series_, ring), trunc_, genuine_);
}

ChernSeries invert_series(const ChernSeries& c) {
  const auto& ring = c.ring();
  std::vector<Polynomial> comp;
  for (int i = 0; i <= c.trunc(); ++i) comp.push_back(c.component(i));
  std::vector<Polynomial> inv{Polynomial::one(ring)};
  for (int k = 1; k <= c.trunc(); ++k) {
    Polynomial s(ring);
    for (int i = 1; i <= k; ++i)
      if (!comp[i].is_zero() && !inv[k - i].is_zero()) s -= comp[i] * inv[k - i];
    inv.push_back(std::move(s));
  }
  Polynomial total(ring);
  for (const auto& p : inv) total += p;
  return ChernSeries(c.rank(), std::move(total), c.trunc(), false);
}

ChernSeries series_product(const ChernSeries& a, const ChernSeries& b) {
  const int trunc = std::min(a.trunc(), b.trunc());
  return ChernSeries(a.rank() + b.rank(), poly_mul(a.series(), b.series(), trunc), trunc, a.genuine() && b.genuine());
}

ChernSeries series_quotient(const ChernSeries& a, const ChernSeries& b) {
  const int trunc = std::min(a.trunc(), b.trunc());
  const ChernSeries inv = invert_series(b.with_trunc(trunc));
  return ChernSeries(std::max(1, a.rank() - b.rank()), poly_mul(a.series(), inv.series(), trunc), trunc, false);
}

ChernSeries dual_chern(const ChernSeries& c) {
  Polynomial s(c.ring());
  for (const auto& [m, v] : c.series().terms()) s.add_term(m, m.degree(c.ring()) % 2 == 0 ? v : Integer(-v));
  return ChernSeries(c.rank(), std::move(s), c.trunc(), c.genuine());
}

namespace {

void require_line_class(const Polynomial& t, const char* op) {
  if (!t.is_zero() && t.homogeneous_degree() != 1)
    throw InvalidArgument(std::string(op) + ": line class must be homogeneous of degree 1");
}

}  // namespace

ChernSeries tensor_line(const ChernSeries& c, int rank, const Polynomial& t) {
  require_line_class(t, "tensor_line");
  c.series().check_ring(t, "tensor_line");
  if (!c.genuine()) throw InvalidArgument("tensor_line: needs a genuine bundle series");
  if (rank != c.rank()) throw InvalidArgument("tensor_line: rank does not match the series");
  // c_k(E (x) T) = sum_i C(rank - i, k - i) c_i t^(k - i)
  const int top = std::min(rank, c.trunc());
  std::vector<Polynomial> tpow{Polynomial::one(c.ring())};
  for (int i = 1; i <= top; ++i) tpow.push_back(tpow.back() * t);
  Polynomial s(c.ring());
  for (int i = 0; i <= top; ++i) {
    const Polynomial ci = c.component(i);
    if (ci.is_zero()) continue;
    for (int k = i; k <= top; ++k) s += ci * tpow[k - i] * binomial(rank - i, k - i);
  }
  return ChernSeries(rank, std::move(s), c.trunc());
}

GradedRingSpec root_ring(int num_roots) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  if (num_roots < 1 || num_roots > 8) throw InvalidArgument("root_ring: supports 1 to 8 roots");
  std::vector<Variable> vars;
  for (int i = 0; i < num_roots; ++i) vars.push_back({names[i], 1});
  return GradedRingSpec(std::move(vars));
}

namespace {

Polynomial elementary(const GradedRingSpec& roots, int k) {
  const int r = static_cast<int>(roots.size());
  Polynomial e(roots);
  std::vector<bool> pick(r, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Monomial m(roots.size());
    for (int i = 0; i < r; ++i) m[i] = pick[i] ? 1 : 0;
    e.add_term(m, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return e;
}

Polynomial swap_roots(const Polynomial& p, std::size_t i, std::size_t j) {
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    std::swap(s[i], s[j]);
    r.add_term(s, c);
  }
  return r;
}

/// Lazily computes products of elementary symmetric polynomials in the roots.
class ElementaryCache {
 public:
  explicit ElementaryCache(const GradedRingSpec& roots) : roots_(roots) {
    for (int k = 1; k <= static_cast<int>(roots.size()); ++k) e_.push_back(elementary(roots, k));
  }

  const Polynomial& product(const std::vector<unsigned>& mu) {
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;
    Polynomial p = Polynomial::one(roots_);
    for (std::size_t k = 0; k < mu.size(); ++k)
      if (mu[k] > 0) p = p * power(e_[k], mu[k]);
    return cache_.emplace(mu, std::move(p)).first->second;
  }

 private:
  GradedRingSpec roots_;
  std::vector<Polynomial> e_;
  std::map<std::vector<unsigned>, Polynomial> cache_;
};

}  // namespace

Polynomial symmetric_reduce(const RootExpansion& expr) {
  const int r = expr.num_roots;
  const GradedRingSpec roots = root_ring(r);
  if (!(expr.expression.ring() == roots)) throw RingMismatch("symmetric_reduce: expression is not over the root ring");
  for (int i = 0; i + 1 < r; ++i) {
    if (swap_roots(expr.expression, i, i + 1) != expr.expression)
      throw NotSymmetric("symmetric_reduce: expression is not symmetric under the transposition (" + roots.name(i) + " " +
                         roots.name(i + 1) + ")");
  }
  const GradedRingSpec target = chern_ring(r);
  ElementaryCache cache(roots);
  Polynomial rest = expr.expression;
  Polynomial out(target);
  while (!rest.is_zero()) {
    // Lex-largest term; its exponents form a partition for symmetric input.
    const auto& [lead, coeff] = *rest.terms().rbegin();
    std::vector<unsigned> mu(r);
    for (int k = 0; k < r; ++k) {
      const unsigned next = k + 1 < r ? lead[k + 1] : 0;
      if (lead[k] < next) throw InternalError("symmetric_reduce: leading exponent is not a partition");
      mu[k] = lead[k] - next;
    }
    const Integer c = coeff;
    out.add_term(Monomial(mu), c);
    rest -= cache.product(mu) * c;
  }
  return out;
}

RootExpansion expand_in_roots(const Polynomial& p, int num_roots) {
  if (!(p.ring() == chern_ring(num_roots))) throw RingMismatch("expand_in_roots: polynomial is not over chern_ring(r)");
  const GradedRingSpec roots = root_ring(num_roots);
  ElementaryCache cache(roots);
  Polynomial out(roots);
  for (const auto& [m, c] : p.terms()) out += cache.product(m.exponents()) * c;
  return {num_roots, std::move(out)};
}

ChernSeries sym_power_chern(int rank, int d, int trunc) {
  if (rank != 2 && rank != 3) throw InvalidArgument("sym_power_chern: rank must be 2 or 3, got " + std::to_string(rank));
  if (d < 0) throw InvalidArgument("sym_power_chern: negative symmetric power");
  if (trunc < 0) throw InvalidArgument("sym_power_chern: negative truncation bound");
  const GradedRingSpec target = chern_ring(rank);
  if (d == 0) return ChernSeries::unit(target, trunc);

  const GradedRingSpec roots = root_ring(rank);
  std::vector<Monomial> weights;
  if (rank == 2) {
    for (int i = 0; i <= d; ++i) weights.push_back(Monomial(std::vector<unsigned>{unsigned(i), unsigned(d - i)}));
  } else {
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j)
        weights.push_back(Monomial(std::vector<unsigned>{unsigned(i), unsigned(j), unsigned(d - i - j)}));
  }
  const int count = static_cast<int>(weights.size());
  const int top = std::min(trunc, count);

  Polynomial product = Polynomial::one(roots);
  for (const auto& w : weights) {
    Polynomial factor = Polynomial::one(roots);
    for (int v = 0; v < rank; ++v) {
      Monomial m(roots.size());
      m[v] = 1;
      factor.add_term(m, w[v]);
    }
    product = poly_mul(product, factor, top);
  }
  Polynomial series(target);
  for (int k = 0; k <= top; ++k) series += symmetric_reduce({rank, graded_component(product, k)});
  return ChernSeries(count, std::move(series), trunc);
}

Polynomial thom_porteous_affine(const ChernSeries& q) {
  if (q.trunc() < q.rank()) throw TruncationTooSmall("thom_porteous_affine: series truncated below its rank");
  return q.component(q.rank());
}

Polynomial thom_porteous_projective(const ChernSeries& q, int rank, const Polynomial& h) {
  require_line_class(h, "thom_porteous_projective");
  q.series().check_ring(h, "thom_porteous_projective");
  if (q.trunc() < rank) throw TruncationTooSmall("thom_porteous_projective: series truncated below the rank");
  // 1 / c(O(-1)) = 1 / (1 - h) = sum h^j
  Polynomial geometric(q.ring());
  Polynomial hp = Polynomial::one(q.ring());
  for (int j = 0; j <= rank; ++j) {
    geometric += hp;
    hp = hp * h;
  }
  return graded_component(poly_mul(q.series(), geometric, rank), rank);
}

Polynomial projective_pushforward(const Polynomial& p, const Polynomial& zeta, const ChernSeries& f) {
  p.check_ring(zeta, "projective_pushforward");
  p.check_ring(f.series(), "projective_pushforward");
  if (zeta.size() != 1 || zeta.terms().begin()->second != 1 || zeta.homogeneous_degree() != 1)
    throw InvalidArgument("projective_pushforward: zeta must be a single degree-1 variable");
  const Monomial& zm = zeta.terms().begin()->first;
  const std::size_t zi = static_cast<std::size_t>(std::find(zm.exponents().begin(), zm.exponents().end(), 1u) - zm.exponents().begin());
  if (f.series().involves(zi)) throw InvalidArgument("projective_pushforward: bundle classes may not involve zeta");

  const int rank = f.rank();
  int needed = 0;
  for (const auto& [m, c] : p.terms()) needed = std::max(needed, static_cast<int>(m[zi]) - rank + 1);
  const ChernSeries segre = invert_series(f.with_trunc(std::max(needed, 0)));
  std::vector<Polynomial> s;
  for (int j = 0; j <= needed; ++j) s.push_back(segre.component(j));

  Polynomial out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    const int j = static_cast<int>(m[zi]) - rank + 1;
    if (j < 0) continue;
    Monomial base = m;
    base[zi] = 0;
    out += Polynomial::term(p.ring(), base, c) * s[j];
  }
  return out;
}

}  // namespace chowgen
