#include "chowgen/polyring.hpp"

#include <algorithm>
#include <unordered_set>

#include "chowgen/error.hpp"

namespace chowgen {

namespace {

const std::shared_ptr<const std::vector<Variable>>& empty_vars() {
  static const auto vars = std::make_shared<const std::vector<Variable>>();
  return vars;
}

}  // namespace

GradedRingSpec::GradedRingSpec() : vars_(empty_vars()) {}

GradedRingSpec::GradedRingSpec(std::vector<Variable> variables) {
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (v.name.empty()) throw InvalidArgument("ring variable with empty name");
    if (v.weight < 1) throw InvalidArgument("ring variable '" + v.name + "' has weight < 1");
    if (!seen.insert(v.name).second) throw InvalidArgument("duplicate ring variable '" + v.name + "'");
  }
  vars_ = std::make_shared<const std::vector<Variable>>(std::move(variables));
}

std::optional<std::size_t> GradedRingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i].name == name) return i;
  return std::nullopt;
}

std::size_t GradedRingSpec::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw InvalidArgument("ring has no variable '" + std::string(name) + "'");
  return *idx;
}

GradedRingSpec GradedRingSpec::without(std::size_t index) const {
  auto vars = *vars_;
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(index));
  return GradedRingSpec(std::move(vars));
}

GradedRingSpec GradedRingSpec::renamed(std::size_t index, std::string name) const {
  auto vars = *vars_;
  vars[index].name = std::move(name);
  return GradedRingSpec(std::move(vars));
}

int Monomial::degree(const GradedRingSpec& ring) const {
  int d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += static_cast<int>(exps_[i]) * ring.weight(i);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  return r;
}

Polynomial Polynomial::constant(const GradedRingSpec& ring, const Integer& c) {
  Polynomial p(ring);
  p.add_term(Monomial(ring.size()), c);
  return p;
}

Polynomial Polynomial::variable(const GradedRingSpec& ring, std::string_view name) {
  Monomial m(ring.size());
  m[ring.require_index(name)] = 1;
  return term(ring, std::move(m), 1);
}

Polynomial Polynomial::term(const GradedRingSpec& ring, Monomial m, const Integer& c) {
  if (m.size() != ring.size()) throw InvalidArgument("monomial length does not match ring");
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Polynomial::constant_term() const { return coefficient(Monomial(ring_.size())); }

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(ring_));
  return d;
}

int Polynomial::low_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree(ring_);
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree(ring_));
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree(ring_);
  for (const auto& [m, c] : terms_)
    if (m.degree(ring_) != d) return std::nullopt;
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& other, const char* op) const {
  if (!(ring_ == other.ring_))
    throw RingMismatch(std::string(op) + ": operands belong to incompatible ambient rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other, "subtract");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, std::optional<int> trunc) {
  a.check_ring(b, "multiply");
  if (trunc && *trunc < 0) throw InvalidArgument("multiply: negative truncation bound");
  const auto& ring = a.ring();
  Polynomial r(ring);
  struct Factor {
    const Monomial* mono;
    const Integer* coeff;
    int degree;
  };
  std::vector<Factor> bdeg;
  bdeg.reserve(b.terms().size());
  for (const auto& [m, c] : b.terms()) bdeg.push_back({&m, &c, m.degree(ring)});
  Integer prod;
  for (const auto& [ma, ca] : a.terms()) {
    const int da = ma.degree(ring);
    if (trunc && da > *trunc) continue;
    for (const auto& f : bdeg) {
      if (trunc && da + f.degree > *trunc) continue;
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), f.coeff->get_mpz_t());
      r.add_term(ma * *f.mono, prod);
    }
  }
  return r;
}

Polynomial power(const Polynomial& p, unsigned k, std::optional<int> trunc) {
  Polynomial result = Polynomial::one(p.ring());
  if (trunc) result = truncate(result, *trunc);
  Polynomial base = trunc ? truncate(p, *trunc) : p;
  while (k > 0) {
    if (k & 1u) result = poly_mul(result, base, trunc);
    k >>= 1u;
    if (k > 0) base = poly_mul(base, base, trunc);
  }
  return result;
}

Polynomial graded_component(const Polynomial& p, int n) {
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms())
    if (m.degree(p.ring()) == n) r.add_term(m, c);
  return r;
}

Polynomial truncate(const Polynomial& p, int n) {
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms())
    if (m.degree(p.ring()) <= n) r.add_term(m, c);
  return r;
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Polynomial& value) {
  if (!(p.ring() == value.ring())) throw RingMismatch("substitute: value lives in a different ring");
  std::vector<Polynomial> powers{Polynomial::one(p.ring())};
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[var] = 0;
    r += Polynomial::term(p.ring(), rest, c) * powers[e];
  }
  return r;
}

Polynomial rebase(const Polynomial& p, const GradedRingSpec& target) {
  const auto& src = p.ring();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    map[i] = target.index_of(src.name(i));
    if (map[i] && target.weight(*map[i]) != src.weight(i))
      throw InvalidArgument("rebase: variable '" + src.name(i) + "' changes weight");
  }
  Polynomial r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial out(target.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) throw InvalidArgument("rebase: target ring lacks variable '" + src.name(i) + "'");
      out[*map[i]] = m[i];
    }
    r.add_term(out, c);
  }
  return r;
}

Integer evaluate(const Polynomial& p, std::span<const Integer> values) {
  if (values.size() != p.ring().size()) throw InvalidArgument("evaluate: wrong number of values");
  Integer total = 0;
  Integer term, pw;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), values[i].get_mpz_t(), m[i]);
      term *= pw;
    }
    total += term;
  }
  return total;
}

Integer content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

bool display_less(const GradedRingSpec& ring, const Monomial& a, const Monomial& b) {
  const int da = a.degree(ring), db = b.degree(ring);
  if (da != db) return da < db;
  return a > b;
}

std::vector<std::pair<Monomial, Integer>> display_terms(const Polynomial& p) {
  std::vector<std::pair<Monomial, Integer>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(),
            [&](const auto& x, const auto& y) { return display_less(p.ring(), x.first, y.first); });
  return out;
}

}  // namespace chowgen
