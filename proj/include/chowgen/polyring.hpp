#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients over a weighted-graded set of variables.

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chowgen/integer.hpp"

namespace chowgen {

struct Variable {
  std::string name;
  int weight = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered list of named, weighted variables. Cheap to copy; two specs compare
/// equal when their variable lists agree.
class GradedRingSpec {
 public:
  /// The ring Z with no generators.
  GradedRingSpec();
  explicit GradedRingSpec(std::vector<Variable> variables);

  std::size_t size() const { return vars_->size(); }
  bool empty() const { return vars_->empty(); }
  const std::vector<Variable>& variables() const { return *vars_; }
  const Variable& variable(std::size_t i) const { return (*vars_)[i]; }
  const std::string& name(std::size_t i) const { return (*vars_)[i].name; }
  int weight(std::size_t i) const { return (*vars_)[i].weight; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws InvalidArgument when the name is absent.
  std::size_t require_index(std::string_view name) const;

  GradedRingSpec without(std::size_t index) const;
  GradedRingSpec renamed(std::size_t index, std::string name) const;

  friend bool operator==(const GradedRingSpec& a, const GradedRingSpec& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<Variable>> vars_;
};

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  int degree(const GradedRingSpec& ring) const;
  bool is_one() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer>;

  Polynomial() = default;
  explicit Polynomial(GradedRingSpec ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const GradedRingSpec& ring, const Integer& c);
  static Polynomial one(const GradedRingSpec& ring) { return constant(ring, 1); }
  static Polynomial variable(const GradedRingSpec& ring, std::string_view name);
  static Polynomial term(const GradedRingSpec& ring, Monomial m, const Integer& c);

  const GradedRingSpec& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const;

  /// Largest weighted degree of a term; -1 for the zero polynomial.
  int degree() const;
  /// Lowest weighted degree of a term; -1 for the zero polynomial.
  int low_degree() const;
  /// Degree when every term has the same weighted degree; nullopt otherwise
  /// (including for zero).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  bool involves(std::size_t var) const;

  void add_term(const Monomial& m, const Integer& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Integer& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Throws RingMismatch naming `op` when other lives in a different ring.
  void check_ring(const Polynomial& other, const char* op) const;

 private:
  GradedRingSpec ring_;
  TermMap terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
/// Product; when trunc is given every term of weighted degree > trunc is dropped.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b, std::optional<int> trunc = std::nullopt);
Polynomial power(const Polynomial& p, unsigned k, std::optional<int> trunc = std::nullopt);
Polynomial graded_component(const Polynomial& p, int n);
/// Terms of weighted degree <= n.
Polynomial truncate(const Polynomial& p, int n);

/// Replace variable `var` by `value` (a polynomial over the same ring).
Polynomial substitute(const Polynomial& p, std::size_t var, const Polynomial& value);
/// Re-express p over `target`, matching variables by name. Throws
/// InvalidArgument when p uses a variable missing from target.
Polynomial rebase(const Polynomial& p, const GradedRingSpec& target);
Integer evaluate(const Polynomial& p, std::span<const Integer> values);
/// gcd of all coefficients (0 for the zero polynomial).
Integer content(const Polynomial& p);

/// Terms ordered by ascending weighted degree, lexicographically descending
/// (declared variable order) within a degree.
std::vector<std::pair<Monomial, Integer>> display_terms(const Polynomial& p);
/// Graded-lex comparison used for display: true when a sorts before b.
bool display_less(const GradedRingSpec& ring, const Monomial& a, const Monomial& b);

enum class RenderStyle {
  canonical,  ///< "11*c1^2 + 10*c2"
  compact,    ///< "11c1^2 + 10c2"
  latex,      ///< "11c_{1}^{2} + 10c_{2}"
};

std::string to_string(const Polynomial& p, RenderStyle style = RenderStyle::canonical);
std::string render_variable(const std::string& name, RenderStyle style);
/// Parses the canonical rendering (also accepts compact-free forms with '*').
Polynomial parse_polynomial(const GradedRingSpec& ring, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace chowgen
