#pragma once

// Graded abelian group structure of a presentation's quotient, degree by
// degree, via exact integer normal forms.

#include <span>
#include <string>
#include <vector>

#include "chowgen/matrix.hpp"
#include "chowgen/presentation.hpp"

namespace chowgen {

/// Upper bounds on a single degree slice. Exceeding either is a ScaleExceeded
/// error, never an approximation.
struct ResourceGuard {
  std::size_t max_basis = 5000;
  std::size_t max_rows = 50000;

  /// Parses "<rows>x<cols>" (rows = relation rows, cols = basis monomials).
  static ResourceGuard parse(std::string_view text);
  /// Defaults, overridden by CHOWGEN_GUARD when set.
  static ResourceGuard from_env();
};

/// All monomials of weighted degree n, lexicographically descending.
std::vector<Monomial> monomial_basis(const GradedRingSpec& ring, int n);

struct DegreeSlice {
  int degree = 0;
  std::vector<Monomial> basis;
  /// Rows are coordinates of m * r for each relation r and monomial m with
  /// deg m + deg r = degree.
  IntMatrix relation_matrix;

  std::vector<Integer> coordinates(const Polynomial& p) const;
  Polynomial polynomial(const GradedRingSpec& ring, std::span<const Integer> coords) const;
};

/// Degree-n slice of the ideal generated by `relations` (all homogeneous).
DegreeSlice degree_slice(const GradedRingSpec& ring, std::span<const Polynomial> relations, int n,
                         const ResourceGuard& guard = {});

/// One graded piece: Z^free_rank (+) Z/t1 (+) ... with t1 | t2 | ... and all ti > 1.
struct GroupStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "Z", "Z/3", "Z ⊕ Z/2", "Z^2", "0".
  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Per-degree structure of A^0, A^1, ..., A^max.
struct GradedAbelianGroup {
  std::vector<GroupStructure> degrees;

  std::string to_string() const;  ///< "[Z, Z/3, Z/3, 0]"
};

GroupStructure cokernel_structure(std::size_t basis_size, const IntMatrix& relations);
GroupStructure graded_group(const Presentation& p, int n, const ResourceGuard& guard = {});
GradedAbelianGroup graded_groups(const Presentation& p, int max_degree, const ResourceGuard& guard = {});
/// True iff every requested degree in [lo, hi] has free rank 0.
bool torsion_check(const Presentation& p, int lo, int hi, const ResourceGuard& guard = {});

}  // namespace chowgen
