#pragma once

// Generators of the Chow ideals supported on the tautological degeneracy
// loci: dependent e-tuples of vectors (I1 affine, J1 projective) and
// degenerate quadratic forms (I2 affine, J2 projective).

#include <vector>

#include "chowgen/chern.hpp"

namespace chowgen {

enum class IdealKind { I1, J1, I2, J2 };

const char* to_string(IdealKind kind);

struct IdealGenerator {
  int degree;
  Polynomial poly;
};

struct DegeneracyIdeal {
  IdealKind kind;
  int bundle_rank;
  GradedRingSpec ambient;
  /// Exactly bundle_rank entries; the i-th is homogeneous of degree i (or zero).
  std::vector<IdealGenerator> generators;

  std::vector<Polynomial> polys() const;
};

/// Degree 1..e components of 1 / c(E*).
DegeneracyIdeal ideal_I1(const ChernSeries& e);
/// Degree 1..e components of (1 + L)^e / c(E*).
DegeneracyIdeal ideal_J1(const ChernSeries& e, const Polynomial& line);
/// Degree 1..e components of c(E*) / c(E).
DegeneracyIdeal ideal_I2(const ChernSeries& e);
/// Degree 1..e components of c(E* (x) O(1)) / c(E).
DegeneracyIdeal ideal_J2(const ChernSeries& e, const Polynomial& line);

/// p(L) = sum_j c_j(F) L^(r - j), the relation of the projective bundle P(F).
Polynomial chern_relation(const ChernSeries& f, const Polynomial& line);

}  // namespace chowgen
