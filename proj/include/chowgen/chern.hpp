#pragma once

// Chern-class calculus via the splitting principle.
//
// Series are truncated total Chern classes 1 + c1 + c2 + ... living in an
// arbitrary ambient GradedRingSpec. Root expansions (formal Chern roots a, b,
// c, ...) only appear in RootExpansion and are reduced back to elementary
// symmetric classes before anything is returned.

#include <string_view>

#include "chowgen/polyring.hpp"

namespace chowgen {

/// Z[c1, ..., c_rank] with c_i of weight i.
GradedRingSpec chern_ring(int rank, std::string_view prefix = "c");

class ChernSeries {
 public:
  /// `genuine` marks the total class of an actual rank-`rank` bundle, whose
  /// components vanish above the rank. Derived series (inverses, quotients)
  /// are not genuine.
  ChernSeries(int rank, Polynomial series, int trunc, bool genuine = true);

  /// 1 + v1 + ... + v_rank where v_i are the ring variables prefix+i.
  static ChernSeries generic(const GradedRingSpec& ring, int rank, int trunc, std::string_view prefix = "c");
  /// The total class of a trivial bundle.
  static ChernSeries unit(const GradedRingSpec& ring, int trunc, int rank = 1);

  int rank() const { return rank_; }
  int trunc() const { return trunc_; }
  bool genuine() const { return genuine_; }
  const Polynomial& series() const { return series_; }
  const GradedRingSpec& ring() const { return series_.ring(); }
  Polynomial component(int i) const { return graded_component(series_, i); }

  /// Same series with another truncation bound. Raising the bound is only
  /// possible for genuine series; throws TruncationTooSmall otherwise.
  ChernSeries with_trunc(int trunc) const;
  ChernSeries rebased(const GradedRingSpec& ring) const;

  friend bool operator==(const ChernSeries&, const ChernSeries&) = default;

 private:
  int rank_;
  Polynomial series_;
  int trunc_;
  bool genuine_;
};

/// Total Segre series 1 / c, truncated at c.trunc().
ChernSeries invert_series(const ChernSeries& c);
/// Product of total classes (Whitney sum); truncation is the smaller bound.
ChernSeries series_product(const ChernSeries& a, const ChernSeries& b);
/// a / b as a truncated series.
ChernSeries series_quotient(const ChernSeries& a, const ChernSeries& b);
/// c(E*): degree-i component negated for odd i.
ChernSeries dual_chern(const ChernSeries& c);
/// c(E (x) T) where T is a line bundle with first Chern class t.
ChernSeries tensor_line(const ChernSeries& c, int rank, const Polynomial& t);

/// Total Chern class of Sym^d of a rank-2 or rank-3 bundle, in chern_ring(rank).
/// d = 0 gives the unit series.
ChernSeries sym_power_chern(int rank, int d, int trunc);

/// Polynomial in formal Chern roots; ring is root_ring(num_roots).
struct RootExpansion {
  int num_roots;
  Polynomial expression;
};

/// Z[a, b, c, ...] with every root of weight 1.
GradedRingSpec root_ring(int num_roots);
/// Express a symmetric root polynomial in c_i = e_i(roots), over chern_ring(num_roots).
/// Throws NotSymmetric naming a violating transposition.
Polynomial symmetric_reduce(const RootExpansion& expr);
/// Inverse of symmetric_reduce: substitute c_i -> e_i(roots).
RootExpansion expand_in_roots(const Polynomial& p, int num_roots);

/// [B] = c_q(Q) for a sub-bundle B with quotient Q.
Polynomial thom_porteous_affine(const ChernSeries& q);
/// [P(B)] = c_q(c(Q) / c(O(-1))) where h is the class of O(1).
Polynomial thom_porteous_projective(const ChernSeries& q, int rank, const Polynomial& h);

/// Push a class sum_k zeta^k * b_k forward along P(F) -> base, using
/// zeta^k -> s_{k-f+1}(F) with s_j the degree-j part of 1/c(F).
Polynomial projective_pushforward(const Polynomial& p, const Polynomial& zeta, const ChernSeries& f);

}  // namespace chowgen
