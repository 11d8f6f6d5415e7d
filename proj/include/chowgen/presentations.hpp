#pragma once

// Named presentations: classifying-space rings of O(k), SO(2k+1), GL(2),
// SL(V,n), and the Chow rings A*(d) of the space of rational normal curves.

#include <optional>
#include <string>
#include <vector>

#include "chowgen/grstruct.hpp"
#include "chowgen/presentation.hpp"

namespace chowgen {

enum class Family { O, SO_odd, GL2, SL2n, HilbertEven, HilbertOdd, HilbertRational };

struct GroupSpec {
  Family family;
  int parameter = 0;  ///< k for O, n = 2k+1 for SO_odd, n for SL2n, d for Hilbert families
};

const char* family_name(Family f);
/// Throws InvalidArgument naming the violated constraint.
void validate(const GroupSpec& spec);

Presentation present_orthogonal(int k);
Presentation present_special_orthogonal_odd(int n);
Presentation present_gl2();
Presentation present_sl2n(int n);

struct HilbertEvenOptions {
  /// Substitute c1 = 0 inside the series relations (c1 is still listed).
  bool impose_c1_zero = false;
  /// Append the projective-bundle relation p(L) of degree (d+1)^2.
  bool with_chern_relation = false;
};

/// Z[c1,c2,c3,L] / (c1, 2c3, degree 1..d+1 parts of
/// (1+L)^(d+1) c(Sym^(n-2) S) / c(Sym^n S)), d = 2n.
Presentation present_hilbert_even(int d, const HilbertEvenOptions& options = {});
/// Z[c1,c2] / (n c1, c_1..c_(d+1) of Sym^d S), d = 2n - 1.
Presentation present_hilbert_odd(int d);
/// Z[c1,c2] / (c_1..c_(d+1) of Sym^d S).
Presentation present_hilbert_rational(int d);

/// Hilbert parameter dispatches on parity.
Presentation present(const GroupSpec& spec);

/// Unit-coefficient generator elimination and degree-slice lattice reduction,
/// repeated to a fixed point. The quotient ring is unchanged.
Presentation simplify(const Presentation& p, const ResourceGuard& guard = {});
/// present() followed by simplify(); for d = 2 the tautological class L is
/// renamed H, since L = H there.
Presentation present_simplified(const GroupSpec& spec, const ResourceGuard& guard = {});

/// Is `target` (homogeneous) in the ideal generated by `gens`?
bool ideal_contains(const Polynomial& target, const std::vector<Polynomial>& gens, const ResourceGuard& guard = {});
/// Multipliers m_i with sum m_i * gens_i = target, or nullopt when target is
/// not in the ideal.
std::optional<std::vector<Polynomial>> membership_certificate(const Polynomial& target,
                                                              const std::vector<Polynomial>& gens,
                                                              const ResourceGuard& guard = {});
/// Exact equality of homogeneous ideals over the integers.
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const ResourceGuard& guard = {});

/// Degree-1 relation between the hyperplane class H and the tautological
/// class L in A^1(d) = Z/(d+1), d = 2n.
struct HyperplaneRelation {
  int modulus = 0;       ///< d + 1
  Integer h_in_l;        ///< H = h_in_l * L, reduced into [0, d+1)
  Integer l_in_h;        ///< L = l_in_h * H, i.e. n
  Integer resultant_degree;  ///< 2d, the raw coefficient of H = 2d L
};

HyperplaneRelation hyperplane_class(int d);

/// Is c_top(Sym^2 S*) in the ideal (beta_1, ..., beta_r), r = 2k + 1?
bool verify_cs_membership(int k, const ResourceGuard& guard = {});

}  // namespace chowgen
