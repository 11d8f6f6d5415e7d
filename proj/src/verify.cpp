#include "chowgen/verify.hpp"

#include <algorithm>

#include "chowgen/chern.hpp"
#include "chowgen/error.hpp"
#include "chowgen/locusideals.hpp"
#include "chowgen/presentations.hpp"

namespace chowgen {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"beta-ideal", "sym-closed-forms", "torsion",     "cs-membership",
                                              "pushforward", "proof-chain",     "hyperplane", "a1", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

namespace {

CheckResult result(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

std::string mismatch(const Polynomial& got, const Polynomial& want) {
  return "got " + to_string(got) + ", expected " + to_string(want);
}

}  // namespace

CheckResult check_sym_closed_form(int d) {
  const std::string name = "sym-closed-form d=" + std::to_string(d);
  const ChernSeries s = sym_power_chern(2, d, 2);
  const GradedRingSpec& ring = s.ring();
  const Polynomial c1 = Polynomial::variable(ring, "c1");
  const Polynomial c2 = Polynomial::variable(ring, "c2");
  const Integer D = d;
  const Polynomial want1 = c1 * Integer(D * (D + 1) / 2);
  const Polynomial want2 =
      c1 * c1 * Integer(D * (D - 1) * (D + 1) * (3 * D + 2) / 24) + c2 * Integer(D * (D + 1) * (D + 2) / 6);
  if (s.component(1) != want1) return result(name, false, "c1: " + mismatch(s.component(1), want1));
  if (s.component(2) != want2) return result(name, false, "c2: " + mismatch(s.component(2), want2));
  return result(name, true, to_string(s.series()));
}

CheckResult check_beta_ideal(int k, const ResourceGuard& guard) {
  const std::string name = "beta-ideal k=" + std::to_string(k);
  const GradedRingSpec ring = chern_ring(k);
  const auto beta = ideal_I2(ChernSeries::generic(ring, k, k)).polys();
  std::vector<Polynomial> odd;
  for (int i = 1; i <= k; i += 2) odd.push_back(Polynomial::variable(ring, "c" + std::to_string(i)) * Integer(2));
  return result(name, ideal_equal(beta, odd, guard));
}

CheckResult check_segre_identity(int f) {
  const std::string name = "segre-pushforward f=g=" + std::to_string(f);
  if (f < 1) throw InvalidArgument("pushforward: f must be >= 1");
  std::vector<Variable> vars;
  for (int i = 1; i <= f; ++i) vars.push_back({"c" + std::to_string(i), i});
  for (int i = 1; i <= f; ++i) vars.push_back({"d" + std::to_string(i), i});
  vars.push_back({"z", 1});
  const GradedRingSpec ring(std::move(vars));
  const Polynomial zeta = Polynomial::variable(ring, "z");
  const ChernSeries F = ChernSeries::generic(ring, f, f, "c");
  const ChernSeries G = ChernSeries::generic(ring, f, f, "d");
  const Polynomial top = tensor_line(G, f, zeta).component(f);
  const ChernSeries gamma = series_quotient(G, F);
  for (int i = 1; i <= f; ++i) {
    const Polynomial got = projective_pushforward(power(zeta, static_cast<unsigned>(i - 1)) * top, zeta, F);
    if (got != gamma.component(i)) return result(name, false, "i=" + std::to_string(i) + ": " + mismatch(got, gamma.component(i)));
  }
  return result(name, true);
}

CheckResult check_proof_chain(int e) {
  const std::string name = "proof-chain e=" + std::to_string(e);
  if (e < 1) throw InvalidArgument("proof-chain: e must be >= 1");
  std::vector<Variable> vars;
  for (int i = 1; i <= e; ++i) vars.push_back({"c" + std::to_string(i), i});
  vars.push_back({"L", 1});
  vars.push_back({"z", 1});
  const GradedRingSpec ring(std::move(vars));
  const Polynomial zeta = Polynomial::variable(ring, "z");
  const Polynomial line = Polynomial::variable(ring, "L");
  const ChernSeries E = ChernSeries::generic(ring, e, e);
  const ChernSeries Edual = dual_chern(E);
  const auto alpha = ideal_I1(E).polys();
  const auto alpha_p = ideal_J1(E, line).polys();
  for (int i = 1; i <= e; ++i) {
    const Polynomial a = projective_pushforward(power(zeta, static_cast<unsigned>(e - 1 + i)), zeta, Edual);
    if (a != alpha[i - 1]) return result(name, false, "I1 i=" + std::to_string(i) + ": " + mismatch(a, alpha[i - 1]));
    const Polynomial b = projective_pushforward(
        power(zeta, static_cast<unsigned>(i - 1)) * power(line + zeta, static_cast<unsigned>(e)), zeta, Edual);
    if (b != alpha_p[i - 1]) return result(name, false, "J1 i=" + std::to_string(i) + ": " + mismatch(b, alpha_p[i - 1]));
  }
  // Thom-Porteous classes of the sub-bundle B with c(Q) = (1 + zeta)^e.
  const ChernSeries q(e, power(Polynomial::one(ring) + zeta, static_cast<unsigned>(e)), e);
  const Polynomial zeta_e = power(zeta, static_cast<unsigned>(e));
  if (thom_porteous_affine(q) != zeta_e) return result(name, false, "[B]: " + mismatch(thom_porteous_affine(q), zeta_e));
  const Polynomial pb = power(line + zeta, static_cast<unsigned>(e));
  if (thom_porteous_projective(q, e, line) != pb)
    return result(name, false, "[P(B)]: " + mismatch(thom_porteous_projective(q, e, line), pb));
  return result(name, true);
}

CheckResult check_a1(int d, const ResourceGuard& guard) {
  const std::string name = "A1 d=" + std::to_string(d);
  if (d < 1) throw InvalidArgument("a1: d must be >= 1");
  const Presentation p = present({d % 2 == 0 ? Family::HilbertEven : Family::HilbertOdd, d});
  const GroupStructure g = graded_group(p, 1, guard);
  const int order = d % 2 == 0 ? d + 1 : (d + 1) / 2;
  GroupStructure want;
  if (order > 1) want.torsion.push_back(order);
  return result(name, g == want, "A^1 = " + g.to_string() + ", expected " + want.to_string());
}

CheckResult check_torsion(int d, int lo, int hi, const ResourceGuard& guard) {
  const std::string name = "torsion d=" + std::to_string(d) + " degrees " + std::to_string(lo) + ".." + std::to_string(hi);
  if (d < 1) throw InvalidArgument("torsion: d must be >= 1");
  if (lo < 1 || hi < lo) throw InvalidArgument("torsion: degree range must satisfy 1 <= lo <= hi");
  const Presentation integral = present({d % 2 == 0 ? Family::HilbertEven : Family::HilbertOdd, d});
  const Presentation rational = present_hilbert_rational(d);
  const bool a = torsion_check(integral, lo, hi, guard);
  const bool b = torsion_check(rational, lo, hi, guard);
  return result(name, a && b,
                std::string("integral ") + (a ? "torsion" : "has free part") + ", rational " +
                    (b ? "torsion" : "has free part"));
}

CheckResult check_hyperplane(int d) {
  const std::string name = "hyperplane d=" + std::to_string(d);
  const HyperplaneRelation h = hyperplane_class(d);
  const Integer m = h.modulus;
  const bool ok = h.h_in_l == mod_floor(-2, m) && mod_floor(h.l_in_h * -2, m) == 1 && h.l_in_h == d / 2;
  return result(name, ok,
                "H = " + h.h_in_l.get_str() + "L, L = " + h.l_in_h.get_str() + "H mod " + std::to_string(h.modulus));
}

CheckResult check_cs_membership(int k, const ResourceGuard& guard) {
  return result("cs-membership k=" + std::to_string(k), verify_cs_membership(k, guard));
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& o, const ResourceGuard& guard) {
  std::vector<CheckResult> out;
  if (suite == "beta-ideal") {
    if (o.k < 1) throw InvalidArgument("beta-ideal: k must be >= 1");
    for (int k = 1; k <= o.k; ++k) out.push_back(check_beta_ideal(k, guard));
  } else if (suite == "sym-closed-forms") {
    if (o.d_max < 1) throw InvalidArgument("sym-closed-forms: d-max must be >= 1");
    for (int d = 1; d <= o.d_max; ++d) out.push_back(check_sym_closed_form(d));
  } else if (suite == "torsion") {
    out.push_back(check_torsion(o.d, o.lo, o.hi, guard));
  } else if (suite == "cs-membership") {
    out.push_back(check_cs_membership(o.k, guard));
  } else if (suite == "pushforward") {
    out.push_back(check_segre_identity(o.f));
  } else if (suite == "proof-chain") {
    out.push_back(check_proof_chain(o.e));
  } else if (suite == "hyperplane") {
    out.push_back(check_hyperplane(o.d));
  } else if (suite == "a1") {
    out.push_back(check_a1(o.d, guard));
  } else if (suite == "all") {
    for (int k = 1; k <= 6; ++k) out.push_back(check_beta_ideal(k, guard));
    for (int d = 1; d <= 12; ++d) out.push_back(check_sym_closed_form(d));
    for (int d = 1; d <= 6; ++d) out.push_back(check_torsion(d, 1, 6, guard));
    out.push_back(check_cs_membership(1, guard));
    for (int f : {2, 3}) out.push_back(check_segre_identity(f));
    for (int e : {2, 3}) out.push_back(check_proof_chain(e));
    for (int d : {2, 4, 6, 8, 10}) out.push_back(check_hyperplane(d));
    for (int d = 1; d <= 9; ++d) out.push_back(check_a1(d, guard));
  } else {
    throw InvalidArgument("unknown verify suite '" + suite + "'");
  }
  return out;
}

}  // namespace chowgen
