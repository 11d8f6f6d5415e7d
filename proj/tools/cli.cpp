#include "cli.hpp"

#include <optional>

#include <CLI11.hpp>

#include "chowgen/chern.hpp"
#include "chowgen/error.hpp"
#include "chowgen/serialize.hpp"
#include "chowgen/verify.hpp"

namespace chowgen::cli {

namespace {

struct Options {
  std::string family;
  std::optional<int> d, n, k;
  bool simplify = false;
  int max_degree = 6;
  std::optional<int> trunc;
  std::string format = "text";
  std::string guard;
  bool c1_zero = false;
  bool with_p = false;

  // chern
  int rank = 2;
  int sym = 1;
  bool dual = false;
  bool twist = false;
  bool invert = false;

  // verify
  std::string suite;
  std::optional<int> d_max, f, e;
  std::string degrees;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The family plus its single numeric parameter, checked before any work.
GroupSpec resolve_spec(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  auto only = [&](const char* flag, const std::optional<int>& value) -> int {
    const int given = o.d.has_value() + o.n.has_value() + o.k.has_value();
    if (!value || given != 1) throw UsageError("family " + o.family + " takes exactly one parameter: " + flag);
    return *value;
  };
  GroupSpec spec{};
  if (o.family == "hilbert") {
    const int d = only("--d", o.d);
    spec = {d % 2 == 0 ? Family::HilbertEven : Family::HilbertOdd, d};
  } else if (o.family == "gl2") {
    if (o.d || o.n || o.k) throw UsageError("family gl2 takes no parameter");
    spec = {Family::GL2, 0};
  } else if (const auto f = family_from_name(o.family)) {
    switch (*f) {
      case Family::O: spec = {*f, only("--k", o.k)}; break;
      case Family::SO_odd:
      case Family::SL2n: spec = {*f, only("--n", o.n)}; break;
      default: spec = {*f, only("--d", o.d)}; break;
    }
  } else {
    throw UsageError("unknown family '" + o.family +
                     "' (expected orthogonal, special-orthogonal, gl2, sl2n, hilbert, hilbert-even, hilbert-odd, "
                     "hilbert-rational)");
  }
  validate(spec);
  if ((o.c1_zero || o.with_p) && spec.family != Family::HilbertEven)
    throw UsageError("--c1-zero and --with-chern-relation apply to even-degree Hilbert families only");
  return spec;
}

Presentation build(const Options& o, const GroupSpec& spec, const ResourceGuard& guard) {
  Presentation p = spec.family == Family::HilbertEven
                       ? present_hilbert_even(spec.parameter, {o.c1_zero, o.with_p})
                       : present(spec);
  if (!o.simplify) return p;
  if (spec.family == Family::HilbertEven && !o.c1_zero && !o.with_p) return present_simplified(spec, guard);
  return simplify(p, guard);
}

void cmd_present(const Options& o, const ResourceGuard& guard, std::ostream& out) {
  const GroupSpec spec = resolve_spec(o);
  const Presentation p = build(o, spec, guard);
  if (o.format == "json")
    out << to_json(PresentationDocument{p, spec, o.simplify}).dump(2) << "\n";
  else
    out << render_presentation(p, o.format == "latex" ? RenderStyle::latex : RenderStyle::compact) << "\n";
}

void cmd_graded(const Options& o, const ResourceGuard& guard, std::ostream& out) {
  const GroupSpec spec = resolve_spec(o);
  if (o.max_degree < 0) throw UsageError("--max-degree must be >= 0");
  const GradedAbelianGroup g = graded_groups(build(o, spec, guard), o.max_degree, guard);
  if (o.format == "json") {
    out << to_json(g).dump(2) << "\n";
  } else if (o.format == "latex") {
    out << "[";
    for (std::size_t i = 0; i < g.degrees.size(); ++i) out << (i ? ", " : "") << g.degrees[i].to_latex();
    out << "]\n";
  } else {
    out << g.to_string() << "\n";
  }
}

void cmd_chern(const Options& o, std::ostream& out) {
  if (o.rank < 1 || o.rank > 3) throw UsageError("--rank must be 1, 2 or 3");
  if (o.sym < 0) throw UsageError("--sym must be >= 0");
  if (o.trunc && *o.trunc <= 0) throw UsageError("--trunc must be >= 1");

  int bundle_rank = 1;
  if (o.rank > 1) {
    Integer r = binomial(o.rank + o.sym - 1, o.sym);
    bundle_rank = static_cast<int>(r.get_si());
  }
  const int trunc = o.trunc.value_or(bundle_rank);

  ChernSeries s = [&] {
    if (o.rank == 1) {
      const GradedRingSpec ring = chern_ring(1);
      return ChernSeries(1, Polynomial::one(ring) + Polynomial::variable(ring, "c1") * Integer(o.sym), trunc);
    }
    return sym_power_chern(o.rank, o.sym, trunc);
  }();
  if (o.dual) s = dual_chern(s);
  if (o.twist) {
    std::vector<Variable> vars = s.ring().variables();
    vars.push_back({"t", 1});
    const GradedRingSpec ring(std::move(vars));
    s = tensor_line(s.rebased(ring), bundle_rank, Polynomial::variable(ring, "t"));
  }
  if (o.invert) s = invert_series(s);

  if (o.format == "json")
    out << to_json(s).dump(2) << "\n";
  else
    out << to_string(s.series(), o.format == "latex" ? RenderStyle::latex : RenderStyle::canonical) << "\n";
}

int cmd_verify(const Options& o, const ResourceGuard& guard, std::ostream& out) {
  if (!is_suite(o.suite)) throw UsageError("unknown verify suite '" + o.suite + "'");
  VerifyOptions v;
  if (o.k) v.k = *o.k;
  if (o.d_max) v.d_max = *o.d_max;
  if (o.d) v.d = *o.d;
  if (o.f) v.f = *o.f;
  if (o.e) v.e = *o.e;
  if (o.suite == "cs-membership" && !o.k) v.k = 1;
  if (!o.degrees.empty()) {
    const auto dots = o.degrees.find("..");
    try {
      if (dots == std::string::npos) throw std::invalid_argument("no ..");
      std::size_t used = 0;
      v.lo = std::stoi(o.degrees.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument("trailing");
      const std::string rest = o.degrees.substr(dots + 2);
      v.hi = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw UsageError("--degrees must look like a..b, got '" + o.degrees + "'");
    }
  }

  const auto results = run_suite(o.suite, v, guard);
  const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
  if (o.format == "json") {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : results) checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    nlohmann::ordered_json j{{"schema_version", kSchemaVersion}, {"suite", o.suite}, {"pass", all}, {"checks", checks}};
    out << j.dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.pass;
      out << (r.pass ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    out << "verify " << o.suite << ": " << passed << "/" << results.size() << " checks passed\n";
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Integral Chow ring presentations and their graded groups", "chowgen"};
  app.require_subcommand(1);

  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "orthogonal, special-orthogonal, gl2, sl2n, hilbert, hilbert-even, "
                                          "hilbert-odd, hilbert-rational");
    sub->add_option("--d", o.d, "degree of the rational normal curves");
    sub->add_option("--n", o.n, "n for special-orthogonal and sl2n");
    sub->add_option("--k", o.k, "k for orthogonal");
    sub->add_flag("--simplify", o.simplify, "apply unit elimination and lattice reduction");
    sub->add_flag("--c1-zero", o.c1_zero, "even Hilbert family: substitute c1 = 0 in the series relations");
    sub->add_flag("--with-chern-relation", o.with_p, "even Hilbert family: keep the projective-bundle relation");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--guard", o.guard, "resource guard <rows>x<cols>, overrides CHOWGEN_GUARD");
  };

  CLI::App* present_cmd = app.add_subcommand("present", "print a presentation");
  add_target(present_cmd);
  add_common(present_cmd);

  CLI::App* graded_cmd = app.add_subcommand("graded", "graded abelian groups of a presentation");
  add_target(graded_cmd);
  add_common(graded_cmd);
  graded_cmd->add_option("--max-degree", o.max_degree);

  CLI::App* chern_cmd = app.add_subcommand("chern", "total Chern class of a derived bundle");
  chern_cmd->add_option("--rank", o.rank, "rank of the tautological bundle (1, 2 or 3)");
  chern_cmd->add_option("--sym", o.sym, "symmetric power");
  chern_cmd->add_flag("--dual", o.dual);
  chern_cmd->add_flag("--twist", o.twist, "tensor with a line bundle of class t");
  chern_cmd->add_flag("--invert", o.invert, "print the Segre series instead");
  chern_cmd->add_option("--trunc", o.trunc, "truncation degree (default: the bundle rank)");
  add_common(chern_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", o.suite, "beta-ideal, sym-closed-forms, torsion, cs-membership, pushforward, "
                                           "proof-chain, hyperplane, a1, all")
      ->required();
  verify_cmd->add_option("--k", o.k);
  verify_cmd->add_option("--d-max", o.d_max);
  verify_cmd->add_option("--d", o.d);
  verify_cmd->add_option("--degrees", o.degrees, "degree range a..b");
  verify_cmd->add_option("--f", o.f);
  verify_cmd->add_option("--e", o.e);
  add_common(verify_cmd);

  std::vector<const char*> argv{"chowgen"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const ResourceGuard guard = o.guard.empty() ? ResourceGuard::from_env() : ResourceGuard::parse(o.guard);
    if (*present_cmd) cmd_present(o, guard, out);
    if (*graded_cmd) cmd_graded(o, guard, out);
    if (*chern_cmd) cmd_chern(o, out);
    if (*verify_cmd) return cmd_verify(o, guard, out);
    return kOk;
  } catch (const UsageError& e) {
    err << "chowgen: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "chowgen: " << e.what() << "\n";
    return kUsage;
  } catch (const ScaleExceeded& e) {
    err << "chowgen: " << e.what() << "\n";
    return kGuard;
  } catch (const Error& e) {
    err << "chowgen: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace chowgen::cli
