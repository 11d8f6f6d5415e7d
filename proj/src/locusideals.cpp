#include "chowgen/locusideals.hpp"

#include "chowgen/error.hpp"

namespace chowgen {

const char* to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::I1: return "I1";
    case IdealKind::J1: return "J1";
    case IdealKind::I2: return "I2";
    case IdealKind::J2: return "J2";
  }
  return "?";
}

std::vector<Polynomial> DegeneracyIdeal::polys() const {
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.poly);
  return out;
}

namespace {

void require_rank_trunc(const ChernSeries& e, const char* op) {
  if (!e.genuine()) throw InvalidArgument(std::string(op) + ": needs a genuine bundle series");
  if (e.trunc() < e.rank())
    throw TruncationTooSmall(std::string(op) + ": series truncated at " + std::to_string(e.trunc()) +
                             " but rank is " + std::to_string(e.rank()));
}

void require_line(const ChernSeries& e, const Polynomial& line, const char* op) {
  e.series().check_ring(line, op);
  if (!line.is_zero() && line.homogeneous_degree() != 1)
    throw InvalidArgument(std::string(op) + ": line class must be homogeneous of degree 1");
}

DegeneracyIdeal collect(IdealKind kind, const ChernSeries& e, const Polynomial& series) {
  DegeneracyIdeal ideal{kind, e.rank(), e.ring(), {}};
  for (int i = 1; i <= e.rank(); ++i) ideal.generators.push_back({i, graded_component(series, i)});
  return ideal;
}

}  // namespace

DegeneracyIdeal ideal_I1(const ChernSeries& e) {
  require_rank_trunc(e, "ideal_I1");
  const ChernSeries base = e.with_trunc(e.rank());
  return collect(IdealKind::I1, e, invert_series(dual_chern(base)).series());
}

DegeneracyIdeal ideal_J1(const ChernSeries& e, const Polynomial& line) {
  require_rank_trunc(e, "ideal_J1");
  require_line(e, line, "ideal_J1");
  const int r = e.rank();
  const ChernSeries base = e.with_trunc(r);
  const Polynomial twist = power(Polynomial::one(e.ring()) + line, static_cast<unsigned>(r), r);
  return collect(IdealKind::J1, e, poly_mul(twist, invert_series(dual_chern(base)).series(), r));
}

DegeneracyIdeal ideal_I2(const ChernSeries& e) {
  require_rank_trunc(e, "ideal_I2");
  const int r = e.rank();
  const ChernSeries base = e.with_trunc(r);
  return collect(IdealKind::I2, e, poly_mul(dual_chern(base).series(), invert_series(base).series(), r));
}

DegeneracyIdeal ideal_J2(const ChernSeries& e, const Polynomial& line) {
  require_rank_trunc(e, "ideal_J2");
  require_line(e, line, "ideal_J2");
  const int r = e.rank();
  const ChernSeries base = e.with_trunc(r);
  const ChernSeries twisted = tensor_line(dual_chern(base), r, line);
  return collect(IdealKind::J2, e, poly_mul(twisted.series(), invert_series(base).series(), r));
}

Polynomial chern_relation(const ChernSeries& f, const Polynomial& line) {
  if (f.trunc() < f.rank())
    throw TruncationTooSmall("chern_relation: series truncated at " + std::to_string(f.trunc()) + " but rank is " +
                             std::to_string(f.rank()));
  require_line(f, line, "chern_relation");
  const int r = f.rank();
  Polynomial out(f.ring());
  Polynomial lp = Polynomial::one(f.ring());
  for (int j = r; j >= 0; --j) {
    out += f.component(j) * lp;
    lp = lp * line;
  }
  return out;
}

}  // namespace chowgen
