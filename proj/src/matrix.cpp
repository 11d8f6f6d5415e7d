#include "chowgen/matrix.hpp"

#include <sstream>

#include "chowgen/error.hpp"

namespace chowgen {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::append_row(std::span<const Integer> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InvalidArgument("IntMatrix::append_row: wrong row length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(src, c);
    if (s != 0) mpz_addmul((*this)(dst, c).get_mpz_t(), k.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, src);
    if (s != 0) mpz_addmul((*this)(r, dst).get_mpz_t(), k.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("IntMatrix: dimension mismatch in product");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) mpz_addmul(r(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a, bool track_transform) {
  IntMatrix h = a;
  const std::size_t m = h.rows(), n = h.cols();
  std::optional<IntMatrix> t;
  if (track_transform) t = IntMatrix::identity(m);
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    h.add_row_multiple(dst, src, k);
    if (t) t->add_row_multiple(dst, src, k);
  };
  auto swap = [&](std::size_t x, std::size_t y) {
    h.swap_rows(x, y);
    if (t) t->swap_rows(x, y);
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (best == m || cmpabs(h(i, c), h(best, c)) < 0)) best = i;
      if (best == m) break;
      swap(r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        row_op(i, r, -trunc_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      if (t) t->negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) row_op(i, r, -floor_div(h(i, c), h(r, c)));
    pivots.push_back(c);
    ++r;
  }

  HermiteForm out;
  out.basis = IntMatrix(0, n);
  for (std::size_t i = 0; i < r; ++i) out.basis.append_row(h.row(i));
  out.pivots = std::move(pivots);
  out.transform = std::move(t);
  return out;
}

std::vector<Integer> HermiteForm::reduce(std::span<const Integer> v) const {
  if (v.size() != basis.cols()) throw InvalidArgument("HermiteForm::reduce: vector length mismatch");
  std::vector<Integer> w(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Integer q = floor_div(w[pivots[k]], basis(k, pivots[k]));
    if (q == 0) continue;
    const auto row = basis.row(k);
    for (std::size_t c = 0; c < w.size(); ++c)
      if (row[c] != 0) mpz_submul(w[c].get_mpz_t(), q.get_mpz_t(), row[c].get_mpz_t());
  }
  return w;
}

bool HermiteForm::contains(std::span<const Integer> v) const {
  const auto w = reduce(v);
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

std::optional<std::vector<Integer>> HermiteForm::solve(std::span<const Integer> v) const {
  if (!transform) throw InvalidArgument("HermiteForm::solve: transform was not tracked");
  if (v.size() != basis.cols()) throw InvalidArgument("HermiteForm::solve: vector length mismatch");
  std::vector<Integer> w(v.begin(), v.end());
  std::vector<Integer> x(transform->cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Integer& p = basis(k, pivots[k]);
    if (!mpz_divisible_p(w[pivots[k]].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    const Integer q = exact_div(w[pivots[k]], p);
    if (q == 0) continue;
    const auto row = basis.row(k);
    for (std::size_t c = 0; c < w.size(); ++c)
      if (row[c] != 0) mpz_submul(w[c].get_mpz_t(), q.get_mpz_t(), row[c].get_mpz_t());
    const auto trow = transform->row(k);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (trow[j] != 0) mpz_addmul(x[j].get_mpz_t(), q.get_mpz_t(), trow[j].get_mpz_t());
  }
  for (const auto& e : w)
    if (e != 0) return std::nullopt;
  return x;
}

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& d = s.d;
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    s.u.add_row_multiple(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col_multiple(dst, src, k);
    s.v.add_col_multiple(dst, src, k);
  };
  auto move_to = [&](std::size_t t, std::size_t i, std::size_t j) {
    d.swap_rows(t, i);
    s.u.swap_rows(t, i);
    d.swap_cols(t, j);
    s.v.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (bi == m || cmpabs(d(i, j), d(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    move_to(t, bi, bj);

    while (true) {
      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_op(i, t, -trunc_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_op(j, t, -trunc_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) residue = true;
      }
      if (residue) {
        std::size_t ri = t, rj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (d(i, t) != 0 && cmpabs(d(i, t), d(ri, rj)) < 0) {
            ri = i;
            rj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(t, j) != 0 && cmpabs(d(t, j), d(ri, rj)) < 0) {
            ri = t;
            rj = j;
          }
        move_to(t, ri, rj);
        continue;
      }
      // Row and column are clear; enforce divisibility on the trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_op(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  const HermiteForm h = hermite_normal_form(a);
  if (h.rank() == 0) return {};
  return smith_normal_form(h.basis).invariants();
}

}  // namespace chowgen
