#pragma once

// Dense integer matrices with exact Hermite and Smith normal forms.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chowgen/integer.hpp"

namespace chowgen {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Integer> values);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer determinant(const IntMatrix& m);

/// Row-style Hermite normal form: the nonzero rows of `basis` are in echelon
/// form with positive pivots and entries above each pivot reduced into
/// [0, pivot). They span the same lattice as the input rows.
struct HermiteForm {
  IntMatrix basis;
  std::vector<std::size_t> pivots;  ///< pivot column of each basis row
  /// When tracked: transform * input = [basis; 0], transform unimodular.
  std::optional<IntMatrix> transform;

  std::size_t rank() const { return pivots.size(); }
  /// Remainder of v after reduction by the basis; zero iff v is in the lattice.
  std::vector<Integer> reduce(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const;
  /// Integer coefficients x with sum_i x_i * input_row_i = v, or nullopt when v
  /// is not in the lattice. Requires a tracked transform.
  std::optional<std::vector<Integer>> solve(std::span<const Integer> v) const;
};

HermiteForm hermite_normal_form(const IntMatrix& a, bool track_transform = false);

/// U * A * V = D with D diagonal, d1 | d2 | ..., U and V unimodular.
struct SmithForm {
  IntMatrix d, u, v;

  /// Nonzero diagonal entries, in order.
  std::vector<Integer> invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& a);
/// Nonzero invariant factors only (no transforms); computed via HNF first.
std::vector<Integer> invariant_factors(const IntMatrix& a);

}  // namespace chowgen
