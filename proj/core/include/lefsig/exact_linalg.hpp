#pragma once

#include <cstddef>
#include <vector>

#include "lefsig/rational.hpp"

namespace lefsig {

// Small dense matrix with exact rational entries, row-major.
class RatMatrix {
public:
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool operator==(const RatMatrix&) const = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

std::size_t rank(const RatMatrix& m);

// Basis of the right null space {x : m x = 0}. Vectors are cleared to coprime
// integers with the first nonzero entry positive and listed in free-column
// order of the reduced echelon form, so the output is canonical.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// True iff v lies in the row span of basis_rows (over the rationals).
bool in_span(const std::vector<Rational>& v, const RatMatrix& basis_rows);

namespace detail {

// Integer-normalized reduced row echelon form, computed fraction-free: on
// return each pivot row is the unique coprime-integer multiple of the
// rational RREF row with positive pivot, and zero rows sink to the bottom.
// Returns the pivot column indices.
std::vector<std::size_t> integer_rref(std::vector<std::vector<Integer>>& rows);

// Null-space basis over the integers for an integer matrix, same
// canonicalization as kernel_basis.
std::vector<std::vector<Integer>> integer_kernel_basis(
    std::vector<std::vector<Integer>> rows, std::size_t cols);

// Divides by the gcd of the entries (no-op on the zero vector).
void reduce_content(std::vector<Integer>& v);

}  // namespace detail

}  // namespace lefsig
