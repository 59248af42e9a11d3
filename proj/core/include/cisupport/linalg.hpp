#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cisupport/field.hpp"

namespace cisupport {

// Dense row-major matrix over F_p. All eliminations are exact.
class DenseMat {
 public:
  DenseMat(PrimeField f, size_t rows, size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint32_t v) { a_[r * cols_ + c] = v; }

  static DenseMat identity(PrimeField f, size_t n);
  DenseMat mul(const DenseMat& b) const;
  DenseMat transpose() const;

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref();
  size_t rank() const;

  // Basis of {x : Ax = 0}, one vector per free column.
  std::vector<std::vector<uint32_t>> kernel_basis() const;

  // One solution of Ax = b, if any.
  std::optional<std::vector<uint32_t>> solve(
      const std::vector<uint32_t>& b) const;

  std::vector<uint32_t> apply(const std::vector<uint32_t>& x) const;

 private:
  PrimeField field_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

// Incrementally maintained row space in echelon form. Used for span
// membership, quotient dimensions and picking representatives.
class RowSpace {
 public:
  RowSpace(PrimeField f, size_t dim) : field_(f), dim_(dim) {}

  size_t dim() const { return rows_.size(); }
  size_t ambient_dim() const { return dim_; }

  // Adds v to the span; returns true if the dimension grew.
  bool add(std::vector<uint32_t> v);
  bool contains(std::vector<uint32_t> v) const;
  // Residue of v modulo the span (fully reduced against echelon rows).
  std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;

  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }

 private:
  PrimeField field_;
  size_t dim_;
  std::vector<std::vector<uint32_t>> rows_;  // echelon, pivots normalized to 1
  std::vector<size_t> pivots_;
};

}  // namespace cisupport
