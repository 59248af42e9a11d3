#include "cisupport/linalg.hpp"

namespace cisupport {

DenseMat DenseMat::identity(PrimeField f, size_t n) {
  DenseMat m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

DenseMat DenseMat::mul(const DenseMat& b) const {
  DenseMat r(field_, rows_, b.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      uint32_t v = at(i, k);
      if (!v) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        uint32_t w = b.at(k, j);
        if (!w) continue;
        r.set(i, j, field_.add(r.at(i, j), field_.mul(v, w)));
      }
    }
  return r;
}

DenseMat DenseMat::transpose() const {
  DenseMat r(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

std::vector<size_t> DenseMat::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t sel = row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (size_t j = 0; j < cols_; ++j) {
        uint32_t t = at(row, j);
        set(row, j, at(sel, j));
        set(sel, j, t);
      }
    uint32_t inv = field_.inv(at(row, col));
    for (size_t j = col; j < cols_; ++j) set(row, j, field_.mul(at(row, j), inv));
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      uint32_t f = at(i, col);
      if (!f) continue;
      for (size_t j = col; j < cols_; ++j)
        set(i, j, field_.sub(at(i, j), field_.mul(f, at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t DenseMat::rank() const {
  DenseMat copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<uint32_t>> DenseMat::kernel_basis() const {
  DenseMat copy = *this;
  std::vector<size_t> pivots = copy.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<uint32_t> v(cols_, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = field_.neg(copy.at(r, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<uint32_t>> DenseMat::solve(
    const std::vector<uint32_t>& b) const {
  // Eliminate on [A | b].
  DenseMat aug(field_, rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_, b[i]);
  }
  std::vector<size_t> pivots = aug.rref();
  for (size_t c : pivots)
    if (c == cols_) return std::nullopt;  // inconsistent system
  std::vector<uint32_t> x(cols_, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

std::vector<uint32_t> DenseMat::apply(const std::vector<uint32_t>& x) const {
  std::vector<uint32_t> y(rows_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    uint32_t acc = 0;
    for (size_t j = 0; j < cols_; ++j) {
      uint32_t v = at(i, j);
      if (v && x[j]) acc = field_.add(acc, field_.mul(v, x[j]));
    }
    y[i] = acc;
  }
  return y;
}

std::vector<uint32_t> RowSpace::reduce(std::vector<uint32_t> v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint32_t f = v[pivots_[r]];
    if (!f) continue;
    const std::vector<uint32_t>& row = rows_[r];
    for (size_t j = 0; j < dim_; ++j)
      if (row[j]) v[j] = field_.sub(v[j], field_.mul(f, row[j]));
  }
  return v;
}

bool RowSpace::add(std::vector<uint32_t> v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  uint32_t inv = field_.inv(v[p]);
  for (size_t j = 0; j < dim_; ++j) v[j] = field_.mul(v[j], inv);
  // Back-substitute into earlier rows to stay fully reduced.
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint32_t f = rows_[r][p];
    if (!f) continue;
    for (size_t j = 0; j < dim_; ++j)
      rows_[r][j] = field_.sub(rows_[r][j], field_.mul(f, v[j]));
  }
  // Keep rows sorted by pivot for determinism.
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool RowSpace::contains(std::vector<uint32_t> v) const {
  v = reduce(std::move(v));
  for (uint32_t x : v)
    if (x) return false;
  return true;
}

}  // namespace cisupport
