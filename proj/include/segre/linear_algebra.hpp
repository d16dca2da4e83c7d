#pragma once

// Small dense matrices over an exact field: rank, inverse, null space.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "segre/field.hpp"

namespace segre {

template <CoefficientField K>
using Matrix = std::vector<std::vector<typename K::Element>>;

template <CoefficientField K>
Matrix<K> identity_matrix(const K& field, std::size_t size) {
  Matrix<K> m(size, std::vector<typename K::Element>(size, field.zero()));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = field.one();
  return m;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <CoefficientField K>
std::vector<std::size_t> row_reduce(const K& field, Matrix<K>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && field.is_zero(a[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    auto inv = field.inv(a[r][c]);
    for (auto& v : a[r]) v = field.mul(v, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || field.is_zero(a[i][c])) continue;
      auto factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = field.sub(a[i][j], field.mul(factor, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <CoefficientField K>
std::size_t rank(const K& field, Matrix<K> a) {
  return row_reduce(field, a).size();
}

template <CoefficientField K>
std::optional<Matrix<K>> inverse(const K& field, const Matrix<K>& a) {
  const std::size_t n = a.size();
  Matrix<K> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
    aug[i] = a[i];
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? field.one() : field.zero());
  }
  auto pivots = row_reduce(field, aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  Matrix<K> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  return inv;
}

/// Basis of {v : a v = 0}.
template <CoefficientField K>
std::vector<std::vector<typename K::Element>> null_space(const K& field, Matrix<K> a, std::size_t cols) {
  auto pivots = row_reduce(field, a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename K::Element>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::Element> v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <CoefficientField K>
Matrix<K> multiply(const K& field, const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> out(a.size(), std::vector<typename K::Element>(b.empty() ? 0 : b.front().size(), field.zero()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = field.add(out[i][j], field.mul(a[i][k], b[k][j]));
  return out;
}

}  // namespace segre
