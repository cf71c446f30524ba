#pragma once

// Dense row-major matrices over GF(q) and exact row reduction.

#include <cstdint>
#include <span>
#include <vector>

#include "hwe/gfq.hpp"

namespace hwe {

using Mask = std::uint32_t;

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Elem& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::span<Elem> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const Elem> row(std::size_t i) const { return {data.data() + i * cols, cols}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Reduces m in place to reduced row echelon form, drops zero rows and
/// returns the pivot columns.
inline std::vector<std::size_t> rref(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
    std::size_t sel = lead;
    while (sel < m.rows && m(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(lead, j));
    const Elem inv = f.inv(m(lead, col));
    for (std::size_t j = 0; j < m.cols; ++j) m(lead, j) = f.mul(m(lead, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == lead || m(i, col) == 0) continue;
      const Elem factor = m(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(lead, j)));
    }
    pivots.push_back(col);
    ++lead;
  }
  m.rows = lead;
  m.data.resize(lead * m.cols);
  return pivots;
}

inline std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

/// Rank of the columns of m selected by the bitmask (bit j-1 = column j).
inline std::size_t column_rank(const Field& f, const Matrix& m, Mask columns) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < m.cols; ++j)
    if (columns >> j & 1u) idx.push_back(j);
  Matrix sub(m.rows, idx.size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = m(i, idx[j]);
  return rank(f, std::move(sub));
}

/// a * b over the field.
inline Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < a.cols; ++l) {
      const Elem x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
    }
  return out;
}

inline Mask support_of(std::span<const Elem> v) {
  Mask s = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) s |= Mask{1} << j;
  return s;
}

}  // namespace hwe
