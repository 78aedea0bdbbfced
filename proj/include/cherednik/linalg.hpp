#pragma once

// Dense exact linear algebra over a FieldSpec: row echelon form, rank,
// kernel, and reduction of vectors against an echelonized span. Matrices are
// small (a few hundred rows); plain Gaussian elimination with first-nonzero
// pivoting keeps results deterministic.

#include <cstddef>
#include <vector>

#include "cherednik/ffield.hpp"

namespace cherednik {

using Vec = std::vector<FieldElement>;
using Mat = std::vector<Vec>;

// Row-reduce in place to reduced row echelon form; returns pivot columns.
inline std::vector<size_t> rref(const FieldSpec& F, Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i)
      if (!F.is_zero(m[i][c])) { sel = i; break; }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    FieldElement pi = F.inv(m[r][c]);
    for (size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], pi);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || F.is_zero(m[i][c])) continue;
      FieldElement f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r, Vec(cols, F.zero()));
  return pivots;
}

inline size_t rank(const FieldSpec& F, Mat m) { return rref(F, m).size(); }

// Basis of { v : M v = 0 }, deterministic (one vector per free column).
inline Mat kernel(const FieldSpec& F, Mat m, size_t cols) {
  std::vector<size_t> piv = rref(F, m);
  std::vector<bool> is_piv(cols, false);
  for (size_t c : piv) is_piv[c] = true;
  Mat basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_piv[fc]) continue;
    Vec v(cols, F.zero());
    v[fc] = F.one();
    for (size_t i = 0; i < piv.size(); ++i)
      if (piv[i] < cols) v[piv[i]] = F.neg(m[i][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Reduce v against rows already in rref with the given pivot columns.
inline Vec reduce_against(const FieldSpec& F, const Mat& rows,
                          const std::vector<size_t>& pivots, Vec v) {
  for (size_t i = 0; i < rows.size(); ++i) {
    FieldElement f = v[pivots[i]];
    if (F.is_zero(f)) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, rows[i][j]));
  }
  return v;
}

inline bool is_zero_vec(const FieldSpec& F, const Vec& v) {
  for (const auto& x : v)
    if (!F.is_zero(x)) return false;
  return true;
}

// An incrementally built echelonized subspace.
struct Echelon {
  Mat rows;
  std::vector<size_t> pivots;

  // Returns true if v enlarged the span.
  bool insert(const FieldSpec& F, Vec v) {
    v = reduce_against(F, rows, pivots, std::move(v));
    size_t c = 0;
    while (c < v.size() && F.is_zero(v[c])) ++c;
    if (c == v.size()) return false;
    FieldElement pi = F.inv(v[c]);
    for (auto& x : v) x = F.mul(x, pi);
    // Back-substitute into existing rows to keep full rref.
    for (size_t i = 0; i < rows.size(); ++i) {
      FieldElement f = rows[i][c];
      if (F.is_zero(f)) continue;
      for (size_t j = 0; j < v.size(); ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, v[j]));
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < c) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, c);
    return true;
  }

  Vec reduce(const FieldSpec& F, Vec v) const {
    return reduce_against(F, rows, pivots, std::move(v));
  }
  bool contains(const FieldSpec& F, Vec v) const {
    return is_zero_vec(F, reduce(F, std::move(v)));
  }
  size_t dim() const { return rows.size(); }
};

}  // namespace cherednik
