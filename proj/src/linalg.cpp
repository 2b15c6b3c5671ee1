#include "mhag/linalg.hpp"

namespace mhag {

bool RowEchelon::insert(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    Scalar f = it->second;
    std::int64_t col = it->first;
    for (const auto& [c, v] : piv->second) {
      Scalar nv = row[c] - f * v;
      if (nv.is_zero()) {
        row.erase(c);
      } else {
        row[c] = nv;
      }
    }
    it = row.upper_bound(col);
  }
  if (row.empty()) return false;
  Scalar lead = row.begin()->second.inverse();
  for (auto& [c, v] : row) v *= lead;
  std::int64_t col = row.begin()->first;
  pivots_.emplace(col, std::move(row));
  return true;
}

std::size_t exact_rank(const std::vector<SparseRow>& rows) {
  RowEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::optional<std::vector<Elem>> invert_images(const std::vector<Elem>& images) {
  const std::size_t n = images.size();
  // Augmented [M | I] with M_{ij} = coefficient of e_i in images[j].
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n, Scalar(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [i, c] : images[j]) {
      if (i < 0 || static_cast<std::size_t>(i) >= n) return std::nullopt;
      m[static_cast<std::size_t>(i)][j] = c;
    }
    m[j][n + j] = Scalar(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    Scalar inv = m[col][col].inverse();
    for (auto& v : m[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t c = col; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Elem> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out[j].add(static_cast<Label>(i), m[i][n + j]);
  }
  return out;
}

}  // namespace mhag
