#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mhag/lincomb.hpp"

namespace mhag {

using SparseRow = std::map<std::int64_t, Scalar>;

// Incremental exact row echelon form. Each inserted row is reduced against the
// current pivots; a nonzero remainder becomes a new pivot row.
class RowEchelon {
 public:
  // Returns true if the row increased the rank.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::int64_t, SparseRow> pivots_;  // pivot column -> normalized row (leading 1)
};

std::size_t exact_rank(const std::vector<SparseRow>& rows);

// Inverse of the linear map on span{0..n-1} sending e_j to images[j]; nullopt if singular.
std::optional<std::vector<Elem>> invert_images(const std::vector<Elem>& images);

// Flattens a keyed linear combination into a sparse row using a column index
// assigned on first sight.
template <typename K>
class ColumnIndex {
 public:
  SparseRow row(const LinComb<K>& x) {
    SparseRow r;
    for (const auto& [k, c] : x) {
      auto [it, _] = index_.try_emplace(k, static_cast<std::int64_t>(index_.size()));
      r.emplace(it->second, c);
    }
    return r;
  }
  std::size_t columns() const { return index_.size(); }

 private:
  std::map<K, std::int64_t> index_;
};

}  // namespace mhag
