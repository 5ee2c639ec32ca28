#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ellarr {

// Row-major sparse matrix over Z (or over F_p with entries already reduced).
// Each row holds (column, coefficient) pairs with strictly increasing
// columns and no explicit zeros.
struct SparseMatrix {
  uint64_t rows = 0;
  uint64_t cols = 0;
  std::vector<std::vector<std::pair<uint32_t, int64_t>>> entries;

  void add_row(std::vector<std::pair<uint32_t, int64_t>> row) {
    entries.push_back(std::move(row));
    rows = entries.size();
  }
  uint64_t nonzeros() const {
    uint64_t n = 0;
    for (const auto& r : entries) n += r.size();
    return n;
  }
  // Checks the row invariants; used by tests and after construction paths.
  bool well_formed() const;
  // MatrixMarket coordinate format (1-based), for offline inspection.
  void write_matrix_market(std::ostream& os) const;
};

SparseMatrix transpose(const SparseMatrix& m);

}  // namespace ellarr
