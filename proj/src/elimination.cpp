#include "ellarr/elimination.hpp"

#include <algorithm>

#include "ellarr/errors.hpp"

namespace ellarr {

void MemoryGauge::charge(uint64_t bytes) {
  uint64_t now = current_.fetch_add(bytes) + bytes;
  if (now > budget_) {
    current_.fetch_sub(bytes);
    fail(errc::memory_budget_exceeded,
         "elimination working set exceeded memory budget of " +
             std::to_string(budget_) + " bytes");
  }
  uint64_t prev = peak_.load();
  while (prev < now && !peak_.compare_exchange_weak(prev, now)) {
  }
}

namespace {

class SparseEliminator final : public Eliminator {
public:
  SparseEliminator(uint64_t ncols, PrimeField f, MemoryGauge* gauge)
      : Eliminator(ncols, f), gauge_(gauge), pivot_of_col_(ncols, -1) {
    if (gauge_) gauge_->charge(ncols * sizeof(int32_t));
  }
  ~SparseEliminator() override {
    if (gauge_)
      gauge_->release(ncols_ * sizeof(int32_t) + stored_ * sizeof(FpEntry));
  }

  bool insert(FpVec row) override {
    while (!row.empty()) {
      int32_t pr = pivot_of_col_[row.front().col];
      if (pr < 0) break;
      axpy_head(row, rows_[pr]);
    }
    if (row.empty()) return false;
    // claim: normalize head to 1
    uint32_t hv = row.front().val;
    if (hv != 1) {
      uint32_t s = field_.inv(hv);
      for (auto& e : row) e.val = field_.mul(e.val, s);
    }
    if (gauge_) gauge_->charge(row.size() * sizeof(FpEntry));
    stored_ += row.size();
    pivot_of_col_[row.front().col] = static_cast<int32_t>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  uint64_t rank() const override { return rows_.size(); }
  bool is_pivot(uint32_t col) const override { return pivot_of_col_[col] >= 0; }

  std::vector<uint32_t> free_columns() const override {
    std::vector<uint32_t> out;
    for (uint64_t c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] < 0) out.push_back(static_cast<uint32_t>(c));
    return out;
  }

  FpVec reduce(FpVec v) const override {
    // Eliminate the lowest reducible column each round; new entries only
    // appear to its right, so this terminates with support on free columns.
    for (size_t i = 0; i < v.size();) {
      int32_t pr = pivot_of_col_[v[i].col];
      if (pr < 0) {
        ++i;
        continue;
      }
      v = axpy_at(std::move(v), i, rows_[pr]);
    }
    return v;
  }

  uint64_t entries_stored() const override { return stored_; }

private:
  // row -= row[i] * pivot  (pivot head is 1 and sits at row[i].col).
  // Entries left of i are untouched by construction.
  FpVec axpy_at(FpVec row, size_t i, const FpVec& pivot) const {
    uint32_t c = field_.neg(row[i].val);
    FpVec out;
    out.reserve(row.size() + pivot.size());
    out.insert(out.end(), row.begin(), row.begin() + i);
    size_t a = i, b = 0;
    while (a < row.size() && b < pivot.size()) {
      if (row[a].col < pivot[b].col) {
        out.push_back(row[a++]);
      } else if (row[a].col > pivot[b].col) {
        uint32_t v = field_.mul(c, pivot[b++].val);
        if (v) out.push_back({pivot[b - 1].col, v});
      } else {
        uint32_t v = field_.add(row[a].val, field_.mul(c, pivot[b].val));
        if (v) out.push_back({row[a].col, v});
        ++a, ++b;
      }
    }
    out.insert(out.end(), row.begin() + a, row.end());
    for (; b < pivot.size(); ++b) {
      uint32_t v = field_.mul(c, pivot[b].val);
      if (v) out.push_back({pivot[b].col, v});
    }
    return out;
  }
  void axpy_head(FpVec& row, const FpVec& pivot) const {
    row = axpy_at(std::move(row), 0, pivot);
  }

  MemoryGauge* gauge_;
  std::vector<int32_t> pivot_of_col_;
  std::vector<FpVec> rows_;
  uint64_t stored_ = 0;
};

class DenseEliminator final : public Eliminator {
public:
  DenseEliminator(uint64_t ncols, PrimeField f, MemoryGauge* gauge)
      : Eliminator(ncols, f), gauge_(gauge), pivot_of_col_(ncols, -1) {
    if (gauge_) gauge_->charge(ncols * sizeof(int32_t));
  }
  ~DenseEliminator() override {
    if (gauge_)
      gauge_->release(ncols_ * sizeof(int32_t) +
                      rows_.size() * ncols_ * sizeof(uint32_t));
  }

  bool insert(FpVec sparse_row) override {
    std::vector<uint32_t> row(ncols_, 0);
    for (const auto& e : sparse_row) row[e.col] = e.val;
    for (const auto& [head, pr] : order_) {
      if (row[head]) axpy(row, rows_[pr], head);
    }
    uint64_t head = 0;
    while (head < ncols_ && row[head] == 0) ++head;
    if (head == ncols_) return false;
    if (row[head] != 1) {
      uint32_t s = field_.inv(row[head]);
      for (auto& v : row)
        if (v) v = field_.mul(v, s);
    }
    if (gauge_) gauge_->charge(ncols_ * sizeof(uint32_t));
    pivot_of_col_[head] = static_cast<int32_t>(rows_.size());
    order_.emplace_back(static_cast<uint32_t>(head),
                        static_cast<int32_t>(rows_.size()));
    rows_.push_back(std::move(row));
    std::sort(order_.begin(), order_.end());
    return true;
  }

  uint64_t rank() const override { return rows_.size(); }
  bool is_pivot(uint32_t col) const override { return pivot_of_col_[col] >= 0; }

  std::vector<uint32_t> free_columns() const override {
    std::vector<uint32_t> out;
    for (uint64_t c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] < 0) out.push_back(static_cast<uint32_t>(c));
    return out;
  }

  FpVec reduce(FpVec v) const override {
    std::vector<uint32_t> row(ncols_, 0);
    for (const auto& e : v) row[e.col] = e.val;
    for (const auto& [head, pr] : order_) {
      if (row[head]) axpy(row, rows_[pr], head);
    }
    FpVec out;
    for (uint64_t c = 0; c < ncols_; ++c)
      if (row[c]) out.push_back({static_cast<uint32_t>(c), row[c]});
    return out;
  }

  uint64_t entries_stored() const override { return rows_.size() * ncols_; }

private:
  void axpy(std::vector<uint32_t>& row, const std::vector<uint32_t>& pivot,
            uint64_t head) const {
    uint32_t c = field_.neg(row[head]);
    for (uint64_t j = head; j < ncols_; ++j) {
      if (pivot[j]) row[j] = field_.add(row[j], field_.mul(c, pivot[j]));
    }
  }

  MemoryGauge* gauge_;
  std::vector<int32_t> pivot_of_col_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<std::pair<uint32_t, int32_t>> order_;  // (head col, row index)
};

constexpr uint64_t dense_col_cap = 4096;

}  // namespace

std::unique_ptr<Eliminator> make_eliminator(uint64_t ncols, PrimeField f,
                                            MemoryGauge* gauge,
                                            double est_fill) {
  if (ncols <= dense_col_cap && est_fill >= 0.2)
    return std::make_unique<DenseEliminator>(ncols, f, gauge);
  return std::make_unique<SparseEliminator>(ncols, f, gauge);
}

}  // namespace ellarr
