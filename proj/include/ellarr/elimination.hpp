#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "ellarr/field.hpp"

namespace ellarr {

// Shared cap on elimination working memory, counted in bytes of stored row
// entries.  All pivot structures of a run charge the same gauge, so the cap
// is global even when lines run on worker threads.
class MemoryGauge {
public:
  explicit MemoryGauge(uint64_t budget_bytes) : budget_(budget_bytes) {}
  void charge(uint64_t bytes);  // throws errc::memory_budget_exceeded
  void release(uint64_t bytes) { current_.fetch_sub(bytes); }
  uint64_t current() const { return current_.load(); }
  uint64_t peak() const { return peak_.load(); }
  uint64_t budget() const { return budget_; }

private:
  uint64_t budget_;
  std::atomic<uint64_t> current_{0};
  std::atomic<uint64_t> peak_{0};
};

struct FpEntry {
  uint32_t col;
  uint32_t val;  // in [1, p)
};
using FpVec = std::vector<FpEntry>;  // strictly increasing col

// Incremental row-echelon structure over F_p.  Rows arrive one at a time;
// each is head-reduced against the pivots claimed so far and either dies or
// claims its head column as a new pivot (head normalized to 1).  Pivot rows
// are never touched afterwards, so their tails may overlap pivot columns;
// reduce() performs the full normal form when one is needed.
class Eliminator {
public:
  virtual ~Eliminator() = default;
  virtual bool insert(FpVec row) = 0;
  virtual uint64_t rank() const = 0;
  virtual bool is_pivot(uint32_t col) const = 0;
  virtual std::vector<uint32_t> free_columns() const = 0;
  virtual FpVec reduce(FpVec v) const = 0;
  virtual uint64_t entries_stored() const = 0;
  const PrimeField& field() const { return field_; }
  uint64_t ncols() const { return ncols_; }

protected:
  Eliminator(uint64_t ncols, PrimeField f) : field_(f), ncols_(ncols) {}
  PrimeField field_;
  uint64_t ncols_;
};

// est_fill is the expected fraction of nonzero entries per row; dense rows
// win once fill is substantial and the column count is modest.
std::unique_ptr<Eliminator> make_eliminator(uint64_t ncols, PrimeField f,
                                            MemoryGauge* gauge = nullptr,
                                            double est_fill = 0.0);

}  // namespace ellarr
