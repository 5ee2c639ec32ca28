#include "ellarr/hodge_table.hpp"

#include <algorithm>
#include <sstream>

#include "ellarr/errors.hpp"

namespace ellarr {

void HodgeTable::set(int p, int q, uint64_t v) {
  if (!in_support(p, q) && v != 0)
    throw std::logic_error("nonzero table entry outside the support triangle");
  if (in_support(p, q)) entries_[{p, q}] = v;
}

bool HodgeTable::known(int p, int q) const {
  if (!in_support(p, q)) return true;
  return entries_.count({p, q}) != 0;
}

uint64_t HodgeTable::value(int p, int q) const {
  if (!in_support(p, q)) return 0;
  auto it = entries_.find({p, q});
  if (it == entries_.end())
    fail(errc::partial_table, "entry (" + std::to_string(p) + "," +
                                  std::to_string(q) + ") was not computed");
  return it->second;
}

bool HodgeTable::partial() const {
  for (int p = 0; p <= k_; ++p)
    for (int q = 0; q <= 2 * (k_ - p); ++q)
      if (!entries_.count({p, q})) return true;
  return false;
}

std::vector<uint64_t> HodgeTable::betti() const {
  std::vector<uint64_t> b(2 * k_ + 1, 0);
  for (int p = 0; p <= k_; ++p)
    for (int q = 0; q <= 2 * (k_ - p); ++q) b[p + q] += value(p, q);
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  return b;
}

LaurentPolynomial HodgeTable::poincare() const {
  LaurentPolynomial out;
  auto b = betti();
  for (size_t n = 0; n < b.size(); ++n)
    out.add_term(static_cast<int>(n), mpq_class(static_cast<long>(b[n])));
  return out;
}

mpz_class HodgeTable::euler() const {
  mpz_class e = 0;
  for (int p = 0; p <= k_; ++p)
    for (int q = 0; q <= 2 * (k_ - p); ++q) {
      mpz_class v(static_cast<unsigned long>(value(p, q)));
      e += ((p + q) % 2) ? -v : v;
    }
  return e;
}

LaurentPolynomial HodgeTable::u_diagnostic() const {
  LaurentPolynomial out;
  for (int p = 0; p <= k_; ++p)
    for (int q = 0; q <= 2 * (k_ - p); ++q) {
      mpq_class v(static_cast<long>(value(p, q)));
      out.add_term(2 * p + q, (p % 2) ? -v : v);
    }
  return out;
}

std::string HodgeTable::layout() const {
  // Rows p descending, q across.  Row width starts at the degree-k triangle
  // (q <= k−p) and stretches over nonzero or uncomputed cells beyond it;
  // rows above the highest interesting p are dropped, keeping the output
  // compact for hand comparison.
  auto interesting = [&](int p, int q) {
    auto it = entries_.find({p, q});
    if (it != entries_.end()) return it->second != 0;
    return in_support(p, q);  // uncomputed support cell
  };
  int p_top = 0;
  for (int p = 0; p <= k_; ++p)
    for (int q = 0; q <= 2 * (k_ - p); ++q)
      if (interesting(p, q)) p_top = std::max(p_top, p);
  std::ostringstream os;
  for (int p = p_top; p >= 0; --p) {
    int q_max = std::max(0, k_ - p);
    for (int q = 2 * (k_ - p); q > q_max; --q)
      if (interesting(p, q)) {
        q_max = q;
        break;
      }
    for (int q = 0; q <= q_max; ++q) {
      if (q) os << ' ';
      if (auto it = entries_.find({p, q}); it != entries_.end())
        os << it->second;
      else
        os << (in_support(p, q) ? "·" : "0");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ellarr
