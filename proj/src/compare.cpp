#include "ellarr/compare.hpp"

#include "ellarr/tutte.hpp"

namespace ellarr {

CompareVerdict compare_graphs(const Graph& left, const Graph& right,
                              const EngineOptions& opts) {
  CompareVerdict v;
  v.tutte_left = tutte(left);
  v.tutte_right = tutte(right);
  v.tutte_equal = (v.tutte_left == v.tutte_right);
  v.e2_equal = (e2_dimension_gf(left) == e2_dimension_gf(right));
  v.e3_left = e3_table(left, opts);
  v.e3_right = e3_table(right, opts);
  v.e3_equal = !v.e3_left.partial() && !v.e3_right.partial() &&
               v.e3_left == v.e3_right;

  int kmax = std::max(v.e3_left.k(), v.e3_right.k());
  for (int d = 0; d <= 2 * kmax && !v.first_divergence; ++d) {
    for (int p = 0; p <= d; ++p) {
      int q = d - p;
      bool in_l = v.e3_left.in_support(p, q);
      bool in_r = v.e3_right.in_support(p, q);
      if (!in_l && !in_r) continue;
      if ((in_l && !v.e3_left.known(p, q)) || (in_r && !v.e3_right.known(p, q)))
        continue;
      uint64_t a = in_l ? v.e3_left.value(p, q) : 0;
      uint64_t b = in_r ? v.e3_right.value(p, q) : 0;
      if (a != b) {
        v.first_divergence = Divergence{{p, q}, a, b};
        break;
      }
    }
  }
  return v;
}

}  // namespace ellarr
