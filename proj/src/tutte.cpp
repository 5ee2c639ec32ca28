#include "ellarr/tutte.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ellarr/binomial.hpp"
#include "ellarr/errors.hpp"

namespace ellarr {

namespace {

// Canonical key of a multigraph: drop isolated vertices, relabel the rest
// by a degree-refined order (degree, multiset of neighbour degrees, original
// order as the final tie-break), sort the edge list.  Exact as a memo key —
// equal keys mean equal labeled graphs — while the refinement makes many
// recursion branches that differ only by labels collide on purpose.
struct CanonKey {
  int n;
  std::vector<std::pair<int, int>> edges;
  bool operator==(const CanonKey&) const = default;
};

struct CanonKeyHash {
  size_t operator()(const CanonKey& k) const {
    size_t h = std::hash<int>()(k.n);
    for (auto [u, v] : k.edges) {
      h = h * 1000003u + static_cast<size_t>(u) * 8191u +
          static_cast<size_t>(v);
    }
    return h;
  }
};

CanonKey canonical(const MultiGraph& g) {
  std::vector<int> degree(g.n + 1, 0);
  for (auto [u, v] : g.edges) {
    degree[u]++;
    degree[v]++;  // a loop contributes 2 to its vertex
  }
  std::vector<std::vector<int>> nbr_degs(g.n + 1);
  for (auto [u, v] : g.edges) {
    nbr_degs[u].push_back(degree[v]);
    nbr_degs[v].push_back(degree[u]);
  }
  std::vector<int> verts;
  for (int v = 1; v <= g.n; ++v)
    if (degree[v] > 0) {
      std::sort(nbr_degs[v].begin(), nbr_degs[v].end());
      verts.push_back(v);
    }
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
    if (degree[a] != degree[b]) return degree[a] < degree[b];
    return nbr_degs[a] < nbr_degs[b];
  });
  std::vector<int> label(g.n + 1, 0);
  for (size_t i = 0; i < verts.size(); ++i) label[verts[i]] = int(i) + 1;
  CanonKey key;
  key.n = static_cast<int>(verts.size());
  key.edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    int a = label[u], b = label[v];
    if (a > b) std::swap(a, b);
    key.edges.emplace_back(a, b);
  }
  std::sort(key.edges.begin(), key.edges.end());
  return key;
}

using Memo = std::unordered_map<CanonKey, BivariatePolynomial, CanonKeyHash>;

// Strip every loop and bridge, returning (#bridges, #loops, 2-edge-connected
// remainder).  Bridges are contracted, which cannot create new loops but can
// expose new bridges, so iterate to a fixed point.
struct Stripped {
  int bridges = 0;
  int loops = 0;
  MultiGraph core;
};

bool is_bridge(const MultiGraph& g, int index) {
  // removal increases the component count
  MultiGraph d = g;
  d.edges.erase(d.edges.begin() + index);
  return d.components() > g.components();
}

Stripped strip(MultiGraph g) {
  Stripped out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < g.m(); ++i) {
      auto [u, v] = g.edges[i];
      if (u == v) {
        out.loops++;
        g.edges.erase(g.edges.begin() + i);
        changed = true;
        break;
      }
      if (is_bridge(g, i)) {
        out.bridges++;
        g = delete_contract(g, i).second;
        changed = true;
        break;
      }
    }
  }
  out.core = std::move(g);
  return out;
}

BivariatePolynomial tutte_rec(const MultiGraph& g, Memo& memo) {
  Stripped s = strip(g);
  BivariatePolynomial factor = BivariatePolynomial::monomial(
      s.bridges, 0, 1);
  factor = factor * BivariatePolynomial::monomial(0, s.loops, 1);
  if (s.core.m() == 0) return factor;

  CanonKey key = canonical(s.core);
  auto it = memo.find(key);
  if (it != memo.end()) return factor * it->second;

  auto [del, con] = delete_contract(s.core, 0);
  BivariatePolynomial t = tutte_rec(del, memo) + tutte_rec(con, memo);
  memo.emplace(std::move(key), t);
  return factor * t;
}

}  // namespace

BivariatePolynomial tutte(const MultiGraph& g) {
  Memo memo;
  return tutte_rec(g, memo);
}

BivariatePolynomial tutte(const Graph& g) { return tutte(MultiGraph::of(g)); }

BivariatePolynomial tutte_subset_oracle(const Graph& g) {
  if (g.m() > 22)
    fail(errc::too_large, "subset expansion capped at 22 edges");
  int rk_all = g.rank();
  BivariatePolynomial xm1 = BivariatePolynomial::monomial(1, 0, 1) -
                            BivariatePolynomial::constant(1);
  BivariatePolynomial ym1 = BivariatePolynomial::monomial(0, 1, 1) -
                            BivariatePolynomial::constant(1);
  // powers of (x−1), (y−1) up to needed degree
  std::vector<BivariatePolynomial> xp = {BivariatePolynomial::constant(1)},
                                   yp = {BivariatePolynomial::constant(1)};
  for (int i = 1; i <= g.m(); ++i) {
    xp.push_back(xp.back() * xm1);
    yp.push_back(yp.back() * ym1);
  }
  BivariatePolynomial sum;
  for (uint32_t s = 0; s < (uint32_t(1) << g.m()); ++s) {
    std::vector<std::pair<int, int>> sub;
    for (int i = 0; i < g.m(); ++i)
      if (s >> i & 1) sub.push_back(g.edges[i]);
    int size = static_cast<int>(sub.size());
    Graph h;
    h.n = g.n;
    h.edges = std::move(sub);
    int rk = h.rank();
    sum += xp[rk_all - rk] * yp[size - rk];
  }
  return sum;
}

LaurentPolynomial characteristic_polynomial(const Graph& g) {
  int k = g.n - 1;
  int rk = g.rank();
  LaurentPolynomial one_minus_t =
      LaurentPolynomial::constant(1) - LaurentPolynomial::monomial(1);
  BivariatePolynomial t = tutte(g);
  // T(1−t, 0): only the y-free part contributes
  LaurentPolynomial chi;
  std::vector<LaurentPolynomial> pw = {LaurentPolynomial::constant(1)};
  for (int i = 1; i <= t.x_degree(); ++i) pw.push_back(pw.back() * one_minus_t);
  for (const auto& [ij, c] : t.terms()) {
    if (ij.second != 0) continue;
    for (const auto& [e, q] : pw[ij.first].terms())
      chi.add_term(e, q * mpq_class(c));
  }
  LaurentPolynomial shift = LaurentPolynomial::monomial(k - rk);
  chi = chi * shift;
  if (rk % 2) {
    LaurentPolynomial neg = LaurentPolynomial::constant(-1);
    chi = chi * neg;
  }
  return chi;
}

LaurentPolynomial GroupSpec::poincare() const {
  LaurentPolynomial base =
      LaurentPolynomial::constant(1) + LaurentPolynomial::monomial(1);
  return base.pow(static_cast<unsigned>(p)) *
         LaurentPolynomial::constant(components);
}

GroupSpec parse_group(std::string_view text) {
  if (text == "hyperplane") return GroupSpec::hyperplane();
  if (text == "toric") return GroupSpec::toric();
  if (text == "elliptic") return GroupSpec::elliptic();
  if (text == "real") return GroupSpec::real_line();
  auto comma = text.find(',');
  if (comma != std::string_view::npos) {
    auto parse_int = [](std::string_view s, int& out) {
      if (s.empty()) return false;
      out = 0;
      for (char c : s) {
        if (c < '0' || c > '9') return false;
        out = out * 10 + (c - '0');
      }
      return true;
    };
    int p = 0, q = 0;
    if (parse_int(text.substr(0, comma), p) &&
        parse_int(text.substr(comma + 1), q))
      return GroupSpec{p, q, 1};
  }
  fail(errc::bad_token, "unknown group spec: " + std::string(text));
}

LaurentPolynomial poincare_noncompact(const Graph& g, const GroupSpec& grp) {
  if (grp.compact())
    fail(errc::compact_group,
         "Poincaré formula needs a non-compact group (q >= 1); the elliptic "
         "case goes through the cohomology model");
  int k = g.n - 1;
  int d = grp.p + grp.q - 1;
  LaurentPolynomial chi = characteristic_polynomial(g);
  // argument: −P_G(t) / t^d
  LaurentPolynomial arg = grp.poincare() * LaurentPolynomial::monomial(-d, -1);
  LaurentPolynomial res = chi.substitute(arg);
  // times (−t^d)^k
  res = res * LaurentPolynomial::monomial(d * k, (k % 2) ? -1 : 1);
  if (!res.is_polynomial() || !res.integer_coeffs() ||
      !res.nonnegative_coeffs())
    throw std::logic_error(
        "Poincaré specialization did not produce a nonnegative polynomial");
  if (d >= 1) {
    mpz_class want = 1;
    for (int i = 0; i < k; ++i) want *= grp.components;
    if (res.coeff(0) != mpq_class(want))
      throw std::logic_error("Poincaré constant term != components^k");
  }
  return res;
}

mpz_class euler_characteristic(const Graph& g, const GroupSpec& grp) {
  LaurentPolynomial chi = characteristic_polynomial(g);
  int sign_arg = ((grp.p + grp.q) % 2) ? -1 : 1;
  mpq_class val = chi.eval(mpq_class(sign_arg * grp.euler()));
  int k = g.n - 1;
  if (((grp.p + grp.q) * k) % 2) val = -val;
  // χ has integer values at integers
  mpq_class canon = val;
  canon.canonicalize();
  if (canon.get_den() != 1)
    throw std::logic_error("Euler characteristic came out non-integral");
  return canon.get_num();
}

mpz_class elliptic_euler(const Graph& g) {
  if (!g.connected())
    fail(errc::disconnected, "elliptic Euler characteristic needs a connected graph");
  int k = g.n - 1;
  BivariatePolynomial t = tutte(g);
  mpz_class t10 = 0;
  for (const auto& [ij, c] : t.terms())
    if (ij.second == 0) t10 += c;
  return (k % 2) ? mpz_class(-t10) : t10;
}

namespace {

// Coefficients c_i of T(x, 0) = Σ c_i x^i.
std::vector<mpz_class> y_free_coeffs(const BivariatePolynomial& t, int k) {
  std::vector<mpz_class> c(k + 1, 0);
  for (const auto& [ij, coeff] : t.terms())
    if (ij.second == 0) c.at(ij.first) = coeff;
  return c;
}

}  // namespace

HodgeTable e2_dimension_gf(const Graph& g) {
  if (!g.connected())
    fail(errc::disconnected, "E2 generating function needs a connected graph");
  int k = g.n - 1;
  auto c = y_free_coeffs(tutte(g), k);
  // T(1 + (1+t)²/s, 0)·s^k = Σ_i c_i Σ_j C(i,j) (1+t)^{2j} s^{k−j}
  // ⇒ coefficient of s^p t^q is d_{k−p}·C(2(k−p), q), d_j = Σ_i c_i C(i,j).
  HodgeTable table(k);
  for (int p = 0; p <= k; ++p) {
    int j = k - p;
    mpz_class d = 0;
    for (int i = j; i <= k; ++i) d += c[i] * binom64(i, j);
    for (int q = 0; q <= 2 * j; ++q) {
      mpz_class v = d * binom64(2 * j, q);
      table.set(p, q, v.get_ui());
    }
  }
  return table;
}

LaurentPolynomial hodge_u_specialization(const Graph& g) {
  if (!g.connected())
    fail(errc::disconnected, "u-specialization needs a connected graph");
  int k = g.n - 1;
  auto c = y_free_coeffs(tutte(g), k);
  // T(1 − (1+u)²/u², 0) · (−u²)^k, assembled termwise:
  //   Σ_i c_i (−1)^{i+k} (1+2u)^i u^{2(k−i)}
  LaurentPolynomial out;
  for (int i = 0; i <= k; ++i) {
    if (c[i] == 0) continue;
    int sign = ((i + k) % 2) ? -1 : 1;
    for (int j = 0; j <= i; ++j) {
      mpz_class coeff = c[i] * binom64(i, j);
      mpz_class scaled = coeff << j;  // ·2^j
      out.add_term(j + 2 * (k - i),
                   mpq_class(sign) * mpq_class(scaled));
    }
  }
  if (!out.is_polynomial() || out.coeff(0) != 1)
    throw std::logic_error("u-specialization must be a polynomial with constant term 1");
  return out;
}

}  // namespace ellarr
