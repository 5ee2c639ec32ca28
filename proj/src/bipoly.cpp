#include "ellarr/bipoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ellarr {

namespace {

// Shared term formatting: sign-aware joining, coefficient 1 elided next to
// variables, no spaces ("x^2+x+y", "1+14t+82t^2", "2x-3").
void append_term(std::string& out, const mpz_class& coeff,
                 const std::string& vars) {
  bool negative = coeff < 0;
  mpz_class mag = abs(coeff);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? '-' : '+';
  }
  if (vars.empty() || mag != 1) out += mag.get_str();
  out += vars;
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

BivariatePolynomial BivariatePolynomial::constant(mpz_class c) {
  return monomial(0, 0, std::move(c));
}

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, mpz_class c) {
  BivariatePolynomial p;
  p.add_term(i, j, c);
  return p;
}

mpz_class BivariatePolynomial::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int BivariatePolynomial::x_degree() const {
  int d = 0;
  for (const auto& [ij, c] : terms_) d = std::max(d, ij.first);
  return d;
}

void BivariatePolynomial::add_term(int i, int j, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(
    const BivariatePolynomial& o) {
  for (const auto& [ij, c] : o.terms_) add_term(ij.first, ij.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(
    const BivariatePolynomial& o) {
  for (const auto& [ij, c] : o.terms_) add_term(ij.first, ij.second, -c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a,
                              const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ij, c] : a.terms_)
    for (const auto& [kl, d] : b.terms_)
      out.add_term(ij.first + kl.first, ij.second + kl.second, c * d);
  return out;
}

mpq_class BivariatePolynomial::eval(const mpq_class& x,
                                    const mpq_class& y) const {
  mpq_class sum = 0;
  for (const auto& [ij, c] : terms_) {
    mpq_class term = c;
    for (int i = 0; i < ij.first; ++i) term *= x;
    for (int j = 0; j < ij.second; ++j) term *= y;
    sum += term;
  }
  return sum;
}

LaurentPolynomial BivariatePolynomial::specialize(
    const LaurentPolynomial& x, const LaurentPolynomial& y) const {
  // Incremental powers keyed by exponent; terms_ is not sorted by (i,j)
  // separately, so build power caches on demand.
  std::map<int, LaurentPolynomial> xp, yp;
  xp[0] = yp[0] = LaurentPolynomial::constant(1);
  auto pow_of = [](std::map<int, LaurentPolynomial>& cache,
                   const LaurentPolynomial& base, int e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    auto prev = cache.lower_bound(e);
    --prev;  // cache always holds 0
    LaurentPolynomial acc = prev->second;
    for (int i = prev->first; i < e; ++i) acc = acc * base;
    cache[e] = acc;
    return acc;
  };
  LaurentPolynomial out;
  for (const auto& [ij, c] : terms_) {
    LaurentPolynomial term = pow_of(xp, x, ij.first) * pow_of(yp, y, ij.second);
    for (const auto& [e, q] : term.terms())
      out.add_term(e, q * mpq_class(c));
  }
  return out;
}

std::string BivariatePolynomial::to_string(const std::string& x,
                                           const std::string& y) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [ij, c] : terms_)
    append_term(out, c, power(x, ij.first) + power(y, ij.second));
  return out;
}

LaurentPolynomial LaurentPolynomial::constant(mpq_class c) {
  return monomial(0, std::move(c));
}

LaurentPolynomial LaurentPolynomial::monomial(int e, mpq_class c) {
  LaurentPolynomial p;
  p.add_term(e, c);
  return p;
}

mpq_class LaurentPolynomial::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int LaurentPolynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(int e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) out.add_term(e + f, c * d);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial acc = constant(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

mpq_class LaurentPolynomial::eval(const mpq_class& t) const {
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class pw = 1;
    for (int i = 0; i < std::abs(e); ++i) pw *= t;
    if (e < 0) pw = 1 / pw;
    sum += c * pw;
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::substitute(
    const LaurentPolynomial& arg) const {
  LaurentPolynomial out, pw = constant(1);
  int done = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0)
      throw std::logic_error("substitute: negative exponent in source");
    while (done < e) {
      pw = pw * arg;
      ++done;
    }
    for (const auto& [f, d] : pw.terms()) out.add_term(f, c * d);
  }
  return out;
}

bool LaurentPolynomial::is_polynomial() const { return min_exponent() >= 0; }

bool LaurentPolynomial::integer_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

bool LaurentPolynomial::nonnegative_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (c.get_den() == 1) {
      append_term(out, c.get_num(), power(var, e));
    } else {
      // rational coefficients only appear in intermediate values
      bool neg = c < 0;
      if (out.empty()) {
        if (neg) out += '-';
      } else {
        out += neg ? '-' : '+';
      }
      mpq_class mag = abs(c);
      std::ostringstream os;
      os << mag;
      out += os.str() + (e ? "*" + power(var, e) : "");
    }
  }
  return out;
}

}  // namespace ellarr
