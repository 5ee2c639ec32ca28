#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace ellarr {

class LaurentPolynomial;

// x^i y^j ordered for printing: total degree descending, then x-exponent
// descending — the usual graded-lex reading order of the polynomials here.
struct GradedLexDesc {
  bool operator()(const std::pair<int, int>& a,
                  const std::pair<int, int>& b) const {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
};

// Exact bivariate polynomial over Z.
class BivariatePolynomial {
public:
  using Map = std::map<std::pair<int, int>, mpz_class, GradedLexDesc>;

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(mpz_class c);
  static BivariatePolynomial monomial(int i, int j, mpz_class c = 1);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int i, int j) const;
  int x_degree() const;

  void add_term(int i, int j, const mpz_class& c);  // accumulate, drop zeros

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  friend BivariatePolynomial operator+(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&,
                         const BivariatePolynomial&) = default;

  mpq_class eval(const mpq_class& x, const mpq_class& y) const;
  // Substitute Laurent polynomials for x and y (exact).
  LaurentPolynomial specialize(const LaurentPolynomial& x,
                               const LaurentPolynomial& y) const;

  std::string to_string(const std::string& x = "x",
                        const std::string& y = "y") const;

private:
  Map terms_;
};

// Univariate Laurent polynomial with exact rational coefficients.
class LaurentPolynomial {
public:
  using Map = std::map<int, mpq_class>;  // exponent ascending

  LaurentPolynomial() = default;
  static LaurentPolynomial constant(mpq_class c);
  static LaurentPolynomial monomial(int e, mpq_class c = 1);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(int e) const;
  int min_exponent() const;  // 0 when zero
  int degree() const;        // 0 when zero

  void add_term(int e, const mpq_class& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

  LaurentPolynomial pow(unsigned e) const;
  mpq_class eval(const mpq_class& t) const;
  // Σ c_e · arg^e; requires this to have no negative exponents.
  LaurentPolynomial substitute(const LaurentPolynomial& arg) const;

  bool is_polynomial() const;     // no negative exponents
  bool integer_coeffs() const;
  bool nonnegative_coeffs() const;

  std::string to_string(const std::string& var = "t") const;

private:
  Map terms_;
};

}  // namespace ellarr
