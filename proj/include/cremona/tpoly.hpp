#ifndef CREMONA_TPOLY_HPP
#define CREMONA_TPOLY_HPP

#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// Dense univariate polynomial in the family parameter t, used as the
// coefficient domain of MultiPoly when a family parameter is present.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class TPoly {
 public:
  explicit TPoly(const Field& f) : fld_(f) {}
  static TPoly constant(Scalar s);
  static TPoly variable(const Field& f);  // t itself
  static TPoly monomial(Scalar s, std::size_t k);

  const Field& field() const { return fld_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // t-adic valuation; zero polynomial reports a large sentinel.
  std::size_t valuation() const;

  Scalar coeff(std::size_t k) const;
  Scalar constant_value() const;  // requires is_constant
  // Lowest-degree nonzero coefficient (requires nonzero).
  const Scalar& low_coeff() const { return c_[valuation()]; }

  Scalar eval(const Scalar& a) const;
  TPoly shifted_down(std::size_t k) const;  // divide by t^k (requires valuation >= k)

  TPoly operator-() const;
  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly scaled(const Scalar& s) const;
  friend bool operator==(const TPoly& a, const TPoly& b);
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }
  // Deterministic order for canonical iteration (degree, then coefficients).
  friend bool operator<(const TPoly& a, const TPoly& b);

 private:
  void trim();
  Field fld_;
  std::vector<Scalar> c_;  // c_[k] is the coefficient of t^k
};

}  // namespace cremona

#endif
