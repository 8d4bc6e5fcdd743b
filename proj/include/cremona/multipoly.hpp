#ifndef CREMONA_MULTIPOLY_HPP
#define CREMONA_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cremona/tpoly.hpp"

namespace cremona {

// Coefficient domain of a multivariate polynomial: a base field, optionally
// extended by the distinguished family parameter t. The parameter is a
// coefficient-domain variable, never one of the x_i.
struct CoeffDomain {
  Field base = Field::rationals();
  bool with_parameter = false;

  friend bool operator==(const CoeffDomain&, const CoeffDomain&) = default;
  std::string str() const {
    return base.str() + (with_parameter ? "[t]" : "");
  }
};

// Exponent vector for the homogeneous coordinates x_0..x_n.
struct ExpVec {
  std::vector<std::uint32_t> e;

  std::uint32_t total() const {
    std::uint32_t d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool divides(const ExpVec& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend ExpVec operator+(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
  }
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
  }
  friend bool operator==(const ExpVec&, const ExpVec&) = default;
};

// Graded-lexicographic order, iterated leading-term first: higher total
// degree precedes, ties broken lexicographically with x_0 largest.
struct GradedLexDesc {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    std::uint32_t da = a.total(), db = b.total();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

// Sparse multivariate polynomial over a coefficient domain. Terms are kept
// in descending graded-lex order with no zero coefficients stored.
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, TPoly, GradedLexDesc>;

  MultiPoly(CoeffDomain dom, int nvars) : dom_(std::move(dom)), nvars_(nvars) {}
  static MultiPoly zero(const CoeffDomain& dom, int nvars);
  static MultiPoly constant(const CoeffDomain& dom, int nvars, const Scalar& s);
  static MultiPoly variable(const CoeffDomain& dom, int nvars, int i);
  static MultiPoly monomial(const CoeffDomain& dom, ExpVec ev, TPoly c);
  // t as an element of a with_parameter domain.
  static MultiPoly parameter(const CoeffDomain& dom, int nvars);

  const CoeffDomain& domain() const { return dom_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Total x-degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(int i) const;
  // Max t-degree over all coefficients; -1 if t-free.
  int t_degree() const;
  // Common total degree of all terms, if the polynomial is homogeneous
  // in the x variables (the zero polynomial is homogeneous of any degree).
  std::optional<int> homogeneous_degree() const;
  // Minimum t-adic valuation over all coefficients (nonzero polynomial).
  std::size_t t_valuation() const;

  void add_term(const ExpVec& ev, const TPoly& c);  // accumulating
  const TPoly& leading_coeff() const;               // graded-lex leading term
  const ExpVec& leading_exp() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Scalar& s) const;
  MultiPoly scaled(const TPoly& c) const;
  MultiPoly pow(unsigned k) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Exact substitution x_i <- images[i]. Images must share a domain whose
  // base field matches; the result lives in the images' domain/arity.
  // The domain of *this may be scalar while images carry the parameter.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  // Formal partial derivative in x_i; exponent multiples reduce in the field.
  MultiPoly derivative(int i) const;

  // Sum of the terms of total x-degree exactly j.
  MultiPoly graded_component(int j) const;

  // Evaluate at scalars (t-free domain).
  Scalar eval(std::span<const Scalar> xs) const;
  // Substitute x_0 = 1, dropping to the remaining variables (arity n).
  MultiPoly dehomogenize_at0() const;

  // Specialize the parameter t := a; result is over the scalar domain.
  MultiPoly specialize_parameter(const Scalar& a) const;
  // Reinterpret over the parameter domain (coefficients become constants).
  MultiPoly lift_to_parameter() const;
  // Divide every coefficient by t^k (requires t-valuation >= k).
  MultiPoly t_shifted_down(std::size_t k) const;

  std::string str() const;  // canonical printed form, see io.cpp

 private:
  static void require_same(const MultiPoly& a, const MultiPoly& b);
  CoeffDomain dom_;
  int nvars_;
  TermMap terms_;
};

}  // namespace cremona

#endif
