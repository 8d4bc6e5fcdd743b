#ifndef CREMONA_FAMILY_HPP
#define CREMONA_FAMILY_HPP

#include "cremona/cremona_map.hpp"

namespace cremona {

// One-parameter family of birational maps: an (n+1)-tuple with coefficients
// in k[t], content-free with t-adic valuation 0 as a tuple, together with
// the matching inverse tuple. Every specialization at a sample in
// sample_checked has been verified as a certified map.
class Family {
 public:
  // Builds a family and verifies its certificate symbolically over k[t]
  // (two-sided composite normalizes to the identity) plus the t=0 and t=1
  // specializations.
  static Family certified(std::vector<MultiPoly> comps,
                          std::vector<MultiPoly> inverse);
  // Same checks except the symbolic one; for tuples whose certificate holds
  // by construction (products and inverses of certified families).
  static Family from_certified_parts(std::vector<MultiPoly> comps,
                                     std::vector<MultiPoly> inverse);
  static Family constant(const CremonaMap& f);

  int n() const { return static_cast<int>(comps_.size()) - 1; }
  const Field& field() const { return comps_[0].domain().base; }
  const std::vector<MultiPoly>& components() const { return comps_; }
  const std::vector<MultiPoly>& inverse_components() const { return inverse_; }
  const std::vector<Scalar>& sample_checked() const { return checked_; }
  Family with_checked(std::vector<Scalar> extra) const;

  int x_degree() const;
  int t_degree() const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.comps_ == b.comps_ && a.inverse_ == b.inverse_;
  }
  friend bool operator!=(const Family& a, const Family& b) { return !(a == b); }

 private:
  Family() = default;
  static Family build(std::vector<MultiPoly> comps, std::vector<MultiPoly> inverse,
                      bool symbolic_check);
  std::vector<MultiPoly> comps_;
  std::vector<MultiPoly> inverse_;
  std::vector<Scalar> checked_;
};

// Substitutes t := a and normalizes; the result carries the specialized
// inverse as its certificate. DegenerateSpecialization when the tuple
// collapses or the certificate fails at a.
CremonaMap specialize(const Family& nu, const Scalar& a);

// Pointwise composition: specialize(product, a) = specialize(a1, a) .
// specialize(a2, a).
Family family_product(const Family& a1, const Family& a2);

// Pointwise inverse (swaps the two tuples).
Family family_inverse(const Family& a);

// The conjugation-limit family of a certified map g at a fixed point p
// where g is a local isomorphism: rho(a) = mu^-1 . nu(a)^-1 . (mu g mu^-1)
// . nu(a) . mu for a != 0, where mu moves p to [1:0:...:0] (a coordinate
// transposition followed by a chart translation) and nu(a) is the scaling
// [x0 : a*x1 : ... : a*xn]. The minimal t-power and content are cleared, so
// rho(1) = g and rho(0) = linear(derivative_at_fixed_point(g, p)) exactly.
Family conj_limit(const CremonaMap& g, const Point& p);

struct SampleCheck {
  Scalar t;
  bool ok = false;
  int degree = -1;
  std::string note;
};

struct FamilyReport {
  std::vector<SampleCheck> samples;
  bool all_ok = true;
};

// Specializes at each sample and runs certificate verification; failures
// are reported, never thrown.
FamilyReport verify_family(const Family& nu, std::span<const Scalar> samples);

// The family with the report's passing samples appended to sample_checked.
Family record_checked(const Family& nu, const FamilyReport& report);

}  // namespace cremona

#endif
