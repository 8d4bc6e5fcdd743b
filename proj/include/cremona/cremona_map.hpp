#ifndef CREMONA_CREMONA_MAP_HPP
#define CREMONA_CREMONA_MAP_HPP

#include <optional>
#include <span>
#include <vector>

#include "cremona/multipoly.hpp"
#include "cremona/point.hpp"
#include "cremona/polygcd.hpp"

namespace cremona {

// ---- projective tuple helpers (shared with the family machinery) ----

// Canonical form of a projective tuple: parameter valuation cleared (for
// parametric domains), polynomial content removed, and the whole tuple
// scaled so the first nonzero coefficient in component order (terms in
// graded-lex order, lowest t-power within a coefficient) equals 1.
std::vector<MultiPoly> normalize_tuple(std::vector<MultiPoly> comps);

// Raw composition outer . inner: substitutes the inner components into
// every outer component. No normalization.
std::vector<MultiPoly> substitute_tuple(std::span<const MultiPoly> outer,
                                        std::span<const MultiPoly> inner);

// Equality of rational maps by cross-multiplication, a_i b_j = a_j b_i.
bool tuples_projectively_equal(std::span<const MultiPoly> a,
                               std::span<const MultiPoly> b);

bool tuple_is_identity(std::span<const MultiPoly> comps);

// Components of the linear map given by a matrix.
std::vector<MultiPoly> linear_tuple(const Matrix& m, const CoeffDomain& dom);

// ---- birational maps of P^n with stored inverse certificates ----

class CremonaMap {
 public:
  // Normalizes a raw homogeneous tuple; the result carries no inverse.
  static CremonaMap normalize(std::vector<MultiPoly> comps);
  // Stores a claimed inverse without checking it (verify_certificate decides).
  static CremonaMap with_claimed_inverse(std::vector<MultiPoly> comps,
                                         std::vector<MultiPoly> inverse);
  // Verifies the two-sided composition and returns a certified map; throws
  // InvalidParameter when the claimed inverse is wrong.
  static CremonaMap certified(std::vector<MultiPoly> comps,
                              std::vector<MultiPoly> inverse);
  // Same verification, nullopt instead of a throw.
  static std::optional<CremonaMap> try_certify(std::vector<MultiPoly> comps,
                                               std::vector<MultiPoly> inverse);

  static CremonaMap identity(const Field& f, int n);
  static CremonaMap linear(const ProjMatrix& m);
  // [x1*x2*...*xn : ... ], the degree-n involution with all products of n
  // of the n+1 coordinates.
  static CremonaMap standard_involution(const Field& f, int n);
  // [x0 : a*x1 : (1/a)*x2 : x3 : ...], n >= 3.
  static CremonaMap scaling_map(const Scalar& a, int n);
  // [x0^2 : x0*x1 : x1*x2 : x0*x3 : ...], n >= 3, with its quadratic inverse.
  static CremonaMap dejonquieres(const Field& f, int n);
  // [x0*(x1+l*x2)+x1*x2 : x1*(x1+x2) : x2*(x1+x2) : ...], n >= 2; fixes both
  // [0:1:0:...] and [0:0:1:0:...].
  static CremonaMap two_fixed_point_gadget(const Scalar& lambda, int n);

  int n() const { return static_cast<int>(comps_.size()) - 1; }
  int degree() const { return degree_; }
  const Field& field() const { return comps_[0].domain().base; }
  const std::vector<MultiPoly>& components() const { return comps_; }
  bool has_inverse() const { return !inverse_.empty(); }
  bool is_certified() const { return certified_; }
  const std::vector<MultiPoly>& inverse_components() const;
  // Swapped components/inverse; requires a certified map.
  CremonaMap inverse_map() const;

  bool is_linear() const { return degree_ == 1; }
  bool is_identity() const;
  // Coefficient matrix of a linear map.
  ProjMatrix linear_matrix() const;

  friend bool operator==(const CremonaMap& a, const CremonaMap& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator!=(const CremonaMap& a, const CremonaMap& b) {
    return !(a == b);
  }

 private:
  CremonaMap() = default;
  friend CremonaMap compose(const CremonaMap& f, const CremonaMap& g);
  std::vector<MultiPoly> comps_;
  std::vector<MultiPoly> inverse_;
  bool certified_ = false;
  int degree_ = 0;
};

// f . g (g first). Certificates propagate without re-verification:
// (f.g)^-1 = g^-1 . f^-1 exactly.
CremonaMap compose(const CremonaMap& f, const CremonaMap& g);

// True iff both composites with the stored inverse normalize to the
// identity tuple. MissingInverse when no inverse is stored.
bool verify_certificate(const CremonaMap& f);

// Component-wise evaluation; nullopt encodes the indeterminacy locus.
std::optional<Point> evaluate(const CremonaMap& f, const Point& p);

// Jacobian of the chart expression of f at a fixed point p, extended to a
// projective matrix fixing p; nullopt when the Jacobian is singular.
std::optional<ProjMatrix> derivative_at_fixed_point(const CremonaMap& f,
                                                    const Point& p);

// p outside the indeterminacy loci on both sides, f^-1(f(p)) = p, and the
// chart Jacobian at p invertible.
bool is_local_iso_at(const CremonaMap& f, const Point& p);

}  // namespace cremona

#endif
