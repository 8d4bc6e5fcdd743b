#ifndef CREMONA_POINT_HPP
#define CREMONA_POINT_HPP

#include <vector>

#include "cremona/matrix.hpp"

namespace cremona {

// Projective point with a canonical representative: over the rationals a
// primitive integer vector with positive first nonzero entry, over a prime
// field a vector whose first nonzero entry is 1.
class Point {
 public:
  static Point make(const Field& f, std::vector<Scalar> coords);

  const Field& field() const { return fld_; }
  int n() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coords() const { return c_; }
  // Index of the first nonzero coordinate.
  int chart_index() const;

  friend bool operator==(const Point& a, const Point& b);
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

 private:
  Point(Field f, std::vector<Scalar> c) : fld_(std::move(f)), c_(std::move(c)) {}
  Field fld_;
  std::vector<Scalar> c_;
};

Point apply(const Matrix& m, const Point& p);
Point apply(const ProjMatrix& m, const Point& p);

}  // namespace cremona

#endif
