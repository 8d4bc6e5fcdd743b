#ifndef CREMONA_LINGROUP_HPP
#define CREMONA_LINGROUP_HPP

#include "cremona/family.hpp"
#include "cremona/point.hpp"

namespace cremona {

// Elementary matrix of the first kind, I + lambda*e_{row,col}. Indices are
// 1-based, matching the classical e_{i,j} notation; lambda = 0 is padding.
struct Transvection {
  int size = 0;
  int row = 0, col = 0;
  Scalar lambda;

  Matrix matrix() const;
  Transvection inverted() const { return {size, row, col, -lambda}; }
};

class TransvectionWord {
 public:
  TransvectionWord(const Field& f, int size) : fld_(f), size_(size) {}

  const Field& field() const { return fld_; }
  int size() const { return size_; }
  const std::vector<Transvection>& factors() const { return factors_; }

  void push(int row, int col, Scalar lambda);
  void append(const TransvectionWord& w);
  TransvectionWord inverse() const;  // reversed factors, negated parameters
  void pad_to(std::size_t len);      // appends lambda = 0 factors

  Matrix product() const;

 private:
  Field fld_;
  int size_;
  std::vector<Transvection> factors_;
};

// Uniform word length L(m) = m(m-1) + 4(m-1): Gauss-Jordan clearing budget
// plus the four-transvection resolution of each 2x2 diagonal block.
std::size_t uniform_word_length(int m);

// Writes an SL_m matrix as a product of exactly L(m) transvections (padded
// with lambda = 0). Gauss-Jordan clears the off-diagonal entries, then the
// remaining diagonal is resolved right-to-left by the 2x2 identity
// (1,2,c-1)(2,1,1)(1,2,1/c-1)(2,1,-c) = diag(c, 1/c). Inputs that need
// zero-pivot repairs beyond the clearing budget fall back to a
// pivot-normalizing elimination with the same contract.
TransvectionWord sl_decompose(const Matrix& m);

// The straight-line family between two SL_m matrices through the product
// morphism on transvection parameters: the factors of A are scaled by
// (1-t) and those of B by t, so every specialization stays in SL_m and the
// endpoints are exact.
Family psl_path(const Matrix& a, const Matrix& b);

struct DetClass {
  Scalar witness;       // determinant of the canonical lift
  bool in_psl = false;  // witness is an (n+1)-th power in the base field
};

// Image of a projective matrix under det: PGL_{n+1} -> k*/(k*)^{n+1};
// trivial class means the map lifts into SL_{n+1}.
DetClass det_class(const ProjMatrix& p);

// SL lift of a projective matrix with trivial determinant class.
Matrix sl_lift(const ProjMatrix& p);

// A word of at most 2(n+1) factors (padded to exactly that length) whose
// product maps `from` to `to` projectively.
TransvectionWord transvection_to_point(const Point& from, const Point& to);

}  // namespace cremona

#endif
