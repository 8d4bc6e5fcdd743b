#ifndef CREMONA_MATRIX_HPP
#define CREMONA_MATRIX_HPP

#include <optional>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// Dense exact matrix over the base field.
class Matrix {
 public:
  Matrix(const Field& f, int rows, int cols)
      : fld_(f), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows * cols), Scalar::zero(f)) {}
  static Matrix identity(const Field& f, int n);

  const Field& field() const { return fld_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  Matrix scaled(const Scalar& s) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  Scalar det() const;  // square only
  std::optional<Matrix> inverse_opt() const;
  Matrix inverse() const;  // throws InvalidParameter when singular
  bool is_identity() const;
  bool is_scalar_multiple_of_identity() const;

 private:
  Field fld_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// Projective equivalence class of an invertible matrix; the stored
// representative is normalized so its first nonzero entry (row-major) is 1.
class ProjMatrix {
 public:
  explicit ProjMatrix(const Matrix& m);
  static ProjMatrix identity(const Field& f, int size);

  const Matrix& rep() const { return m_; }
  int size() const { return m_.rows(); }
  const Field& field() const { return m_.field(); }

  // Canonical lift used for determinant-class bookkeeping: over the
  // rationals the primitive integer matrix with positive first nonzero
  // entry; over a prime field the normalized representative itself.
  Matrix canonical_lift() const;

  ProjMatrix inverse() const { return ProjMatrix(m_.inverse()); }
  friend ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b) {
    return ProjMatrix(a.m_ * b.m_);
  }
  friend bool operator==(const ProjMatrix& a, const ProjMatrix& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const ProjMatrix& a, const ProjMatrix& b) { return !(a == b); }

 private:
  Matrix m_;
};

}  // namespace cremona

#endif
