#include "cremona/matrix.hpp"

namespace cremona {

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.fld_ == b.fld_))
    throw ValidationError(ValidationKind::SizeMismatch, "matrix product shapes");
  Matrix r(a.fld_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.fld_ == b.fld_))
    throw ValidationError(ValidationKind::SizeMismatch, "matrix sum shapes");
  Matrix r(a.fld_, a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.fld_ == b.fld_)) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    if (a.a_[k] != b.a_[k]) return false;
  return true;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(fld_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * s;
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw ValidationError(ValidationKind::SizeMismatch, "matrix-vector shapes");
  std::vector<Scalar> r(static_cast<std::size_t>(rows_), Scalar::zero(fld_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(i)] =
        r[static_cast<std::size_t>(i)] + at(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

Scalar Matrix::det() const {
  if (rows_ != cols_)
    throw ValidationError(ValidationKind::SizeMismatch, "determinant of non-square matrix");
  Matrix m = *this;
  Scalar d = Scalar::one(fld_);
  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int r = c; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { pivot = r; break; }
    if (pivot < 0) return Scalar::zero(fld_);
    if (pivot != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      d = -d;
    }
    d = d * m.at(c, c);
    Scalar inv = m.at(c, c).inverse();
    for (int r = c + 1; r < rows_; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Scalar factor = m.at(r, c) * inv;
      for (int j = c; j < cols_; ++j)
        m.at(r, j) = m.at(r, j) - factor * m.at(c, j);
    }
  }
  return d;
}

std::optional<Matrix> Matrix::inverse_opt() const {
  if (rows_ != cols_)
    throw ValidationError(ValidationKind::SizeMismatch, "inverse of non-square matrix");
  Matrix m = *this;
  Matrix inv = identity(fld_, rows_);
  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int r = c; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) { pivot = r; break; }
    if (pivot < 0) return std::nullopt;
    if (pivot != c)
      for (int j = 0; j < cols_; ++j) {
        std::swap(m.at(pivot, j), m.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    Scalar s = m.at(c, c).inverse();
    for (int j = 0; j < cols_; ++j) {
      m.at(c, j) = m.at(c, j) * s;
      inv.at(c, j) = inv.at(c, j) * s;
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      Scalar factor = m.at(r, c);
      for (int j = 0; j < cols_; ++j) {
        m.at(r, j) = m.at(r, j) - factor * m.at(c, j);
        inv.at(r, j) = inv.at(r, j) - factor * inv.at(c, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::inverse() const {
  auto inv = inverse_opt();
  if (!inv)
    throw ValidationError(ValidationKind::InvalidParameter, "singular matrix");
  return *inv;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_scalar_multiple_of_identity() const {
  if (rows_ != cols_) return false;
  const Scalar& d = at(0, 0);
  if (d.is_zero()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && at(i, j) != d) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

ProjMatrix::ProjMatrix(const Matrix& m) : m_(m) {
  if (m.rows() != m.cols())
    throw ValidationError(ValidationKind::SizeMismatch, "projective matrix must be square");
  if (m.det().is_zero())
    throw ValidationError(ValidationKind::InvalidParameter,
                          "projective matrix must be invertible");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m_.at(i, j).is_zero()) {
        m_ = m_.scaled(m_.at(i, j).inverse());
        return;
      }
}

ProjMatrix ProjMatrix::identity(const Field& f, int size) {
  return ProjMatrix(Matrix::identity(f, size));
}

Matrix ProjMatrix::canonical_lift() const {
  if (!field().is_rationals()) return m_;
  mpz_class lcm_den(1), gcd_num(0);
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) {
      const mpq_class& q = m_.at(i, j).rat();
      if (q == 0) continue;
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
      lcm_den = l;
    }
  Matrix lift = m_.scaled(Scalar::rational(mpq_class(lcm_den)));
  for (int i = 0; i < lift.rows(); ++i)
    for (int j = 0; j < lift.cols(); ++j) {
      const mpq_class& q = lift.at(i, j).rat();
      if (q == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), q.get_num().get_mpz_t());
      gcd_num = g;
    }
  if (gcd_num == 0) gcd_num = 1;
  lift = lift.scaled(Scalar::rational(mpq_class(mpz_class(1), gcd_num)));
  for (int i = 0; i < lift.rows(); ++i)
    for (int j = 0; j < lift.cols(); ++j) {
      if (lift.at(i, j).is_zero()) continue;
      if (lift.at(i, j).sign() < 0) lift = lift.scaled(Scalar::from_int(field(), -1));
      return lift;
    }
  return lift;
}

}  // namespace cremona
