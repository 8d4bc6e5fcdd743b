#include "cremona/point.hpp"

namespace cremona {

Point Point::make(const Field& f, std::vector<Scalar> coords) {
  if (coords.empty())
    throw ValidationError(ValidationKind::ZeroTuple, "empty point");
  bool all_zero = true;
  for (const auto& c : coords) {
    if (!(c.field() == f))
      throw ValidationError(ValidationKind::FieldMismatch, "point coordinate field");
    if (!c.is_zero()) all_zero = false;
  }
  if (all_zero)
    throw ValidationError(ValidationKind::ZeroTuple, "projective point needs a nonzero coordinate");

  if (f.is_rationals()) {
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& c : coords) {
      if (c.is_zero()) continue;
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.rat().get_den().get_mpz_t());
      lcm_den = l;
    }
    for (auto& c : coords) c = c * Scalar::rational(mpq_class(lcm_den));
    for (const auto& c : coords) {
      if (c.is_zero()) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), c.rat().get_num().get_mpz_t());
      gcd_num = g;
    }
    Scalar scale = Scalar::rational(mpq_class(mpz_class(1), gcd_num));
    for (auto& c : coords) c = c * scale;
    for (const auto& c : coords) {
      if (c.is_zero()) continue;
      if (c.sign() < 0)
        for (auto& x : coords) x = -x;
      break;
    }
  } else {
    for (const auto& c : coords) {
      if (c.is_zero()) continue;
      Scalar inv = c.inverse();
      for (auto& x : coords) x = x * inv;
      break;
    }
  }
  return Point(f, std::move(coords));
}

int Point::chart_index() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

bool operator==(const Point& a, const Point& b) {
  if (!(a.fld_ == b.fld_) || a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Point apply(const Matrix& m, const Point& p) {
  return Point::make(p.field(), m.apply(p.coords()));
}

Point apply(const ProjMatrix& m, const Point& p) { return apply(m.rep(), p); }

}  // namespace cremona
