#include "cremona/tpoly.hpp"

#include <algorithm>

namespace cremona {

TPoly TPoly::constant(Scalar s) {
  TPoly p(s.field());
  if (!s.is_zero()) p.c_.push_back(std::move(s));
  return p;
}

TPoly TPoly::variable(const Field& f) { return monomial(Scalar::one(f), 1); }

TPoly TPoly::monomial(Scalar s, std::size_t k) {
  TPoly p(s.field());
  if (!s.is_zero()) {
    p.c_.assign(k, Scalar::zero(s.field()));
    p.c_.push_back(std::move(s));
  }
  return p;
}

std::size_t TPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return k;
  return static_cast<std::size_t>(-1);
}

Scalar TPoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : Scalar::zero(fld_);
}

Scalar TPoly::constant_value() const {
  return c_.empty() ? Scalar::zero(fld_) : c_[0];
}

Scalar TPoly::eval(const Scalar& a) const {
  Scalar v = Scalar::zero(fld_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * a + *it;
  return v;
}

TPoly TPoly::shifted_down(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  TPoly p(fld_);
  p.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
  p.trim();
  return p;
}

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::operator-() const {
  TPoly p(fld_);
  p.c_.reserve(c_.size());
  for (const auto& s : c_) p.c_.push_back(-s);
  return p;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  TPoly p(a.fld_);
  std::size_t m = std::max(a.c_.size(), b.c_.size());
  p.c_.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    Scalar s = Scalar::zero(a.fld_);
    if (k < a.c_.size()) s = s + a.c_[k];
    if (k < b.c_.size()) s = s + b.c_[k];
    p.c_.push_back(std::move(s));
  }
  p.trim();
  return p;
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly p(a.fld_);
  if (a.is_zero() || b.is_zero()) return p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.fld_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      p.c_[i + j] = p.c_[i + j] + a.c_[i] * b.c_[j];
  }
  p.trim();
  return p;
}

TPoly TPoly::scaled(const Scalar& s) const {
  TPoly p(fld_);
  if (s.is_zero()) return p;
  p.c_.reserve(c_.size());
  for (const auto& c : c_) p.c_.push_back(c * s);
  p.trim();
  return p;
}

bool operator==(const TPoly& a, const TPoly& b) {
  if (!(a.fld_ == b.fld_) || a.c_.size() != b.c_.size()) return false;
  for (std::size_t k = 0; k < a.c_.size(); ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return true;
}

bool operator<(const TPoly& a, const TPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t k = a.c_.size(); k-- > 0;) {
    if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
  }
  return false;
}

}  // namespace cremona
