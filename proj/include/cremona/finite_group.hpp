#ifndef CREMONA_FINITE_GROUP_HPP
#define CREMONA_FINITE_GROUP_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

// Arithmetic tables for GF(q), q in {2,3,4,5,7,8,9}. Elements are encoded
// as 0..q-1, digits base p of the polynomial representative; the extension
// fields use the moduli x^2+x+1 (GF4), x^3+x+1 (GF8), x^2+1 (GF9).
class SmallField {
 public:
  explicit SmallField(int q);

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const;
  int inv(int a) const;  // DivisionByZero on 0
  bool is_square(int a) const;

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
           static_cast<std::size_t>(b);
  }
  int q_, p_, deg_;
  std::vector<int> add_, mul_;
};

// 2x2 matrix over GF(q), canonical projective form: first nonzero entry
// (reading a, b, c, d) equals 1.
struct PglElement {
  std::array<int, 4> m;  // a b ; c d
  friend bool operator==(const PglElement&, const PglElement&) = default;
  std::string str() const;
};

// Full multiplication table of PGL_2(F_q).
class PglTable {
 public:
  PglTable(SmallField f, std::vector<PglElement> elems);

  int q() const { return fld_.q(); }
  const SmallField& field() const { return fld_; }
  int order() const { return static_cast<int>(elems_.size()); }
  int identity_index() const { return id_; }
  const PglElement& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  int mul(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * elems_.size() +
                  static_cast<std::size_t>(j)];
  }
  int inv(int i) const { return inv_[static_cast<std::size_t>(i)]; }

  // Every determinant (of the canonical representative) a square in GF(q);
  // equivalent to PGL_2 = PSL_2.
  bool psl_equals_pgl() const;

  // Associativity spot check on a deterministic pseudo-random sample.
  bool spot_check_associative(int samples = 2000) const;

 private:
  SmallField fld_;
  std::vector<PglElement> elems_;
  std::vector<int> table_;
  std::vector<int> inv_;
  int id_ = -1;
};

// Enumerates all q^3 - q elements and the multiplication table.
PglTable pgl2_enumerate(int q);

// True iff the normal closure of every non-identity element is the whole
// group, computed by conjugacy-class saturation.
bool is_simple(const PglTable& g);

}  // namespace cremona

#endif
