#include "cremona/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cremona {

namespace {

struct FieldSpec {
  int p, deg;
  std::vector<int> modulus;  // coefficients of the irreducible, low to high
};

FieldSpec spec_for(int q) {
  switch (q) {
    case 2: return {2, 1, {}};
    case 3: return {3, 1, {}};
    case 5: return {5, 1, {}};
    case 7: return {7, 1, {}};
    case 4: return {2, 2, {1, 1, 1}};  // x^2 + x + 1
    case 8: return {2, 3, {1, 1, 0, 1}};  // x^3 + x + 1
    case 9: return {3, 2, {1, 0, 1}};  // x^2 + 1
    default:
      throw ValidationError(ValidationKind::UnsupportedFieldSize,
                            "supported sizes are 2,3,4,5,7,8,9; got " +
                                std::to_string(q));
  }
}

std::vector<int> digits(int a, int p, int deg) {
  std::vector<int> d(static_cast<std::size_t>(deg), 0);
  for (int i = 0; i < deg; ++i) { d[static_cast<std::size_t>(i)] = a % p; a /= p; }
  return d;
}

int undigits(const std::vector<int>& d, int p, int deg) {
  int a = 0;
  for (int i = deg - 1; i >= 0; --i) a = a * p + d[static_cast<std::size_t>(i)];
  return a;
}

}  // namespace

SmallField::SmallField(int q) : q_(q) {
  FieldSpec s = spec_for(q);
  p_ = s.p;
  deg_ = s.deg;
  add_.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  mul_.resize(add_.size());
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p_, deg_);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p_, deg_);
      std::vector<int> sum(static_cast<std::size_t>(deg_), 0);
      for (int i = 0; i < deg_; ++i)
        sum[static_cast<std::size_t>(i)] =
            (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
      add_[idx(a, b)] = undigits(sum, p_, deg_);

      // polynomial product reduced modulo the irreducible
      std::vector<int> prod(static_cast<std::size_t>(2 * deg_ - 1), 0);
      for (int i = 0; i < deg_; ++i)
        for (int j = 0; j < deg_; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] +
               da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
              p_;
      for (int d = 2 * deg_ - 2; d >= deg_; --d) {
        int c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        // x^deg = -(modulus below top), applied at shift d - deg
        for (int i = 0; i < deg_; ++i) {
          int coeff = s.modulus[static_cast<std::size_t>(i)];
          if (coeff == 0) continue;
          std::size_t pos = static_cast<std::size_t>(d - deg_ + i);
          prod[pos] = ((prod[pos] - c * coeff) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(deg_));
      mul_[idx(a, b)] = undigits(prod, p_, deg_);
    }
  }
}

int SmallField::neg(int a) const {
  for (int b = 0; b < q_; ++b)
    if (add(a, b) == 0) return b;
  return 0;
}

int SmallField::inv(int a) const {
  if (a == 0)
    throw ValidationError(ValidationKind::DivisionByZero, "inverse of zero in GF(q)");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  return 0;  // unreachable
}

bool SmallField::is_square(int a) const {
  for (int w = 0; w < q_; ++w)
    if (mul(w, w) == a) return true;
  return false;
}

std::string PglElement::str() const {
  return std::to_string(m[0]) + "," + std::to_string(m[1]) + ";" +
         std::to_string(m[2]) + "," + std::to_string(m[3]);
}

namespace {

PglElement canonical(const SmallField& f, PglElement e) {
  for (int v : e.m) {
    if (v == 0) continue;
    int s = f.inv(v);
    for (auto& x : e.m) x = f.mul(x, s);
    return e;
  }
  return e;
}

int det_of(const SmallField& f, const PglElement& e) {
  int ad = f.mul(e.m[0], e.m[3]);
  int bc = f.mul(e.m[1], e.m[2]);
  return f.add(ad, f.neg(bc));
}

}  // namespace

PglTable::PglTable(SmallField f, std::vector<PglElement> elems)
    : fld_(std::move(f)), elems_(std::move(elems)) {
  std::map<std::array<int, 4>, int> index;
  for (std::size_t i = 0; i < elems_.size(); ++i) index[elems_[i].m] = static_cast<int>(i);
  table_.assign(elems_.size() * elems_.size(), -1);
  inv_.assign(elems_.size(), -1);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const auto& a = elems_[i].m;
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      const auto& b = elems_[j].m;
      PglElement prod{{fld_.add(fld_.mul(a[0], b[0]), fld_.mul(a[1], b[2])),
                       fld_.add(fld_.mul(a[0], b[1]), fld_.mul(a[1], b[3])),
                       fld_.add(fld_.mul(a[2], b[0]), fld_.mul(a[3], b[2])),
                       fld_.add(fld_.mul(a[2], b[1]), fld_.mul(a[3], b[3]))}};
      table_[i * elems_.size() + j] = index.at(canonical(fld_, prod).m);
    }
  }
  PglElement e{{1, 0, 0, 1}};
  id_ = index.at(e.m);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = 0; j < elems_.size(); ++j)
      if (mul(static_cast<int>(i), static_cast<int>(j)) == id_) {
        inv_[i] = static_cast<int>(j);
        break;
      }
}

bool PglTable::psl_equals_pgl() const {
  for (const auto& e : elems_)
    if (!fld_.is_square(det_of(fld_, e))) return false;
  return true;
}

bool PglTable::spot_check_associative(int samples) const {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<int>(state % static_cast<std::uint64_t>(order()));
  };
  for (int s = 0; s < samples; ++s) {
    int a = next(), b = next(), c = next();
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

PglTable pgl2_enumerate(int q) {
  SmallField f(q);
  std::vector<PglElement> elems;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          PglElement e{{a, b, c, d}};
          if (det_of(f, e) == 0) continue;
          if (canonical(f, e).m != e.m) continue;  // keep canonical reps only
          elems.push_back(e);
        }
  PglTable table(std::move(f), std::move(elems));
  if (table.order() != q * q * q - q)
    throw ValidationError(ValidationKind::InvalidParameter,
                          "PGL2 enumeration has the wrong order");
  return table;
}

bool is_simple(const PglTable& g) {
  int n = g.order();
  int id = g.identity_index();
  // conjugacy classes
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    int cid = static_cast<int>(classes.size());
    classes.emplace_back();
    std::vector<int> stack{x};
    cls[static_cast<std::size_t>(x)] = cid;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      classes.back().push_back(y);
      for (int t = 0; t < n; ++t) {
        int z = g.mul(g.mul(t, y), g.inv(t));
        if (cls[static_cast<std::size_t>(z)] < 0) {
          cls[static_cast<std::size_t>(z)] = cid;
          stack.push_back(z);
        }
      }
    }
  }
  // normal closure of each non-identity class: the subgroup generated by
  // the class (a union of classes generates a normal subgroup)
  for (const auto& klass : classes) {
    if (klass.size() == 1 && klass[0] == id) continue;
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    auto add = [&](int v) {
      if (!in[static_cast<std::size_t>(v)]) {
        in[static_cast<std::size_t>(v)] = 1;
        queue.push_back(v);
      }
    };
    add(id);
    for (int v : klass) add(v);
    std::size_t head = 0;
    std::size_t count = queue.size();
    while (head < queue.size()) {
      int x = queue[head++];
      for (int v : klass) {
        int y = g.mul(x, v);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          queue.push_back(y);
          ++count;
        }
      }
    }
    if (static_cast<int>(count) != n) return false;
  }
  return true;
}

}  // namespace cremona
