#include "cremona/lingroup.hpp"

#include <algorithm>

namespace cremona {

Matrix Transvection::matrix() const {
  Matrix m = Matrix::identity(lambda.field(), size);
  m.at(row - 1, col - 1) = m.at(row - 1, col - 1) + lambda;
  return m;
}

void TransvectionWord::push(int row, int col, Scalar lambda) {
  if (row == col || row < 1 || col < 1 || row > size_ || col > size_)
    throw ValidationError(ValidationKind::InvalidParameter,
                          "transvection indices out of range");
  factors_.push_back(Transvection{size_, row, col, std::move(lambda)});
}

void TransvectionWord::append(const TransvectionWord& w) {
  factors_.insert(factors_.end(), w.factors_.begin(), w.factors_.end());
}

TransvectionWord TransvectionWord::inverse() const {
  TransvectionWord w(fld_, size_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    w.factors_.push_back(it->inverted());
  return w;
}

void TransvectionWord::pad_to(std::size_t len) {
  while (factors_.size() < len)
    factors_.push_back(Transvection{size_, 1, 2, Scalar::zero(fld_)});
}

Matrix TransvectionWord::product() const {
  Matrix m = Matrix::identity(fld_, size_);
  for (const auto& f : factors_) {
    // right-multiply by I + lambda*e_{r,c}: column c gains lambda * column r
    if (f.lambda.is_zero()) continue;
    for (int i = 0; i < size_; ++i)
      m.at(i, f.col - 1) = m.at(i, f.col - 1) + f.lambda * m.at(i, f.row - 1);
  }
  return m;
}

std::size_t uniform_word_length(int m) {
  return static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) +
         4u * static_cast<std::size_t>(m - 1);
}

namespace {

// Emits the four-factor expansion of the embedded block diag(c, 1/c) at
// rows/cols (i, i+1), 1-based; skips c = 1.
void emit_diag_block(TransvectionWord& w, int i, const Scalar& c) {
  if (c.is_one()) return;
  const Field& k = c.field();
  Scalar one = Scalar::one(k);
  w.push(i, i + 1, c - one);
  w.push(i + 1, i, one);
  w.push(i, i + 1, c.inverse() - one);
  w.push(i + 1, i, -c);
}

// Gauss-Jordan clearing; emitted factors are the left multipliers applied
// to a (row_r += lambda * row_c is the factor (r, c, lambda)). With
// T_k...T_1 * M = A_final, the prefix word for M is the factor-wise
// inversion in unchanged order: M = T_1^-1 ... T_k^-1 * A_final.
struct Elimination {
  Matrix a;
  TransvectionWord applied;  // in application order

  explicit Elimination(const Matrix& m)
      : a(m), applied(m.field(), m.rows()) {}

  void row_op(int r, int c, const Scalar& lambda) {
    if (lambda.is_zero()) return;
    applied.push(r + 1, c + 1, lambda);
    for (int j = 0; j < a.cols(); ++j)
      a.at(r, j) = a.at(r, j) + lambda * a.at(c, j);
  }

  TransvectionWord prefix_word() const {
    TransvectionWord w(a.field(), a.rows());
    for (const auto& f : applied.factors()) w.push(f.row, f.col, -f.lambda);
    return w;
  }
};

TransvectionWord decompose_plain(const Matrix& m) {
  int sz = m.rows();
  Elimination e(m);
  // clear below the diagonal, column by column
  for (int c = 0; c < sz; ++c) {
    if (e.a.at(c, c).is_zero()) {
      int r = -1;
      for (int i = c + 1; i < sz; ++i)
        if (!e.a.at(i, c).is_zero()) { r = i; break; }
      // r exists: earlier columns are cleared and the matrix is invertible
      e.row_op(c, r, Scalar::one(m.field()));
    }
    Scalar pivot_inv = e.a.at(c, c).inverse();
    for (int r = c + 1; r < sz; ++r)
      if (!e.a.at(r, c).is_zero()) e.row_op(r, c, -(e.a.at(r, c) * pivot_inv));
  }
  // clear above the diagonal
  for (int c = 1; c < sz; ++c) {
    Scalar pivot_inv = e.a.at(c, c).inverse();
    for (int r = 0; r < c; ++r)
      if (!e.a.at(r, c).is_zero()) e.row_op(r, c, -(e.a.at(r, c) * pivot_inv));
  }
  // m = prefix * diag; resolve the diagonal right-to-left through the
  // cumulative products c_i = d_1 ... d_i
  TransvectionWord word = e.prefix_word();
  Scalar c = Scalar::one(m.field());
  for (int i = 0; i < sz - 1; ++i) {
    c = c * e.a.at(i, i);
    emit_diag_block(word, i + 1, c);
  }
  return word;
}

// Fallback used when zero-pivot repairs push the plain route past L(m):
// normalizes every pivot to 1 on the way, so no diagonal phase remains.
// Total factors <= (m-1)(m+2) <= L(m).
TransvectionWord decompose_pivot_normalizing(const Matrix& m) {
  int sz = m.rows();
  const Field& k = m.field();
  Elimination e(m);
  for (int c = 0; c < sz - 1; ++c) {
    if (!e.a.at(c, c).is_one()) {
      int r = -1;
      for (int i = c + 1; i < sz; ++i)
        if (!e.a.at(i, c).is_zero()) { r = i; break; }
      if (r < 0) {
        e.row_op(c + 1, c, Scalar::one(k));  // a(c,c) != 0 here
        r = c + 1;
      }
      e.row_op(c, r, (Scalar::one(k) - e.a.at(c, c)) / e.a.at(r, c));
    }
    for (int r = 0; r < sz; ++r)
      if (r != c && !e.a.at(r, c).is_zero()) e.row_op(r, c, -e.a.at(r, c));
  }
  // last diagonal entry equals det = 1; clear the last column
  for (int r = 0; r < sz - 1; ++r)
    if (!e.a.at(r, sz - 1).is_zero()) e.row_op(r, sz - 1, -e.a.at(r, sz - 1));
  return e.prefix_word();
}

}  // namespace

TransvectionWord sl_decompose(const Matrix& m) {
  if (m.rows() != m.cols())
    throw ValidationError(ValidationKind::SizeMismatch, "sl_decompose needs a square matrix");
  if (!m.det().is_one())
    throw ValidationError(ValidationKind::DeterminantNotOne,
                          "sl_decompose needs determinant exactly 1");
  std::size_t budget = uniform_word_length(m.rows());
  TransvectionWord word = decompose_plain(m);
  if (word.factors().size() > budget) word = decompose_pivot_normalizing(m);
  word.pad_to(budget);
  return word;
}

namespace {

using TRow = std::vector<TPoly>;
using TMat = std::vector<TRow>;

TMat t_identity(const Field& k, int sz) {
  TMat m(static_cast<std::size_t>(sz),
         TRow(static_cast<std::size_t>(sz), TPoly(k)));
  for (int i = 0; i < sz; ++i)
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        TPoly::constant(Scalar::one(k));
  return m;
}

// Right-multiplication by I + lambda(t)*e_{r,c}.
void t_apply(TMat& m, int r, int c, const TPoly& lambda) {
  if (lambda.is_zero()) return;
  for (auto& row : m)
    row[static_cast<std::size_t>(c)] =
        row[static_cast<std::size_t>(c)] + lambda * row[static_cast<std::size_t>(r)];
}

std::vector<MultiPoly> t_matrix_tuple(const TMat& m, const Field& k) {
  CoeffDomain dom{k, true};
  int sz = static_cast<int>(m.size());
  std::vector<MultiPoly> comps;
  for (int i = 0; i < sz; ++i) {
    MultiPoly c(dom, sz);
    for (int j = 0; j < sz; ++j) {
      const TPoly& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (e.is_zero()) continue;
      ExpVec ev{std::vector<std::uint32_t>(static_cast<std::size_t>(sz), 0)};
      ev.e[static_cast<std::size_t>(j)] = 1;
      c.add_term(ev, e);
    }
    comps.push_back(std::move(c));
  }
  return comps;
}

}  // namespace

Family psl_path(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError(ValidationKind::SizeMismatch, "psl_path endpoint sizes differ");
  if (!(a.field() == b.field()))
    throw ValidationError(ValidationKind::FieldMismatch, "psl_path endpoint fields differ");
  TransvectionWord wa = sl_decompose(a);
  TransvectionWord wb = sl_decompose(b);
  const Field& k = a.field();
  int sz = a.rows();

  // v + t(w - v) on the concatenated parameter space: the A-factors carry
  // (1-t)*lambda, the B-factors t*lambda.
  TPoly t = TPoly::variable(k);
  TPoly one_minus_t = TPoly::constant(Scalar::one(k)) - t;
  TMat fwd = t_identity(k, sz), bwd = t_identity(k, sz);
  auto scaled_factors = [&](const TransvectionWord& w, const TPoly& s) {
    std::vector<std::pair<std::pair<int, int>, TPoly>> fs;
    for (const auto& f : w.factors())
      fs.push_back({{f.row - 1, f.col - 1}, s.scaled(f.lambda)});
    return fs;
  };
  auto factors = scaled_factors(wa, one_minus_t);
  auto bfactors = scaled_factors(wb, t);
  factors.insert(factors.end(), bfactors.begin(), bfactors.end());
  for (const auto& [rc, lam] : factors) t_apply(fwd, rc.first, rc.second, lam);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    t_apply(bwd, it->first.first, it->first.second, -it->second);

  return Family::certified(t_matrix_tuple(fwd, k), t_matrix_tuple(bwd, k));
}

DetClass det_class(const ProjMatrix& p) {
  Scalar d = p.canonical_lift().det();
  auto cls = nth_power_class(d, static_cast<std::uint64_t>(p.size()));
  return DetClass{d, cls.is_nth_power};
}

Matrix sl_lift(const ProjMatrix& p) {
  Matrix lift = p.canonical_lift();
  auto cls = nth_power_class(lift.det(), static_cast<std::uint64_t>(p.size()));
  if (!cls.is_nth_power)
    throw ValidationError(ValidationKind::InvalidParameter,
                          "matrix has a nontrivial determinant class");
  return lift.scaled(cls.witness->inverse());
}

namespace {

// Word whose product maps p to a multiple of e_0; at most n+1 factors.
// Operations are applied left to right, so the product-order word is the
// reversal of the application sequence.
TransvectionWord reduce_to_e0(const Point& p) {
  const Field& k = p.field();
  int sz = p.n() + 1;
  std::vector<Transvection> ops;
  std::vector<Scalar> v = p.coords();
  if (v[0].is_zero()) {
    int j = p.chart_index();
    ops.push_back(Transvection{sz, 1, j + 1, Scalar::one(k)});
    v[0] = v[0] + v[static_cast<std::size_t>(j)];
  }
  Scalar inv0 = v[0].inverse();
  for (int i = 1; i < sz; ++i) {
    if (v[static_cast<std::size_t>(i)].is_zero()) continue;
    ops.push_back(Transvection{sz, i + 1, 1, -(v[static_cast<std::size_t>(i)] * inv0)});
    v[static_cast<std::size_t>(i)] = Scalar::zero(k);
  }
  TransvectionWord w(k, sz);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    w.push(it->row, it->col, it->lambda);
  return w;
}

}  // namespace

TransvectionWord transvection_to_point(const Point& from, const Point& to) {
  if (from.n() != to.n())
    throw ValidationError(ValidationKind::DimensionMismatch,
                          "points live in different spaces");
  if (!(from.field() == to.field()))
    throw ValidationError(ValidationKind::FieldMismatch, "points over different fields");
  std::size_t budget = 2u * static_cast<std::size_t>(from.n() + 1);
  TransvectionWord w(from.field(), from.n() + 1);
  if (!(from == to)) {
    w = reduce_to_e0(to).inverse();
    w.append(reduce_to_e0(from));
  }
  w.pad_to(budget);
  return w;
}

}  // namespace cremona
