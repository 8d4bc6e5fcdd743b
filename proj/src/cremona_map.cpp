#include "cremona/cremona_map.hpp"

#include <algorithm>

namespace cremona {

namespace {

void require_valid_tuple(std::span<const MultiPoly> comps) {
  if (comps.size() < 2)
    throw ValidationError(ValidationKind::DimensionMismatch,
                          "a projective tuple needs at least two components");
  std::optional<int> common;
  bool any_nonzero = false;
  for (const auto& c : comps) {
    if (!(c.domain() == comps[0].domain()) || c.nvars() != comps[0].nvars())
      throw ValidationError(ValidationKind::DomainMismatch,
                            "tuple components disagree on domain");
    if (c.is_zero()) continue;
    any_nonzero = true;
    auto d = c.homogeneous_degree();
    if (!d)
      throw ValidationError(ValidationKind::InvalidParameter,
                            "tuple component is not homogeneous: " + c.str());
    if (common && *common != *d)
      throw ValidationError(ValidationKind::InvalidParameter,
                            "tuple components have different degrees");
    common = d;
  }
  if (!any_nonzero)
    throw ValidationError(ValidationKind::ZeroTuple, "all tuple components are zero");
  if (static_cast<int>(comps.size()) != comps[0].nvars())
    throw ValidationError(ValidationKind::DimensionMismatch,
                          "tuple length must match the variable count");
}

const TPoly* first_nonzero_coeff(std::span<const MultiPoly> comps) {
  for (const auto& c : comps)
    if (!c.is_zero()) return &c.leading_coeff();
  return nullptr;
}

}  // namespace

std::vector<MultiPoly> normalize_tuple(std::vector<MultiPoly> comps) {
  require_valid_tuple(comps);
  if (comps[0].domain().with_parameter) {
    std::size_t v = static_cast<std::size_t>(-1);
    for (const auto& c : comps)
      if (!c.is_zero()) v = std::min(v, c.t_valuation());
    if (v > 0)
      for (auto& c : comps) c = c.t_shifted_down(v);
  }
  MultiPoly content = multi_gcd(comps);
  // multi_gcd is monic-normalized, so a trivial content is exactly 1.
  bool trivial = content.is_constant() && content.t_degree() <= 0;
  if (!trivial)
    for (auto& c : comps) c = divide_exact(c, content);
  const TPoly* lead = first_nonzero_coeff(comps);
  Scalar s = lead->low_coeff();
  if (!s.is_one()) {
    Scalar inv = s.inverse();
    for (auto& c : comps) c = c.scaled(inv);
  }
  return comps;
}

std::vector<MultiPoly> substitute_tuple(std::span<const MultiPoly> outer,
                                        std::span<const MultiPoly> inner) {
  std::vector<MultiPoly> out;
  out.reserve(outer.size());
  for (const auto& f : outer) out.push_back(f.substitute(inner));
  return out;
}

bool tuples_projectively_equal(std::span<const MultiPoly> a,
                               std::span<const MultiPoly> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

bool tuple_is_identity(std::span<const MultiPoly> comps) {
  const CoeffDomain& dom = comps[0].domain();
  int nv = comps[0].nvars();
  std::vector<MultiPoly> id;
  id.reserve(comps.size());
  for (int i = 0; i < nv; ++i) id.push_back(MultiPoly::variable(dom, nv, i));
  return tuples_projectively_equal(comps, id);
}

std::vector<MultiPoly> linear_tuple(const Matrix& m, const CoeffDomain& dom) {
  std::vector<MultiPoly> comps;
  comps.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    MultiPoly c(dom, m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      c = c + MultiPoly::variable(dom, m.cols(), j).scaled(m.at(i, j));
    }
    comps.push_back(std::move(c));
  }
  return comps;
}

const std::vector<MultiPoly>& CremonaMap::inverse_components() const {
  if (inverse_.empty())
    throw ValidationError(ValidationKind::MissingInverse, "map carries no inverse");
  return inverse_;
}

CremonaMap CremonaMap::inverse_map() const {
  if (!certified_)
    throw ValidationError(ValidationKind::MissingInverse,
                          "inverse_map needs a certified map");
  CremonaMap m;
  m.comps_ = inverse_;
  m.inverse_ = comps_;
  m.certified_ = true;
  m.degree_ = inverse_[0].degree();
  return m;
}

bool CremonaMap::is_identity() const { return tuple_is_identity(comps_); }

ProjMatrix CremonaMap::linear_matrix() const {
  if (degree_ != 1)
    throw ValidationError(ValidationKind::InvalidParameter,
                          "linear_matrix of a nonlinear map");
  int m = n() + 1;
  Matrix a(field(), m, m);
  for (int i = 0; i < m; ++i) {
    for (const auto& [ev, c] : comps_[static_cast<std::size_t>(i)].terms()) {
      for (int j = 0; j < m; ++j)
        if (ev.e[static_cast<std::size_t>(j)] == 1) a.at(i, j) = c.constant_value();
    }
  }
  return ProjMatrix(a);
}

CremonaMap CremonaMap::normalize(std::vector<MultiPoly> comps) {
  if (!comps.empty() && comps[0].domain().with_parameter)
    throw ValidationError(ValidationKind::DomainMismatch,
                          "a CremonaMap is parameter-free; use Family");
  CremonaMap m;
  m.comps_ = normalize_tuple(std::move(comps));
  m.degree_ = m.comps_[0].degree();
  for (const auto& c : m.comps_) m.degree_ = std::max(m.degree_, c.degree());
  return m;
}

CremonaMap CremonaMap::with_claimed_inverse(std::vector<MultiPoly> comps,
                                            std::vector<MultiPoly> inverse) {
  CremonaMap m = normalize(std::move(comps));
  CremonaMap inv = normalize(std::move(inverse));
  if (inv.n() != m.n())
    throw ValidationError(ValidationKind::DimensionMismatch,
                          "inverse tuple has a different dimension");
  m.inverse_ = inv.comps_;
  return m;
}

CremonaMap CremonaMap::certified(std::vector<MultiPoly> comps,
                                 std::vector<MultiPoly> inverse) {
  auto m = try_certify(std::move(comps), std::move(inverse));
  if (!m)
    throw ValidationError(ValidationKind::InvalidParameter,
                          "claimed inverse fails certificate verification");
  return *m;
}

std::optional<CremonaMap> CremonaMap::try_certify(std::vector<MultiPoly> comps,
                                                  std::vector<MultiPoly> inverse) {
  CremonaMap m = with_claimed_inverse(std::move(comps), std::move(inverse));
  if (!verify_certificate(m)) return std::nullopt;
  m.certified_ = true;
  return m;
}

CremonaMap CremonaMap::identity(const Field& f, int n) {
  if (n < 1)
    throw ValidationError(ValidationKind::InvalidParameter, "identity needs n >= 1");
  CoeffDomain dom{f, false};
  std::vector<MultiPoly> comps;
  for (int i = 0; i <= n; ++i) comps.push_back(MultiPoly::variable(dom, n + 1, i));
  return certified(comps, comps);
}

CremonaMap CremonaMap::linear(const ProjMatrix& pm) {
  CoeffDomain dom{pm.field(), false};
  return certified(linear_tuple(pm.rep(), dom), linear_tuple(pm.rep().inverse(), dom));
}

CremonaMap CremonaMap::standard_involution(const Field& f, int n) {
  if (n < 2)
    throw ValidationError(ValidationKind::InvalidParameter,
                          "standard involution needs n >= 2");
  CoeffDomain dom{f, false};
  std::vector<MultiPoly> comps;
  for (int i = 0; i <= n; ++i) {
    MultiPoly c = MultiPoly::constant(dom, n + 1, Scalar::one(f));
    for (int j = 0; j <= n; ++j)
      if (j != i) c = c * MultiPoly::variable(dom, n + 1, j);
    comps.push_back(std::move(c));
  }
  return certified(comps, comps);
}

CremonaMap CremonaMap::scaling_map(const Scalar& a, int n) {
  if (n < 3)
    throw ValidationError(ValidationKind::InvalidParameter, "scaling map needs n >= 3");
  if (a.is_zero())
    throw ValidationError(ValidationKind::InvalidParameter, "scaling parameter must be nonzero");
  const Field& f = a.field();
  Matrix m = Matrix::identity(f, n + 1);
  m.at(1, 1) = a;
  m.at(2, 2) = a.inverse();
  return linear(ProjMatrix(m));
}

CremonaMap CremonaMap::dejonquieres(const Field& f, int n) {
  if (n < 3)
    throw ValidationError(ValidationKind::InvalidParameter, "dejonquieres needs n >= 3");
  CoeffDomain dom{f, false};
  auto x = [&](int i) { return MultiPoly::variable(dom, n + 1, i); };
  std::vector<MultiPoly> comps{x(0) * x(0), x(0) * x(1), x(1) * x(2)};
  std::vector<MultiPoly> inv{x(0) * x(1), x(1) * x(1), x(0) * x(2)};
  for (int i = 3; i <= n; ++i) {
    comps.push_back(x(0) * x(i));
    inv.push_back(x(1) * x(i));
  }
  return certified(comps, inv);
}

CremonaMap CremonaMap::two_fixed_point_gadget(const Scalar& lambda, int n) {
  if (n < 2)
    throw ValidationError(ValidationKind::InvalidParameter, "gadget needs n >= 2");
  if (lambda.is_zero())
    throw ValidationError(ValidationKind::InvalidParameter,
                          "gadget parameter must be nonzero");
  const Field& f = lambda.field();
  CoeffDomain dom{f, false};
  auto x = [&](int i) { return MultiPoly::variable(dom, n + 1, i); };
  MultiPoly u = x(1) + x(2);                  // x1 + x2
  MultiPoly ul = x(1) + x(2).scaled(lambda);  // x1 + lambda*x2
  std::vector<MultiPoly> comps{x(0) * ul + x(1) * x(2)};
  std::vector<MultiPoly> inv{x(0) * u - x(1) * x(2)};
  for (int i = 1; i <= n; ++i) {
    comps.push_back(x(i) * u);
    inv.push_back(x(i) * ul);
  }
  return certified(comps, inv);
}

CremonaMap compose(const CremonaMap& f, const CremonaMap& g) {
  if (f.n() != g.n())
    throw ValidationError(ValidationKind::DimensionMismatch,
                          "composition of maps of different dimension");
  if (!(f.field() == g.field()))
    throw ValidationError(ValidationKind::FieldMismatch,
                          "composition over different fields");
  std::vector<MultiPoly> raw = substitute_tuple(f.components(), g.components());
  bool all_zero = std::all_of(raw.begin(), raw.end(),
                              [](const MultiPoly& c) { return c.is_zero(); });
  if (all_zero)
    throw ComputeError(ComputeKind::DegenerateComposition,
                       "image lies in the indeterminacy locus");
  if (f.is_certified() && g.is_certified()) {
    std::vector<MultiPoly> raw_inv =
        substitute_tuple(g.inverse_components(), f.inverse_components());
    CremonaMap m = CremonaMap::with_claimed_inverse(std::move(raw), std::move(raw_inv));
    m.certified_ = true;
    return m;
  }
  return CremonaMap::normalize(std::move(raw));
}

bool verify_certificate(const CremonaMap& f) {
  const auto& inv = f.inverse_components();
  std::vector<MultiPoly> fwd = substitute_tuple(f.components(), inv);
  bool zero = std::all_of(fwd.begin(), fwd.end(),
                          [](const MultiPoly& c) { return c.is_zero(); });
  if (zero || !tuple_is_identity(fwd)) return false;
  std::vector<MultiPoly> bwd = substitute_tuple(inv, f.components());
  zero = std::all_of(bwd.begin(), bwd.end(),
                     [](const MultiPoly& c) { return c.is_zero(); });
  return !zero && tuple_is_identity(bwd);
}

std::optional<Point> evaluate(const CremonaMap& f, const Point& p) {
  if (p.n() != f.n())
    throw ValidationError(ValidationKind::DimensionMismatch, "point dimension");
  if (!(p.field() == f.field()))
    throw ValidationError(ValidationKind::FieldMismatch, "point field");
  std::vector<Scalar> vals;
  vals.reserve(f.components().size());
  bool all_zero = true;
  for (const auto& c : f.components()) {
    vals.push_back(c.eval(p.coords()));
    if (!vals.back().is_zero()) all_zero = false;
  }
  if (all_zero) return std::nullopt;
  return Point::make(f.field(), std::move(vals));
}

namespace {

// Chart Jacobian of f at p: rows i != ct, cols j != cs, where cs/ct are the
// chart indices of p and of q = f(p). Entries are exact scalars.
std::optional<Matrix> chart_jacobian(const CremonaMap& f, const Point& p, int cs,
                                     int ct) {
  int n = f.n();
  const auto& comps = f.components();
  const Field& k = f.field();
  Scalar gct = comps[static_cast<std::size_t>(ct)].eval(p.coords());
  // gct is nonzero by the choice of ct.
  Scalar gct2inv = (gct * gct).inverse();
  Scalar pcs = p.coords()[static_cast<std::size_t>(cs)];
  std::vector<Scalar> gvals;
  gvals.reserve(comps.size());
  for (const auto& c : comps) gvals.push_back(c.eval(p.coords()));
  Matrix j(k, n, n);
  int row = 0;
  for (int i = 0; i <= n; ++i) {
    if (i == ct) continue;
    int col = 0;
    for (int jj = 0; jj <= n; ++jj) {
      if (jj == cs) continue;
      Scalar di = comps[static_cast<std::size_t>(i)].derivative(jj).eval(p.coords());
      Scalar dt = comps[static_cast<std::size_t>(ct)].derivative(jj).eval(p.coords());
      j.at(row, col) =
          pcs * (di * gvals[static_cast<std::size_t>(ct)] -
                 gvals[static_cast<std::size_t>(i)] * dt) * gct2inv;
      ++col;
    }
    ++row;
  }
  if (j.det().is_zero()) return std::nullopt;
  return j;
}

}  // namespace

std::optional<ProjMatrix> derivative_at_fixed_point(const CremonaMap& f,
                                                    const Point& p) {
  auto q = evaluate(f, p);
  if (!q)
    throw ValidationError(ValidationKind::IndeterminateAtPoint,
                          "map is indeterminate at the point");
  if (!(*q == p))
    throw ValidationError(ValidationKind::NotFixed, "point is not fixed by the map");
  int c = p.chart_index();
  auto j = chart_jacobian(f, p, c, c);
  if (!j) return std::nullopt;
  int n = f.n();
  const Field& k = f.field();
  Scalar pc_inv = p.coords()[static_cast<std::size_t>(c)].inverse();
  // Affine extension fixing p in the chart x_c: row c is e_c, the chart
  // Jacobian fills the off-chart block, and column c absorbs the
  // translation part b = yhat - J*yhat.
  Matrix m(k, n + 1, n + 1);
  m.at(c, c) = Scalar::one(k);
  int row = 0;
  for (int i = 0; i <= n; ++i) {
    if (i == c) continue;
    Scalar b = p.coords()[static_cast<std::size_t>(i)] * pc_inv;
    int col = 0;
    for (int jj = 0; jj <= n; ++jj) {
      if (jj == c) continue;
      m.at(i, jj) = j->at(row, col);
      b = b - j->at(row, col) * (p.coords()[static_cast<std::size_t>(jj)] * pc_inv);
      ++col;
    }
    m.at(i, c) = b;
    ++row;
  }
  return ProjMatrix(m);
}

bool is_local_iso_at(const CremonaMap& f, const Point& p) {
  if (!f.is_certified())
    throw ValidationError(ValidationKind::MissingInverse,
                          "is_local_iso_at needs a certified map");
  auto q = evaluate(f, p);
  if (!q) return false;
  auto back = evaluate(f.inverse_map(), *q);
  if (!back || !(*back == p)) return false;
  auto j = chart_jacobian(f, p, p.chart_index(), q->chart_index());
  return j.has_value();
}

}  // namespace cremona
