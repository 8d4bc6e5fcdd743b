#include "cremona/family.hpp"

#include <algorithm>

namespace cremona {

namespace {

bool all_zero(std::span<const MultiPoly> comps) {
  return std::all_of(comps.begin(), comps.end(),
                     [](const MultiPoly& c) { return c.is_zero(); });
}

std::vector<MultiPoly> lift_tuple(std::span<const MultiPoly> comps) {
  std::vector<MultiPoly> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(c.lift_to_parameter());
  return out;
}

std::vector<MultiPoly> specialize_tuple(std::span<const MultiPoly> comps,
                                        const Scalar& a) {
  std::vector<MultiPoly> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(c.specialize_parameter(a));
  return out;
}

// Left action of a scalar matrix on a tuple of polynomials.
std::vector<MultiPoly> apply_matrix(const Matrix& m, std::span<const MultiPoly> comps) {
  std::vector<MultiPoly> out;
  out.reserve(comps.size());
  const CoeffDomain& dom = comps[0].domain();
  for (int i = 0; i < m.rows(); ++i) {
    MultiPoly acc(dom, comps[0].nvars());
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      acc = acc + comps[static_cast<std::size_t>(j)].scaled(m.at(i, j));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

Family Family::build(std::vector<MultiPoly> comps, std::vector<MultiPoly> inverse,
                     bool symbolic_check) {
  comps = normalize_tuple(lift_tuple(comps));
  inverse = normalize_tuple(lift_tuple(inverse));
  if (comps.size() != inverse.size())
    throw ValidationError(ValidationKind::DimensionMismatch,
                          "family inverse has a different dimension");
  if (symbolic_check) {
    std::vector<MultiPoly> fwd = substitute_tuple(comps, inverse);
    if (all_zero(fwd) || !tuple_is_identity(fwd))
      throw ValidationError(ValidationKind::InvalidParameter,
                            "family certificate fails symbolically");
    std::vector<MultiPoly> bwd = substitute_tuple(inverse, comps);
    if (all_zero(bwd) || !tuple_is_identity(bwd))
      throw ValidationError(ValidationKind::InvalidParameter,
                            "family certificate fails symbolically");
  }
  Family f;
  f.comps_ = std::move(comps);
  f.inverse_ = std::move(inverse);
  const Field& k = f.comps_[0].domain().base;
  for (long v : {0L, 1L}) {
    specialize(f, Scalar::from_int(k, v));  // throws when degenerate
    f.checked_.push_back(Scalar::from_int(k, v));
  }
  return f;
}

Family Family::certified(std::vector<MultiPoly> comps, std::vector<MultiPoly> inverse) {
  return build(std::move(comps), std::move(inverse), true);
}

Family Family::from_certified_parts(std::vector<MultiPoly> comps,
                                    std::vector<MultiPoly> inverse) {
  return build(std::move(comps), std::move(inverse), false);
}

Family Family::constant(const CremonaMap& f) {
  if (!f.is_certified())
    throw ValidationError(ValidationKind::MissingInverse,
                          "constant families need certified maps");
  return from_certified_parts(f.components(), f.inverse_components());
}

Family Family::with_checked(std::vector<Scalar> extra) const {
  Family f = *this;
  for (auto& s : extra) {
    if (std::find(f.checked_.begin(), f.checked_.end(), s) == f.checked_.end())
      f.checked_.push_back(std::move(s));
  }
  return f;
}

int Family::x_degree() const {
  int d = 0;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

int Family::t_degree() const {
  int d = 0;
  for (const auto& c : comps_) d = std::max(d, c.t_degree());
  return d;
}

CremonaMap specialize(const Family& nu, const Scalar& a) {
  std::vector<MultiPoly> comps = specialize_tuple(nu.components(), a);
  if (all_zero(comps))
    throw ComputeError(ComputeKind::DegenerateSpecialization,
                       "components vanish at t = " + a.str());
  std::vector<MultiPoly> inv = specialize_tuple(nu.inverse_components(), a);
  if (all_zero(inv))
    throw ComputeError(ComputeKind::DegenerateSpecialization,
                       "inverse vanishes at t = " + a.str());
  auto m = CremonaMap::try_certify(std::move(comps), std::move(inv));
  if (!m)
    throw ComputeError(ComputeKind::DegenerateSpecialization,
                       "certificate fails at t = " + a.str());
  return *m;
}

Family family_product(const Family& a1, const Family& a2) {
  if (a1.n() != a2.n())
    throw ValidationError(ValidationKind::DimensionMismatch,
                          "product of families of different dimension");
  std::vector<MultiPoly> comps = substitute_tuple(a1.components(), a2.components());
  std::vector<MultiPoly> inv =
      substitute_tuple(a2.inverse_components(), a1.inverse_components());
  return Family::from_certified_parts(std::move(comps), std::move(inv));
}

Family family_inverse(const Family& a) {
  return Family::from_certified_parts(a.inverse_components(), a.components())
      .with_checked(a.sample_checked());
}

Family conj_limit(const CremonaMap& g, const Point& p) {
  auto q = evaluate(g, p);
  if (!q || !(*q == p))
    throw ValidationError(ValidationKind::NotFixed,
                          "conj_limit needs a fixed point of the map");
  if (!is_local_iso_at(g, p))
    throw ValidationError(ValidationKind::NotLocalIso,
                          "conj_limit needs a local isomorphism at the point");
  const Field& k = g.field();
  int n = g.n();

  // mu = T * B: first the transposition B moving the chart coordinate of p
  // to position 0, then the translation T moving the point to the origin of
  // the chart x_0 = 1.
  int c = p.chart_index();
  Matrix b = Matrix::identity(k, n + 1);
  if (c != 0) {
    b.at(0, 0) = Scalar::zero(k);
    b.at(c, c) = Scalar::zero(k);
    b.at(0, c) = Scalar::one(k);
    b.at(c, 0) = Scalar::one(k);
  }
  Point pb = apply(b, p);
  Scalar p0inv = pb.coords()[0].inverse();
  Matrix t = Matrix::identity(k, n + 1);
  for (int i = 1; i <= n; ++i)
    t.at(i, 0) = -(pb.coords()[static_cast<std::size_t>(i)] * p0inv);
  Matrix mu = t * b;
  Matrix mu_inv = b * t.inverse();

  CoeffDomain dom_t{k, true};
  MultiPoly tvar = MultiPoly::parameter(dom_t, n + 1);

  // x0 -> x0, xi -> t*xi
  std::vector<MultiPoly> scaling;
  scaling.reserve(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    MultiPoly xi = MultiPoly::variable(dom_t, n + 1, i);
    scaling.push_back(i == 0 ? xi : xi * tvar);
  }

  auto conjugated_family = [&](std::span<const MultiPoly> comps) {
    // g'' = mu . g . mu^-1, fixing [1:0:...:0]
    std::vector<MultiPoly> gi =
        apply_matrix(mu, substitute_tuple(comps, linear_tuple(mu_inv, comps[0].domain())));
    // nu(t)^-1 . g'' . nu(t) over k[t]: substitute the scaling, then use
    // [t*y0 : y1 : ... : yn] as the projective form of nu(t)^-1.
    std::vector<MultiPoly> raw = substitute_tuple(lift_tuple(gi), scaling);
    raw[0] = raw[0] * tvar;
    // back to the original coordinates
    std::vector<MultiPoly> mu_t = lift_tuple(linear_tuple(mu, comps[0].domain()));
    std::vector<MultiPoly> out = apply_matrix(mu_inv, substitute_tuple(raw, mu_t));
    return out;
  };

  std::vector<MultiPoly> comps = conjugated_family(g.components());
  std::vector<MultiPoly> inv = conjugated_family(g.inverse_components());
  return Family::certified(std::move(comps), std::move(inv));
}

FamilyReport verify_family(const Family& nu, std::span<const Scalar> samples) {
  FamilyReport rep;
  for (const auto& a : samples) {
    SampleCheck check;
    check.t = a;
    try {
      CremonaMap m = specialize(nu, a);
      check.ok = true;
      check.degree = m.degree();
    } catch (const ComputeError& e) {
      check.ok = false;
      check.note = e.what();
      rep.all_ok = false;
    }
    rep.samples.push_back(std::move(check));
  }
  return rep;
}

Family record_checked(const Family& nu, const FamilyReport& report) {
  std::vector<Scalar> passing;
  for (const auto& s : report.samples)
    if (s.ok) passing.push_back(s.t);
  return nu.with_checked(std::move(passing));
}

}  // namespace cremona
