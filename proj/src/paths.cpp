#include "cremona/paths.hpp"

#include <algorithm>
#include <numeric>

namespace cremona {

const char* PathStep::kind_name(Kind k) {
  switch (k) {
    case Kind::LinearPslSegment: return "LinearPSLSegment";
    case Kind::DetClassGadgetSegment: return "DetClassGadgetSegment";
    case Kind::ConjLimitSegment: return "ConjLimitSegment";
    case Kind::ConstantConjugation: return "ConstantConjugation";
  }
  return "PathStep";
}

namespace {

// digit sequence 0, 1, -1, 2, -2, ...
long digit_value(int k) { return k % 2 ? (k + 1) / 2 : -(k / 2); }

long gcd_abs(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) { long t = a % b; a = b; b = t; }
  return a;
}

}  // namespace

std::optional<Point> search_points(int n, int height_bound,
                                   const std::function<bool(const Point&)>& accept) {
  const Field q = Field::rationals();
  for (int stage = 1; stage <= height_bound; stage *= 2) {
    int prev = stage == 1 ? 0 : stage / 2;
    for (int lead = 0; lead <= n; ++lead) {
      std::vector<long> c(static_cast<std::size_t>(n + 1), 0);
      int rest = n - lead;  // free coordinates after the leading one
      std::function<std::optional<Point>(int)> rec = [&](int pos) -> std::optional<Point> {
        if (pos == rest) {
          long mx = 0, g = 0;
          for (long v : c) {
            mx = std::max(mx, v < 0 ? -v : v);
            g = gcd_abs(g, v);
          }
          if (mx <= prev || g != 1) return std::nullopt;
          std::vector<Scalar> coords;
          coords.reserve(c.size());
          for (long v : c) coords.push_back(Scalar::from_int(q, v));
          Point p = Point::make(q, std::move(coords));
          if (accept(p)) return p;
          return std::nullopt;
        }
        for (int k = 0; k <= 2 * stage; ++k) {
          c[static_cast<std::size_t>(lead + 1 + pos)] = digit_value(k);
          auto r = rec(pos + 1);
          if (r) return r;
        }
        return std::nullopt;
      };
      for (long lv = 1; lv <= stage; ++lv) {
        c[static_cast<std::size_t>(lead)] = lv;
        auto r = rec(0);
        if (r) return r;
      }
      c[static_cast<std::size_t>(lead)] = 0;
    }
  }
  return std::nullopt;
}

Point find_local_iso_point(const CremonaMap& g, int height_bound) {
  if (!g.field().is_rationals())
    throw ValidationError(ValidationKind::UnsupportedField,
                          "point search runs over the rationals");
  auto found = search_points(g.n(), height_bound, [&](const Point& p) {
    return is_local_iso_at(g, p);
  });
  if (!found)
    throw ComputeError(ComputeKind::SearchExhausted,
                       "no local-isomorphism point up to height " +
                           std::to_string(height_bound));
  return *found;
}

std::pair<ProjMatrix, CremonaMap> commutator_fixer(const CremonaMap& f,
                                                   const Point& p) {
  if (f.is_identity())
    throw ValidationError(ValidationKind::InvalidParameter,
                          "commutator_fixer needs a nontrivial map");
  if (!is_local_iso_at(f, p))
    throw ValidationError(ValidationKind::NotLocalIso,
                          "map is not a local isomorphism at the point");
  const Field& k = f.field();
  int n = f.n();
  Point q = *evaluate(f, p);
  bool moved = !(q == p);

  // basis with p (and q) in the leading columns, completed greedily by
  // standard basis vectors
  Matrix basis(k, n + 1, n + 1);
  std::vector<std::vector<Scalar>> cols;
  cols.push_back(p.coords());
  if (moved) cols.push_back(q.coords());
  for (int i = 0; i <= n && static_cast<int>(cols.size()) <= n; ++i) {
    std::vector<Scalar> e(static_cast<std::size_t>(n + 1), Scalar::zero(k));
    e[static_cast<std::size_t>(i)] = Scalar::one(k);
    cols.push_back(e);
    // keep e_i only if the columns stay independent
    bool independent = false;
    {
      Matrix m(k, n + 1, static_cast<int>(cols.size()));
      for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
        for (int r = 0; r <= n; ++r)
          m.at(r, static_cast<int>(cidx)) = cols[cidx][static_cast<std::size_t>(r)];
      int rank = 0;
      for (int c = 0; c < m.cols(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
          if (!m.at(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        Scalar inv = m.at(rank, c).inverse();
        for (int r = rank + 1; r < m.rows(); ++r) {
          if (m.at(r, c).is_zero()) continue;
          Scalar factor = m.at(r, c) * inv;
          for (int j = 0; j < m.cols(); ++j)
            m.at(r, j) = m.at(r, j) - factor * m.at(rank, j);
        }
        ++rank;
      }
      independent = rank == static_cast<int>(cols.size());
    }
    if (!independent) cols.pop_back();
  }
  for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
    for (int r = 0; r <= n; ++r)
      basis.at(r, static_cast<int>(cidx)) = cols[cidx][static_cast<std::size_t>(r)];
  Matrix basis_inv = basis.inverse();

  int fixed = moved ? 2 : 1;
  ProjMatrix ident = ProjMatrix::identity(k, n + 1);
  for (int j = fixed; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      if (i == j) continue;
      for (long lv = 1; lv <= 20; ++lv) {
        Matrix t = Matrix::identity(k, n + 1);
        t.at(i, j) = Scalar::from_int(k, lv);
        ProjMatrix alpha(basis * t * basis_inv);
        CremonaMap am = CremonaMap::linear(alpha);
        CremonaMap g = compose(compose(compose(am.inverse_map(), f.inverse_map()), am), f);
        auto gp = evaluate(g, p);
        if (!gp || !(*gp == p)) continue;
        if (!is_local_iso_at(g, p)) continue;
        auto d = derivative_at_fixed_point(g, p);
        if (!d || *d == ident) continue;
        return {alpha, g};
      }
    }
  }
  throw ComputeError(ComputeKind::NoSuitableAlpha,
                     "no transvection parameter yields a nontrivial derivative");
}

namespace {

Point coordinate_point(const Field& k, int n, int idx) {
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), Scalar::zero(k));
  c[static_cast<std::size_t>(idx)] = Scalar::one(k);
  return Point::make(k, c);
}

PathStep psl_step(const Matrix& from, const Matrix& to) {
  PathStep s{PathStep::Kind::LinearPslSegment, psl_path(from, to)};
  s.sl_from = from;
  s.sl_to = to;
  return s;
}

// The inverted difference family of the two gadget conjugation limits:
// D = (A^-1 . B)^-1 with A = rho1 . rho1(0)^-1 and B = rho2 . rho2(0)^-1,
// so D(0) = id and D(1) = rho2(0) . rho1(0)^-1.
Family gadget_difference(const Scalar& lambda, int n) {
  CremonaMap g = CremonaMap::two_fixed_point_gadget(lambda, n);
  const Field& k = lambda.field();
  Family rho1 = conj_limit(g, coordinate_point(k, n, 1));
  Family rho2 = conj_limit(g, coordinate_point(k, n, 2));
  auto shifted = [&](const Family& rho) {
    CremonaMap at0 = specialize(rho, Scalar::zero(k));
    return family_product(
        rho, Family::constant(CremonaMap::linear(at0.linear_matrix().inverse())));
  };
  Family a = shifted(rho1), b = shifted(rho2);
  return family_inverse(family_product(family_inverse(a), b));
}

}  // namespace

std::pair<Family, std::vector<PathStep>> connect_linear(const ProjMatrix& h) {
  const Field& k = h.field();
  int sz = h.size();
  DetClass dc = det_class(h);
  if (dc.in_psl) {
    PathStep s = psl_step(Matrix::identity(k, sz), sl_lift(h));
    Family fam = s.family;
    return {std::move(fam), {std::move(s)}};
  }
  int n = sz - 1;
  PathStep gad{PathStep::Kind::DetClassGadgetSegment,
               gadget_difference(dc.witness, n)};
  gad.gadget_lambda = dc.witness;
  gad.gadget_n = n;

  // endpoints of the gadget derivative maps
  CremonaMap g = CremonaMap::two_fixed_point_gadget(dc.witness, n);
  ProjMatrix rho1_0 =
      specialize(conj_limit(g, coordinate_point(k, n, 1)), Scalar::zero(k))
          .linear_matrix();
  ProjMatrix rho2_0 =
      specialize(conj_limit(g, coordinate_point(k, n, 2)), Scalar::zero(k))
          .linear_matrix();

  PathStep reach = psl_step(Matrix::identity(k, sz), sl_lift(rho1_0));
  PathStep rest = psl_step(Matrix::identity(k, sz), sl_lift(rho2_0.inverse() * h));

  Family fam = family_product(family_product(gad.family, reach.family), rest.family);
  std::vector<PathStep> steps;
  steps.push_back(std::move(gad));
  steps.push_back(std::move(reach));
  steps.push_back(std::move(rest));
  return {std::move(fam), std::move(steps)};
}

ConnectResult connect(const CremonaMap& f, const CremonaMap& g, int height_bound) {
  if (f.n() != g.n())
    throw ValidationError(ValidationKind::DimensionMismatch,
                          "connect needs maps of one dimension");
  if (f.n() < 2)
    throw ValidationError(ValidationKind::InvalidParameter,
                          "connect needs n >= 2");
  if (!f.field().is_rationals() || !g.field().is_rationals())
    throw ValidationError(ValidationKind::UnsupportedField,
                          "connect runs over the rationals");
  if (!f.is_certified() || !g.is_certified())
    throw ValidationError(ValidationKind::MissingInverse,
                          "connect needs certified maps");
  const Field& k = f.field();

  CremonaMap h = compose(g, f.inverse_map());
  std::vector<PathStep> steps;
  Family nu = Family::constant(CremonaMap::identity(k, f.n()));

  if (h.is_linear()) {
    auto [fam, s] = connect_linear(h.linear_matrix());
    nu = std::move(fam);
    steps = std::move(s);
  } else {
    Point p = find_local_iso_point(h, height_bound);
    Point hp = *evaluate(h, p);
    TransvectionWord aw = transvection_to_point(hp, p);
    ProjMatrix alpha(aw.product());
    CremonaMap alpha_map = CremonaMap::linear(alpha);
    CremonaMap g2 = compose(alpha_map, h);  // fixes p

    PathStep cl{PathStep::Kind::ConjLimitSegment, conj_limit(g2, p)};
    cl.map_input = g2;
    cl.point_input = p;
    ProjMatrix rho0 = specialize(cl.family, Scalar::zero(k)).linear_matrix();

    PathStep undo{PathStep::Kind::ConstantConjugation,
                  Family::constant(CremonaMap::linear(rho0.inverse()))};
    undo.map_input = CremonaMap::linear(rho0.inverse());

    auto [l1, s1] = connect_linear(alpha.inverse());
    auto [l2, s2] = connect_linear(rho0);

    nu = family_product(l1, family_product(cl.family, undo.family));
    nu = family_product(nu, l2);
    for (auto& s : s1) steps.push_back(std::move(s));
    steps.push_back(std::move(cl));
    steps.push_back(std::move(undo));
    for (auto& s : s2) steps.push_back(std::move(s));
  }

  PathStep base{PathStep::Kind::ConstantConjugation, Family::constant(f)};
  base.map_input = f;
  nu = family_product(nu, base.family);
  steps.push_back(std::move(base));

  return ConnectResult{std::move(nu), PathPlan{std::move(steps)}};
}

Family replay(const PathPlan& plan) {
  if (plan.steps.empty())
    throw ValidationError(ValidationKind::InvalidParameter, "empty path plan");
  std::optional<Family> acc;
  for (const auto& s : plan.steps) {
    Family fam = [&]() -> Family {
      switch (s.kind) {
        case PathStep::Kind::LinearPslSegment:
          return psl_path(*s.sl_from, *s.sl_to);
        case PathStep::Kind::DetClassGadgetSegment:
          return gadget_difference(*s.gadget_lambda, *s.gadget_n);
        case PathStep::Kind::ConjLimitSegment:
          return conj_limit(*s.map_input, *s.point_input);
        case PathStep::Kind::ConstantConjugation:
          return Family::constant(*s.map_input);
      }
      throw ValidationError(ValidationKind::InvalidParameter, "unknown step kind");
    }();
    if (fam != s.family)
      throw ValidationError(ValidationKind::InvalidParameter,
                            "replayed step disagrees with the recorded family");
    acc = acc ? family_product(*acc, fam) : fam;
  }
  return *acc;
}

}  // namespace cremona
