#include "cremona/polygcd.hpp"

#include <vector>

namespace cremona {

namespace {

// All helpers below work on parameter-free polynomials (coefficients are
// plain scalars); parametric inputs are flattened first.

Scalar lead_scalar(const MultiPoly& f) {
  return f.leading_coeff().constant_value();
}

MultiPoly normalize_monic(const MultiPoly& f) {
  if (f.is_zero()) return f;
  return f.scaled(lead_scalar(f).inverse());
}

int deg_in(const MultiPoly& f, int v) { return f.degree_in(v); }

// Coefficient of v^k, as a polynomial with the v-slot zeroed.
MultiPoly coeff_of(const MultiPoly& f, int v, std::uint32_t k) {
  MultiPoly r(f.domain(), f.nvars());
  for (const auto& [ev, c] : f.terms()) {
    if (ev.e[v] != k) continue;
    ExpVec ne = ev;
    ne.e[v] = 0;
    r.add_term(ne, c);
  }
  return r;
}

MultiPoly times_var_pow(const MultiPoly& f, int v, std::uint32_t k) {
  if (k == 0) return f;
  MultiPoly r(f.domain(), f.nvars());
  for (const auto& [ev, c] : f.terms()) {
    ExpVec ne = ev;
    ne.e[v] += k;
    r.add_term(ne, c);
  }
  return r;
}

// Pseudo-remainder: lc_v(w)^(deg_v u - deg_v w + 1) * u reduced mod w.
MultiPoly prem(const MultiPoly& u, const MultiPoly& w, int v) {
  int dw = deg_in(w, v);
  MultiPoly lcw = coeff_of(w, v, static_cast<std::uint32_t>(dw));
  MultiPoly r = u;
  int e = deg_in(u, v) - dw + 1;
  while (!r.is_zero()) {
    int dr = deg_in(r, v);
    if (dr < dw) break;
    MultiPoly lcr = coeff_of(r, v, static_cast<std::uint32_t>(dr));
    r = lcw * r - times_var_pow(lcr * w, v, static_cast<std::uint32_t>(dr - dw));
    --e;
  }
  for (; e > 0; --e) r = lcw * r;
  return r;
}

MultiPoly gcd_rec(const MultiPoly& f, const MultiPoly& g);

// Gcd of the v-coefficients (the content of f viewed in k[rest][v]).
MultiPoly content_in(const MultiPoly& f, int v) {
  MultiPoly c(f.domain(), f.nvars());
  int d = deg_in(f, v);
  for (int k = 0; k <= d; ++k) {
    MultiPoly ck = coeff_of(f, v, static_cast<std::uint32_t>(k));
    if (ck.is_zero()) continue;
    c = c.is_zero() ? ck : gcd_rec(c, ck);
    if (c.is_constant()) break;
  }
  return c;
}

MultiPoly one_like(const MultiPoly& f) {
  return MultiPoly::constant(f.domain(), f.nvars(), Scalar::one(f.domain().base));
}

MultiPoly gcd_rec(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.is_constant() || g.is_constant()) return one_like(f);

  int v = f.nvars() - 1;
  while (v >= 0 && deg_in(f, v) == 0 && deg_in(g, v) == 0) --v;
  if (v < 0) return one_like(f);
  if (deg_in(g, v) == 0) return gcd_rec(content_in(f, v), g);
  if (deg_in(f, v) == 0) return gcd_rec(f, content_in(g, v));

  MultiPoly cf = content_in(f, v);
  MultiPoly cg = content_in(g, v);
  MultiPoly u = divide_exact(f, cf);
  MultiPoly w = divide_exact(g, cg);
  MultiPoly c = gcd_rec(cf, cg);

  if (deg_in(u, v) < deg_in(w, v)) std::swap(u, w);

  // Subresultant pseudo-remainder sequence (Collins/Brown bookkeeping).
  MultiPoly gg = one_like(f);
  MultiPoly hh = one_like(f);
  while (true) {
    int delta = deg_in(u, v) - deg_in(w, v);
    MultiPoly r = prem(u, w, v);
    if (r.is_zero()) break;
    if (deg_in(r, v) == 0) return c;  // primitive parts are coprime in v
    u = w;
    MultiPoly divisor = gg * hh.pow(static_cast<unsigned>(delta));
    w = divide_exact(r, divisor);
    gg = coeff_of(u, v, static_cast<std::uint32_t>(deg_in(u, v)));
    if (delta == 1) {
      hh = gg;
    } else if (delta > 1) {
      hh = divide_exact(gg.pow(static_cast<unsigned>(delta)),
                        hh.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  MultiPoly pp = divide_exact(w, content_in(w, v));
  return c * pp;
}

}  // namespace

std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g) {
  if (!(f.domain() == g.domain()) || f.nvars() != g.nvars())
    throw ValidationError(ValidationKind::DomainMismatch,
                          "division of mismatched polynomials");
  if (f.domain().with_parameter) {
    auto q = try_divide(flatten_parameter(f), flatten_parameter(g));
    if (!q) return std::nullopt;
    return unflatten_parameter(*q, f.domain());
  }
  if (g.is_zero()) return std::nullopt;
  MultiPoly q(f.domain(), f.nvars());
  MultiPoly r = f;
  const ExpVec& ge = g.leading_exp();
  Scalar glc = lead_scalar(g);
  while (!r.is_zero()) {
    const ExpVec& re = r.leading_exp();
    if (!ge.divides(re)) return std::nullopt;
    ExpVec qe = re - ge;
    Scalar qc = lead_scalar(r) / glc;
    MultiPoly qt = MultiPoly::monomial(f.domain(), qe, TPoly::constant(qc));
    q = q + qt;
    r = r - qt * g;
  }
  return q;
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
  auto q = try_divide(f, g);
  if (!q)
    throw ValidationError(ValidationKind::InvalidParameter,
                          "inexact polynomial division");
  return *q;
}

MultiPoly flatten_parameter(const MultiPoly& f) {
  if (!f.domain().with_parameter) return f;
  CoeffDomain nd{f.domain().base, false};
  MultiPoly r(nd, f.nvars() + 1);
  for (const auto& [ev, c] : f.terms()) {
    for (int k = 0; k <= c.degree(); ++k) {
      Scalar s = c.coeff(static_cast<std::size_t>(k));
      if (s.is_zero()) continue;
      ExpVec ne = ev;
      ne.e.push_back(static_cast<std::uint32_t>(k));
      r.add_term(ne, TPoly::constant(s));
    }
  }
  return r;
}

MultiPoly unflatten_parameter(const MultiPoly& f, const CoeffDomain& dom) {
  MultiPoly r(dom, f.nvars() - 1);
  for (const auto& [ev, c] : f.terms()) {
    ExpVec ne{std::vector<std::uint32_t>(ev.e.begin(), ev.e.end() - 1)};
    r.add_term(ne, TPoly::monomial(c.constant_value(), ev.e.back()));
  }
  return r;
}

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
  if (!(f.domain() == g.domain()) || f.nvars() != g.nvars())
    throw ValidationError(ValidationKind::DomainMismatch,
                          "gcd of mismatched polynomials");
  if (f.domain().with_parameter) {
    MultiPoly gf = poly_gcd(flatten_parameter(f), flatten_parameter(g));
    return unflatten_parameter(gf, f.domain());
  }
  if (f.is_zero()) return normalize_monic(g);
  if (g.is_zero()) return normalize_monic(f);
  return normalize_monic(gcd_rec(f, g));
}

MultiPoly multi_gcd(std::span<const MultiPoly> fs) {
  if (fs.empty())
    throw ValidationError(ValidationKind::InvalidParameter, "gcd of an empty list");
  MultiPoly acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) {
    acc = poly_gcd(acc, fs[i]);
    if (!acc.is_zero() && acc.is_constant()) break;
  }
  return poly_gcd(acc, MultiPoly::zero(acc.domain(), acc.nvars()));
}

}  // namespace cremona
