#include "cremona/multipoly.hpp"

#include <algorithm>

namespace cremona {

MultiPoly MultiPoly::zero(const CoeffDomain& dom, int nvars) {
  return MultiPoly(dom, nvars);
}

MultiPoly MultiPoly::constant(const CoeffDomain& dom, int nvars, const Scalar& s) {
  MultiPoly p(dom, nvars);
  if (!s.is_zero())
    p.terms_.emplace(ExpVec{std::vector<std::uint32_t>(nvars, 0)}, TPoly::constant(s));
  return p;
}

MultiPoly MultiPoly::variable(const CoeffDomain& dom, int nvars, int i) {
  if (i < 0 || i >= nvars)
    throw ValidationError(ValidationKind::ArityMismatch,
                          "variable index " + std::to_string(i) + " out of range");
  ExpVec ev{std::vector<std::uint32_t>(nvars, 0)};
  ev.e[i] = 1;
  MultiPoly p(dom, nvars);
  p.terms_.emplace(std::move(ev), TPoly::constant(Scalar::one(dom.base)));
  return p;
}

MultiPoly MultiPoly::monomial(const CoeffDomain& dom, ExpVec ev, TPoly c) {
  MultiPoly p(dom, static_cast<int>(ev.e.size()));
  if (!c.is_zero()) p.terms_.emplace(std::move(ev), std::move(c));
  return p;
}

MultiPoly MultiPoly::parameter(const CoeffDomain& dom, int nvars) {
  if (!dom.with_parameter)
    throw ValidationError(ValidationKind::DomainMismatch,
                          "domain has no parameter t");
  MultiPoly p(dom, nvars);
  p.terms_.emplace(ExpVec{std::vector<std::uint32_t>(nvars, 0)},
                   TPoly::variable(dom.base));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.total());
}

int MultiPoly::degree_in(int i) const {
  int d = -1;
  for (const auto& [ev, c] : terms_)
    d = std::max(d, static_cast<int>(ev.e[i]));
  return terms_.empty() ? -1 : d;
}

int MultiPoly::t_degree() const {
  int d = -1;
  for (const auto& [ev, c] : terms_) d = std::max(d, c.degree());
  return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.begin()->first.total();
  // Descending graded order: equal head and tail degree means homogeneous.
  if (terms_.rbegin()->first.total() != d) return std::nullopt;
  return static_cast<int>(d);
}

std::size_t MultiPoly::t_valuation() const {
  std::size_t v = static_cast<std::size_t>(-1);
  for (const auto& [ev, c] : terms_) v = std::min(v, c.valuation());
  return v;
}

void MultiPoly::add_term(const ExpVec& ev, const TPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(ev);
  if (it == terms_.end()) {
    terms_.emplace(ev, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

const TPoly& MultiPoly::leading_coeff() const { return terms_.begin()->second; }
const ExpVec& MultiPoly::leading_exp() const { return terms_.begin()->first; }

void MultiPoly::require_same(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.dom_ == b.dom_) || a.nvars_ != b.nvars_)
    throw ValidationError(ValidationKind::DomainMismatch,
                          "polynomial domains differ: " + a.dom_.str() + "/" +
                              std::to_string(a.nvars_) + " vs " + b.dom_.str() +
                              "/" + std::to_string(b.nvars_));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(dom_, nvars_);
  for (const auto& [ev, c] : terms_) p.terms_.emplace(ev, -c);
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly::require_same(a, b);
  MultiPoly p = a;
  for (const auto& [ev, c] : b.terms_) p.add_term(ev, c);
  return p;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly::require_same(a, b);
  MultiPoly p(a.dom_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

MultiPoly MultiPoly::scaled(const Scalar& s) const {
  return scaled(TPoly::constant(s));
}

MultiPoly MultiPoly::scaled(const TPoly& c) const {
  MultiPoly p(dom_, nvars_);
  if (c.is_zero()) return p;
  for (const auto& [ev, tc] : terms_) {
    TPoly prod = tc * c;
    if (!prod.is_zero()) p.terms_.emplace(ev, std::move(prod));
  }
  return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly acc = constant(dom_, nvars_, Scalar::one(dom_.base));
  MultiPoly base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.dom_ == b.dom_) || a.nvars_ != b.nvars_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  return true;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw ValidationError(ValidationKind::ArityMismatch,
                          "expected " + std::to_string(nvars_) + " images, got " +
                              std::to_string(images.size()));
  const CoeffDomain& out_dom = images.empty() ? dom_ : images[0].domain();
  int out_nvars = images.empty() ? nvars_ : images[0].nvars();
  if (!(out_dom.base == dom_.base))
    throw ValidationError(ValidationKind::DomainMismatch,
                          "images live over a different base field");
  if (dom_.with_parameter && !out_dom.with_parameter)
    throw ValidationError(ValidationKind::DomainMismatch,
                          "cannot substitute parameter-free images into a "
                          "parametric polynomial");
  for (const auto& im : images)
    if (!(im.domain() == out_dom) || im.nvars() != out_nvars)
      throw ValidationError(ValidationKind::DomainMismatch,
                            "images disagree on domain or arity");

  // Multivariate Horner: recurse on the last variable with a positive degree.
  struct Rec {
    std::span<const MultiPoly> images;
    const CoeffDomain& out_dom;
    int out_nvars;

    MultiPoly run(const MultiPoly& f, int top) {
      if (f.is_zero()) return MultiPoly::zero(out_dom, out_nvars);
      while (top >= 0 && f.degree_in(top) <= 0) --top;
      if (top < 0) {
        // Constant in the remaining sense: single term with exponent 0.
        MultiPoly r = MultiPoly::zero(out_dom, out_nvars);
        const TPoly& c = f.terms().begin()->second;
        ExpVec z{std::vector<std::uint32_t>(static_cast<std::size_t>(out_nvars), 0)};
        if (out_dom.with_parameter) {
          r.add_term(z, c);
        } else {
          r.add_term(z, TPoly::constant(c.constant_value()));
        }
        return r;
      }
      // Group f by the exponent of x_top.
      std::map<std::uint32_t, MultiPoly> slices;
      for (const auto& [ev, c] : f.terms()) {
        std::uint32_t k = ev.e[top];
        ExpVec rest = ev;
        rest.e[top] = 0;
        auto [it, inserted] = slices.try_emplace(k, f.domain(), f.nvars());
        it->second.add_term(rest, c);
      }
      MultiPoly acc = MultiPoly::zero(out_dom, out_nvars);
      std::uint32_t prev = 0;
      bool first = true;
      // Horner from the highest power down.
      for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
        if (!first) {
          for (std::uint32_t j = 0; j < prev - it->first; ++j)
            acc = acc * images[top];
        }
        acc = acc + run(it->second, top - 1);
        prev = it->first;
        first = false;
      }
      for (std::uint32_t j = 0; j < prev; ++j) acc = acc * images[top];
      return acc;
    }
  };
  Rec rec{images, out_dom, out_nvars};
  return rec.run(*this, nvars_ - 1);
}

MultiPoly MultiPoly::derivative(int i) const {
  if (i < 0 || i >= nvars_)
    throw ValidationError(ValidationKind::ArityMismatch, "derivative index out of range");
  MultiPoly p(dom_, nvars_);
  for (const auto& [ev, c] : terms_) {
    if (ev.e[i] == 0) continue;
    Scalar mult = Scalar::from_int(dom_.base, static_cast<long>(ev.e[i]));
    TPoly nc = c.scaled(mult);
    if (nc.is_zero()) continue;  // characteristic divides the exponent
    ExpVec ne = ev;
    ne.e[i] -= 1;
    p.add_term(ne, nc);
  }
  return p;
}

MultiPoly MultiPoly::graded_component(int j) const {
  MultiPoly p(dom_, nvars_);
  for (const auto& [ev, c] : terms_)
    if (static_cast<int>(ev.total()) == j) p.terms_.emplace(ev, c);
  return p;
}

Scalar MultiPoly::eval(std::span<const Scalar> xs) const {
  if (static_cast<int>(xs.size()) != nvars_)
    throw ValidationError(ValidationKind::ArityMismatch, "evaluation arity mismatch");
  if (dom_.with_parameter)
    throw ValidationError(ValidationKind::DomainMismatch,
                          "cannot evaluate a parametric polynomial at scalars");
  Scalar acc = Scalar::zero(dom_.base);
  for (const auto& [ev, c] : terms_) {
    Scalar term = c.constant_value();
    for (int i = 0; i < nvars_; ++i)
      if (ev.e[i]) term = term * xs[i].pow(static_cast<long>(ev.e[i]));
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::dehomogenize_at0() const {
  MultiPoly p(dom_, nvars_ - 1);
  for (const auto& [ev, c] : terms_) {
    ExpVec ne{std::vector<std::uint32_t>(ev.e.begin() + 1, ev.e.end())};
    p.add_term(ne, c);
  }
  return p;
}

MultiPoly MultiPoly::specialize_parameter(const Scalar& a) const {
  CoeffDomain nd{dom_.base, false};
  MultiPoly p(nd, nvars_);
  for (const auto& [ev, c] : terms_) {
    Scalar v = c.eval(a);
    if (!v.is_zero()) p.add_term(ev, TPoly::constant(v));
  }
  return p;
}

MultiPoly MultiPoly::lift_to_parameter() const {
  if (dom_.with_parameter) return *this;
  CoeffDomain nd{dom_.base, true};
  MultiPoly p(nd, nvars_);
  for (const auto& [ev, c] : terms_) p.terms_.emplace(ev, c);
  return p;
}

MultiPoly MultiPoly::t_shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  MultiPoly p(dom_, nvars_);
  for (const auto& [ev, c] : terms_) p.terms_.emplace(ev, c.shifted_down(k));
  return p;
}

}  // namespace cremona
