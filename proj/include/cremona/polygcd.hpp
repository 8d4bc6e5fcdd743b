#ifndef CREMONA_POLYGCD_HPP
#define CREMONA_POLYGCD_HPP

#include <optional>
#include <span>

#include "cremona/multipoly.hpp"

namespace cremona {

// Exact division f / g. Throws DomainMismatch on mismatched inputs and
// InvalidParameter when g does not divide f exactly.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

// Exact division if it succeeds, nullopt if g does not divide f.
std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g);

// Gcd of two polynomials, normalized so the graded-lex leading coefficient
// is 1 (with the parameter t ordered after the x variables when present).
// gcd(0, 0) = 0. Implemented by content/primitive-part recursion down to
// the subresultant pseudo-remainder sequence in one variable.
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

// Gcd of a nonempty list, same normalization.
MultiPoly multi_gcd(std::span<const MultiPoly> fs);

// Internal representation change: a polynomial over k[t] in x_0..x_n is the
// same data as one over k in x_0..x_n,t (parameter slot last). Exposed for
// tests of the division kernel.
MultiPoly flatten_parameter(const MultiPoly& f);
MultiPoly unflatten_parameter(const MultiPoly& f, const CoeffDomain& dom);

}  // namespace cremona

#endif
