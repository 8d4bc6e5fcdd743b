#ifndef CREMONA_IO_HPP
#define CREMONA_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cremona/matrix.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/point.hpp"

namespace cremona {

// Polynomial grammar: variables x0..xN and t, operators + - * ^ with
// natural exponents, rational (or residue) literals, parentheses.
MultiPoly parse_poly(std::string_view text, const CoeffDomain& dom, int nvars);

// "[p0 : p1 : ... : pn]"; the component count determines n+1.
std::vector<MultiPoly> parse_tuple(std::string_view text, const CoeffDomain& dom,
                                   int nvars);

// A map literal with an optional certificate: "[...]" or
// "[...] ;; inverse=[...]".
struct ParsedMap {
  std::vector<MultiPoly> components;
  std::vector<MultiPoly> inverse;  // empty when absent
};
ParsedMap parse_map_text(std::string_view text, const CoeffDomain& dom, int nvars);

// "[c0 : c1 : ... : cn]" with scalar literals.
Point parse_point(std::string_view text, const Field& f);

// Rows separated by ';', entries by ','.
Matrix parse_matrix(std::string_view text, const Field& f);

std::string poly_str(const MultiPoly& f);
std::string tuple_str(std::span<const MultiPoly> comps);
std::string point_str(const Point& p);
std::string matrix_str(const Matrix& m);

}  // namespace cremona

#endif
