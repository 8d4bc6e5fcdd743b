#ifndef CREMONA_PATHS_HPP
#define CREMONA_PATHS_HPP

#include <functional>

#include "cremona/lingroup.hpp"

namespace cremona {

// One factor of a constructed path, with the inputs needed to replay it.
struct PathStep {
  enum class Kind {
    LinearPslSegment,      // psl_path between two SL lifts
    DetClassGadgetSegment, // the inverted gadget-commutator family C^-1
    ConjLimitSegment,      // conj_limit of a fixed map at a point
    ConstantConjugation,   // constant family of a certified map
  };

  Kind kind;
  Family family;
  // replay inputs, populated per kind
  std::optional<Matrix> sl_from, sl_to;   // LinearPslSegment
  std::optional<Scalar> gadget_lambda;    // DetClassGadgetSegment
  std::optional<int> gadget_n;            // DetClassGadgetSegment
  std::optional<CremonaMap> map_input;    // ConjLimitSegment / ConstantConjugation
  std::optional<Point> point_input;       // ConjLimitSegment

  static const char* kind_name(Kind k);
};

// Audit record: the ordered product of the step families is the output.
struct PathPlan {
  std::vector<PathStep> steps;
};

// First point in the fixed integer-point enumeration where g is a local
// isomorphism. Stages double the coordinate bound: 1, 2, 4, ..., up to
// height_bound; within a stage points are ordered by the index of their
// first nonzero coordinate, its value (1..h), and the remaining
// coordinates in the value order 0, 1, -1, 2, -2, ...
Point find_local_iso_point(const CremonaMap& g, int height_bound = 64);

// The enumeration itself, exposed so the order is testable: visits points
// until the callback returns true; nullopt when exhausted.
std::optional<Point> search_points(int n, int height_bound,
                                   const std::function<bool(const Point&)>& accept);

// An automorphism alpha in PSL fixing p (and q = f(p) when distinct) such
// that g = alpha^-1 . f^-1 . alpha . f fixes p, is a local isomorphism
// there, and has a nontrivial derivative. The search runs over basis
// transvections conjugated to fix p (and q), parameters 1..20 per
// generator, in a fixed order.
std::pair<ProjMatrix, CremonaMap> commutator_fixer(const CremonaMap& f,
                                                   const Point& p);

// A family from the identity to the linear map h: one PSL segment when the
// determinant class is trivial, otherwise the gadget route through the two
// conjugation-limit families of the two-fixed-point gadget with lambda =
// det of the canonical lift.
std::pair<Family, std::vector<PathStep>> connect_linear(const ProjMatrix& h);

struct ConnectResult {
  Family family;  // nu with nu(0) = f, nu(1) = g
  PathPlan plan;
};

// The connectedness construction: an explicit polynomial family joining
// two certified maps over the rationals, n >= 2.
ConnectResult connect(const CremonaMap& f, const CremonaMap& g,
                      int height_bound = 64);

// Re-executes every step from its recorded inputs.
Family replay(const PathPlan& plan);

}  // namespace cremona

#endif
