#pragma once

#include <map>
#include <string>
#include <vector>

#include "sperner/certificate.hpp"
#include "sperner/complex.hpp"
#include "sperner/instance.hpp"
#include "sperner/sperner.hpp"

namespace sperner {

/// The 20 facets of the boundary of the neighbourly 4-polytope H8, one
/// string of vertex letters per facet, in table order.
const std::vector<std::string>& h8_facet_table();

SimplicialComplex h8_boundary();
Simplex h8_sigma0();  // ABGZ
Simplex h8_sigma1();  // CDEF

struct TwoRainbowOptions {
  /// Pin the labels of sigma0 to 1,2,3,4 and multiply counts by 4! = 24.
  bool symmetry_reduction = true;
  SearchOptions search;
};

/// For a closed 3-pseudomanifold and two disjoint facets, checks that every
/// 4-labelling making both facets rainbow has a third rainbow facet.
///
/// Two independent routes run: a plain sweep over all labellings (reduced or
/// not) and a propagation search that only visits labellings where the two
/// facets are the only rainbow ones. The propagation uses three rules: the two
/// facets are rainbow; a facet sharing a triangle with one of them has
/// differently labelled vertices outside that triangle; every other facet is
/// not rainbow. The certificate fails when either route finds a labelling
/// with exactly two rainbow facets, and records a mismatch between routes.
/// Throws BadInput when the preconditions fail.
Certificate two_rainbow_check(const SimplicialComplex& c, const Simplex& sigma0, const Simplex& sigma1,
                              const TwoRainbowOptions& opts = {});

inline Certificate h8_property_check(const SimplicialComplex& c, const Simplex& sigma0,
                                     const Simplex& sigma1, const TwoRainbowOptions& opts = {}) {
  return two_rainbow_check(c, sigma0, sigma1, opts);
}

struct Deduction {
  VertexId vertex;
  Label label = 0;
  std::string rule;  // "shared-triangle", "rainbow", "not-rainbow"
  Simplex via;       // facet the rule was applied to
};

struct DeductionTrace {
  std::vector<Deduction> forced;
  bool contradiction = false;
  Simplex contradiction_facet;
  nlohmann::json to_json() const;
};

/// Runs the propagation rules above once, from sigma0 labelled 1,2,3,4 in
/// vertex order, and records every label they force.
DeductionTrace two_rainbow_deduction(const SimplicialComplex& c, const Simplex& sigma0, const Simplex& sigma1);

struct CrossPolytope {
  SimplicialComplex complex;
  std::map<VertexId, VertexId> antipode;
};

/// Boundary of the cross polytope: vertices "+i" and "-i" for i = 1..dim,
/// facets all sign choices. Throws BadParams for dim < 1.
CrossPolytope cross_polytope_boundary(int dim);

/// Boundary of the cyclic polytope C(n, dim) from Gale's evenness condition,
/// vertices "1".."n". Throws BadParams unless 2 <= dim < n.
SimplicialComplex cyclic_polytope_boundary(int n, int dim);

/// Removes `tau` from a closed pseudomanifold and returns the resulting
/// Sperner instance: corners are tau's vertices (in order, labels 1..d+1),
/// every other vertex gets the full label set.
SpernerInstance associated_triangulation(const SimplicialComplex& c, const Simplex& tau);

}  // namespace sperner
