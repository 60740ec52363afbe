#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sperner/certificate.hpp"
#include "sperner/complex.hpp"
#include "sperner/graph.hpp"
#include "sperner/instance.hpp"

namespace sperner {

enum class Colour { Black, White };

std::string to_string(Colour c);

/// A triangulated sphere with a free simplicial involution (antipodality)
/// and a black/white vertex colouring.
///
/// `origin` tags each vertex with where it came from:
///   "cap:i"  vertex of the all-white or all-black facet, coordinate i
///   "V3:i"   vertex of the middle (cylinder) part, coordinate i
///   "V1:u"   vertex of a copy of K standing for vertex u of K
///   "V2:ρ"   apex subdividing the copy of facet ρ of K
/// Antipodal vertices always carry the same tag.
struct SymmetricComplex {
  SimplicialComplex complex;
  std::vector<VertexIndex> involution;
  std::vector<Colour> colour;
  std::vector<std::string> origin;

  VertexIndex antipode(VertexIndex v) const { return involution[static_cast<std::size_t>(v)]; }
  Colour colour_of(VertexIndex v) const { return colour[static_cast<std::size_t>(v)]; }
};

/// Empty when the involution is a fixed-point-free, order-2 simplicial map
/// that reverses colours and no edge joins antipodal vertices.
std::vector<std::string> symmetry_violations(const SymmetricComplex& c);

/// Facets using only one colour.
std::vector<Simplex> monochromatic_facets(const SymmetricComplex& c);

/// Three copies of the boundary of the (d+1)-cross polytope (vertices "+i"
/// white, "-i" black): a cylinder without the all-plus and all-minus facets,
/// capped by the copy missing only the all-minus facet (vertices "w+i") on
/// one end and the copy missing only the all-plus facet (vertices "b-i") on
/// the other. Cylinder vertices are "c+i"/"c-i". Throws BadParams for d < 1.
SymmetricComplex build_glued_sphere(int d);

/// Replaces the all-white facet by a white copy of K and the all-black facet
/// by the antipodal black copy, matching the cap vertex of coordinate i with
/// corner i. Facets meeting a cap in a proper face are re-triangulated by
/// joining the part of K lying in that face with the rest of the facet, which
/// leaves them unchanged when K does not subdivide the boundary. Every
/// monochromatic facet is then coned from a new vertex of the other colour.
/// Throws DimensionMismatch or InvariantViolation.
SymmetricComplex insert_k_copies(const SymmetricComplex& c, const SpernerInstance& s);

struct QuotientGraph {
  Graph graph;
  /// Class i collects origin[i].first and its antipode origin[i].second.
  std::vector<std::pair<VertexId, VertexId>> origin;
  std::vector<int> class_of;  // indexed by vertex of the complex
};

/// Deletes monochromatic edges, then identifies antipodal vertices.
/// Throws InvariantViolation when `c` fails symmetry_violations().
QuotientGraph antipodal_quotient(const SymmetricComplex& c);

/// Builds K̃ and its quotient G. PASS needs: K̃ is a centrally symmetric
/// sphere meeting the quadrangulation lemma's colouring hypotheses; the tag
/// bijection is an isomorphism G ≅ G_K; G has an odd cycle. Whether every
/// facet's vertex classes induce a complete bipartite subgraph of G is
/// reported under "quotientFacetProperty" without affecting the status.
Certificate verify_projective_theorem(const SpernerInstance& s);

}  // namespace sperner
