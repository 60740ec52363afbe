#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sperner {

/// Opaque vertex name. Constructions use deterministic prefixes so that
/// every run produces identical complexes.
using VertexId = std::string;

/// A simplex given by vertex names, kept sorted and duplicate-free.
using Simplex = std::vector<VertexId>;

/// Position of a vertex in a complex's sorted vertex list.
using VertexIndex = int;

/// A simplex given by vertex positions, sorted ascending.
using IndexSimplex = std::vector<VertexIndex>;

/// Sorts `vertices` and rejects repeats (RepeatedVertex).
Simplex make_simplex(std::vector<VertexId> vertices);

/// Parses "A,B,C" (or "A B C") into a simplex.
Simplex parse_simplex(const std::string& text);

std::string format_simplex(const Simplex& s, const std::string& sep = ",");

/// Pure-or-not simplicial complex stored by its facets.
///
/// Vertices are kept in sorted order and facets are stored as sorted index
/// vectors in lexicographic order, so two complexes with the same facet sets
/// compare equal and serialize identically. Faces are never stored; they are
/// enumerated from the facets on demand.
///
/// A complex with no facets is the void complex. The complex whose only facet
/// is the empty simplex (see empty_simplex()) is the identity for join().
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Throws DuplicateFacet, NonMaximalFacet or RepeatedVertex.
  explicit SimplicialComplex(const std::vector<Simplex>& facets);

  static SimplicialComplex empty_simplex();

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<IndexSimplex>& facets() const { return facets_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t facet_count() const { return facets_.size(); }

  /// Largest facet dimension; -1 for the void complex and for {∅}.
  int dim() const { return dim_; }
  bool is_pure() const { return pure_; }

  std::optional<VertexIndex> index_of(const VertexId& v) const;
  VertexIndex require_index(const VertexId& v) const;  // UnknownVertex
  IndexSimplex to_indices(const Simplex& s) const;     // UnknownVertex

  std::optional<std::size_t> find_facet(const IndexSimplex& s) const;
  std::optional<std::size_t> find_facet(const Simplex& s) const;
  std::size_t require_facet(const Simplex& s) const;  // NotAFacet

  Simplex names(const IndexSimplex& s) const;
  Simplex facet_names(std::size_t i) const { return names(facets_[i]); }
  std::vector<Simplex> facet_list() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<IndexSimplex> facets_;
  int dim_ = -1;
  bool pure_ = true;
};

struct StructureReport {
  bool pure = false;
  bool pseudomanifold = false;
  std::vector<Simplex> boundary_faces;
  std::vector<std::size_t> f_vector;  // f_0, f_1, ..., f_d
  long long euler_char = 0;
  bool closed() const { return pseudomanifold && boundary_faces.empty(); }
};

/// Purity, pseudomanifold status, boundary ridges, f-vector and Euler
/// characteristic. Requires a non-empty facet list (BadInput).
StructureReport validate_complex(const SimplicialComplex& c);

/// All k-faces of `c` for k = 0..dim, each list sorted.
std::vector<std::vector<IndexSimplex>> faces_by_dimension(const SimplicialComplex& c);

/// Codimension-one faces mapped to the facets containing them. Assumes a pure
/// complex of dimension >= 1.
std::map<IndexSimplex, std::vector<std::size_t>> ridge_incidence(const SimplicialComplex& c);

/// Edges of the 1-skeleton as sorted index pairs.
std::vector<std::pair<VertexIndex, VertexIndex>> edges(const SimplicialComplex& c);

bool one_skeleton_connected(const SimplicialComplex& c);

/// Facets are all unions of a facet of `k` with a facet of `l`.
/// Throws VertexClash when the vertex sets meet.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// Cone from `new_vertex` over the boundary of facet `f`, replacing `f`.
/// Throws NotAFacet or VertexClash.
SimplicialComplex stellar_subdivide_facet(const SimplicialComplex& c, const Simplex& f,
                                          const VertexId& new_vertex);

/// Drops one facet.
SimplicialComplex remove_facet(const SimplicialComplex& c, const Simplex& f);

struct IsomorphismOptions {
  std::size_t max_vertices = 10;
};

struct IsomorphismResult {
  std::optional<std::map<VertexId, VertexId>> bijection;
  std::uint64_t nodes_explored = 0;
};

/// Backtracking search for a vertex bijection carrying the facets of `a`
/// onto those of `b`. Throws TooLarge over `options.max_vertices`.
IsomorphismResult complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                                       IsomorphismOptions options = {});

}  // namespace sperner
