#pragma once

#include <array>
#include <string>
#include <vector>

#include "sperner/sperner.hpp"

namespace sperner {

/// A 2-dimensional Sperner instance whose boundary cycle is split into the
/// arcs corner1→corner2, corner2→corner3 and corner3→corner1 (endpoints
/// included).
struct DiskTriangulation {
  SpernerInstance instance;
  std::array<std::vector<VertexIndex>, 3> arcs;
};

/// Throws BadBoundary when the instance is not a triangulated disk whose
/// boundary is one cycle through the three corners with arc supports
/// avoiding the opposite label.
DiskTriangulation make_disk(const SpernerInstance& s);

using Triangle = std::array<VertexIndex, 3>;

/// A triangulated 2-sphere on the vertices of K. Faces may repeat a vertex
/// set (the trivial disk closes up into two copies of one triangle), which is
/// why this is a face list and not a SimplicialComplex. The first faces are
/// K's facets in K's order, the last one is tau.
struct PlanarSphere {
  std::vector<VertexId> vertices;
  std::vector<Triangle> faces;
  std::size_t tau = 0;
  /// Faces [disk_faces, tau) are lune triangles. A dual path may enter a lune
  /// from the disk but never leave it again except into tau; otherwise a
  /// boundary vertex can end up in the region of the opposite corner.
  std::size_t disk_faces = 0;
};

/// Closes the disk with the outer face tau = v1v2v3, triangulating the lune
/// between each arc vi..vj and the new edge vivj as a fan from vi (one
/// triangle per interior arc vertex). Throws BadBoundary when the result is
/// not a sphere.
PlanarSphere extend_to_sphere(const DiskTriangulation& k);

/// Euler characteristic V - E + F of the face list.
long long euler_characteristic(const PlanarSphere& s);

struct DualPathSystem {
  /// Face indices from sigma to tau.
  std::vector<std::vector<std::size_t>> faces;
  /// Primal edge crossed by each step of the matching path.
  std::vector<std::vector<std::pair<VertexIndex, VertexIndex>>> crossed;
};

/// Three internally vertex-disjoint dual paths from face `sigma` to face
/// `tau`, via unit vertex-capacity max flow with BFS augmenting paths.
/// Lune faces are one-way as described on PlanarSphere. Throws FlowLessThan3.
DualPathSystem three_disjoint_dual_paths(const PlanarSphere& s, std::size_t sigma, std::size_t tau);

/// Deletes the crossed edges and labels each vertex with the index of the
/// corner in its component. Throws RegionDecompositionFailed unless there are
/// exactly three components, each holding one corner and one vertex of sigma.
Labelling region_labelling(const PlanarSphere& s, const DualPathSystem& paths, std::size_t sigma,
                           const std::array<VertexIndex, 3>& corners);

struct PlanarOptions {
  bool fallback_exhaustive = false;
  SearchOptions search;
};

struct PlanarResult {
  Labelling labelling;
  DualPathSystem paths;
  bool fallback_used = false;
};

/// A Sperner labelling whose only rainbow facet is `sigma`. The output is
/// re-checked; on failure the exhaustive search takes over when allowed,
/// otherwise ValidationFailed is thrown.
PlanarResult unique_rainbow_labelling_2d(const DiskTriangulation& k, const Simplex& sigma,
                                         const PlanarOptions& opts = {});

struct CorpusEntry {
  std::string name;
  SpernerInstance instance;
};

/// Triangulations of the triangle used throughout the tests: the trivial one,
/// every single and double stellar refinement, the midpoint and barycentric
/// subdivisions, a ten-vertex example and triangular grids of side 3 and 4.
std::vector<CorpusEntry> planar_corpus();

/// Triangular grid of the given side, vertices "v1","v2","v3" at the corners
/// and "g<a><b><c>" elsewhere (barycentric coordinates times `side`).
SpernerInstance triangle_grid(int side);

}  // namespace sperner
