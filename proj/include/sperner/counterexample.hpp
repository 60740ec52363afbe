#pragma once

#include <cstdint>
#include <optional>

#include "sperner/certificate.hpp"
#include "sperner/sperner.hpp"

namespace sperner {

/// A Sperner instance with a designated facet that is never the only
/// rainbow facet.
struct Counterexample {
  SpernerInstance instance;
  Simplex sigma;
};

/// (∂H8 − ABGZ) joined with a (d−4)-simplex on fresh vertices p5..p(d+1).
/// Corners: A,B,G,Z → 1..4 and p_j → j; C,D,E,F carry {1,2,3,4}.
/// sigma = CDEF ∪ {p5..p(d+1)}. Throws BadDimension for d < 3.
Counterexample build_kd(int d);

/// Performs `steps` stellar subdivisions of facets other than `sigma`, with
/// apexes b1, b2, ... (continuing past any existing b-names) carrying the
/// full label set. Without a seed the lexicographically first eligible facet
/// is refined; with one, a uniformly random eligible facet.
/// Throws NoEligibleFacet when only sigma is left.
SpernerInstance refine(const SpernerInstance& s, const Simplex& sigma, int steps,
                       std::optional<std::uint64_t> seed = std::nullopt);

/// PASS iff every labelling has a rainbow facet other than `sigma`. Details
/// record the unique-rainbow search outcome and the rainbow-free count.
Certificate verify_theorem_main(const SpernerInstance& s, const Simplex& sigma, const SearchOptions& opts = {});

}  // namespace sperner
