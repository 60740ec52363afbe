#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "sperner/certificate.hpp"
#include "sperner/instance.hpp"

namespace sperner {

/// Dense labelling indexed by VertexIndex of the instance's complex.
using Labelling = std::vector<Label>;
using NamedLabelling = std::map<VertexId, Label>;

/// Throws MissingVertex when `named` is not total, UnknownVertex on extras.
Labelling densify(const SpernerInstance& s, const NamedLabelling& named);
NamedLabelling name_labelling(const SpernerInstance& s, const Labelling& l);

struct SearchOptions {
  std::uint64_t bound = std::uint64_t{1} << 24;
  int jobs = 1;
};

/// Throws MissingVertex when `l` does not cover every vertex.
bool is_valid_sperner(const SpernerInstance& s, const Labelling& l);
bool is_valid_sperner(const SpernerInstance& s, const NamedLabelling& l);

struct RainbowReport {
  std::vector<std::size_t> facet_indices;
  std::vector<Simplex> facets;
  std::size_t count() const { return facet_indices.size(); }
};

/// Throws InvalidLabelling when `l` is not a valid Sperner labelling.
RainbowReport rainbow_facets(const SpernerInstance& s, const Labelling& l);

/// True when the labels on `f` are pairwise distinct.
inline bool is_rainbow(const IndexSimplex& f, const Labelling& l) {
  std::uint32_t seen = 0;
  for (auto v : f) {
    const std::uint32_t bit = std::uint32_t{1} << (l[static_cast<std::size_t>(v)] - 1);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

/// The product over vertices of their supports, corners pinned to their
/// label. Order is lexicographic over the sorted vertex list (vertex 0 is the
/// most significant digit, labels ascend within a support).
class LabellingSpace {
 public:
  explicit LabellingSpace(const SpernerInstance& s);

  /// Number of labellings, saturated at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  bool saturated() const { return saturated_; }
  const std::vector<std::vector<Label>>& options() const { return options_; }

  Labelling first() const;
  void decode(std::uint64_t index, Labelling& out) const;
  /// Odometer step; returns false after the last labelling.
  bool advance(Labelling& l) const;

 private:
  std::vector<std::vector<Label>> options_;
  std::uint64_t size_ = 1;
  bool saturated_ = false;
};

/// Streams every labelling of the space in order.
class LabellingEnumerator {
 public:
  explicit LabellingEnumerator(const SpernerInstance& s) : space_(s) {}
  /// Moves to the next labelling; false once exhausted.
  bool next();
  const Labelling& current() const { return current_; }
  const LabellingSpace& space() const { return space_; }

 private:
  LabellingSpace space_;
  Labelling current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Labelling> enumerate_labellings(const SpernerInstance& s, const SearchOptions& opts = {});

/// Throws SearchSpaceTooLarge when the space exceeds `opts.bound`.
void require_enumerable(const LabellingSpace& space, const SearchOptions& opts);

/// Splits the space into `jobs` contiguous ranges, runs `work(begin, end)` on
/// each (concurrently when jobs > 1) and folds the partial results in range
/// order with `merge`, so the outcome does not depend on scheduling.
template <class Result, class Work, class Merge>
Result sweep_ranges(const LabellingSpace& space, int jobs, Work work, Merge merge) {
  const std::uint64_t total = space.size();
  const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(
                                                              static_cast<std::uint64_t>(std::max(jobs, 1)), total));
  std::vector<Result> partial(static_cast<std::size_t>(parts));
  auto range = [&](std::uint64_t p) {
    return std::pair{total / parts * p + std::min(p, total % parts),
                     total / parts * (p + 1) + std::min(p + 1, total % parts)};
  };
  if (parts == 1) {
    partial[0] = work(std::uint64_t{0}, total);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t p = 0; p < parts; ++p) {
      pool.emplace_back([&, p] {
        auto [b, e] = range(p);
        partial[static_cast<std::size_t>(p)] = work(b, e);
      });
    }
    for (auto& t : pool) t.join();
  }
  Result acc = std::move(partial[0]);
  for (std::size_t p = 1; p < partial.size(); ++p) acc = merge(std::move(acc), std::move(partial[p]));
  return acc;
}

/// Exhaustively checks that every labelling has a rainbow facet. A FAIL means
/// the instance is not a valid Sperner instance; the witness is the
/// lexicographically first rainbow-free labelling.
Certificate verify_sperner_lemma(const SpernerInstance& s, const SearchOptions& opts = {});

/// Pruned exhaustive search for a labelling whose only rainbow facet is
/// `sigma`. Returns the lexicographically first such labelling.
/// Throws NotAFacet / SearchSpaceTooLarge.
std::optional<Labelling> unique_rainbow_witness(const SpernerInstance& s, const Simplex& sigma,
                                                const SearchOptions& opts = {});
std::optional<Labelling> unique_rainbow_witness(const SpernerInstance& s, std::size_t facet,
                                                const SearchOptions& opts = {});

struct FacetClassification {
  std::size_t facet = 0;
  Simplex simplex;
  std::optional<Labelling> witness;
  bool admits_unique_rainbow() const { return witness.has_value(); }
};

std::vector<FacetClassification> classify_facets(const SpernerInstance& s, const SearchOptions& opts = {});

nlohmann::json labelling_to_json(const SpernerInstance& s, const Labelling& l);

}  // namespace sperner
