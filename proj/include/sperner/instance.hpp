#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sperner/complex.hpp"

namespace sperner {

/// Labels run 1..labelCount.
using Label = int;

constexpr int kMaxLabels = 32;

/// Set of labels stored as a bitmask (bit i-1 is label i).
class LabelSet {
 public:
  constexpr LabelSet() = default;
  constexpr explicit LabelSet(std::uint32_t bits) : bits_(bits) {}

  static LabelSet single(Label l) { return LabelSet(std::uint32_t{1} << (l - 1)); }
  static LabelSet full(int label_count) {
    return LabelSet(label_count >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << label_count) - 1);
  }
  static LabelSet of(const std::vector<Label>& labels);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool contains(Label l) const { return l >= 1 && l <= 32 && (bits_ >> (l - 1)) & 1U; }
  bool subset_of(LabelSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<Label> labels() const;

  LabelSet operator|(LabelSet o) const { return LabelSet(bits_ | o.bits_); }
  LabelSet operator&(LabelSet o) const { return LabelSet(bits_ & o.bits_); }
  friend bool operator==(LabelSet, LabelSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A pure complex together with per-vertex label supports and corner
/// designations. The support of a vertex is the set of labels of the corners
/// spanning its carrier face in the simplex being triangulated; corner i has
/// support {i}.
///
/// The constructor checks only shape (sizes, label range). Semantic validity
/// is reported by validate_instance().
class SpernerInstance {
 public:
  SpernerInstance(SimplicialComplex complex, int label_count, std::vector<LabelSet> supports,
                  std::vector<VertexIndex> corners);

  /// Builds from names. Vertices missing from `supports` get the full label
  /// set. Throws UnknownVertex / MalformedInstance.
  static SpernerInstance from_named(SimplicialComplex complex, int label_count,
                                    const std::map<VertexId, LabelSet>& supports,
                                    const std::map<Label, VertexId>& corners);

  const SimplicialComplex& complex() const { return complex_; }
  int label_count() const { return label_count_; }
  int dim() const { return label_count_ - 1; }
  LabelSet support(VertexIndex v) const { return supports_[static_cast<std::size_t>(v)]; }
  /// Labels a Sperner labelling may actually use at v: corner i is pinned to i.
  LabelSet allowed(VertexIndex v) const {
    for (std::size_t i = 0; i < corners_.size(); ++i) {
      if (corners_[i] == v) return LabelSet::single(static_cast<Label>(i + 1));
    }
    return support(v);
  }
  const std::vector<LabelSet>& supports() const { return supports_; }
  VertexIndex corner(Label l) const { return corners_[static_cast<std::size_t>(l - 1)]; }
  const std::vector<VertexIndex>& corners() const { return corners_; }

  friend bool operator==(const SpernerInstance&, const SpernerInstance&) = default;

 private:
  SimplicialComplex complex_;
  int label_count_;
  std::vector<LabelSet> supports_;
  std::vector<VertexIndex> corners_;
};

struct Violation {
  std::string code;
  std::string detail;
};

struct InstanceReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  bool has(const std::string& code) const;
};

/// Checks purity, dimension vs. label count, corner singletons, support
/// ranges and the boundary condition (every boundary ridge misses a label).
InstanceReport validate_instance(const SpernerInstance& s);

}  // namespace sperner
