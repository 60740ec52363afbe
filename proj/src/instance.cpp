#include "sperner/instance.hpp"

#include <algorithm>
#include <set>

#include "sperner/error.hpp"

namespace sperner {

LabelSet LabelSet::of(const std::vector<Label>& labels) {
  std::uint32_t bits = 0;
  for (Label l : labels) {
    if (l < 1 || l > kMaxLabels) throw Error(Errc::MalformedInstance, "label out of range");
    bits |= std::uint32_t{1} << (l - 1);
  }
  return LabelSet(bits);
}

std::vector<Label> LabelSet::labels() const {
  std::vector<Label> out;
  for (int i = 0; i < 32; ++i) {
    if ((bits_ >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

SpernerInstance::SpernerInstance(SimplicialComplex complex, int label_count,
                                 std::vector<LabelSet> supports, std::vector<VertexIndex> corners)
    : complex_(std::move(complex)),
      label_count_(label_count),
      supports_(std::move(supports)),
      corners_(std::move(corners)) {
  if (label_count_ < 1 || label_count_ > kMaxLabels) {
    throw Error(Errc::MalformedInstance, "label count must lie in 1..32");
  }
  if (supports_.size() != complex_.vertex_count()) {
    throw Error(Errc::MalformedInstance, "one support per vertex required");
  }
  if (corners_.size() != static_cast<std::size_t>(label_count_)) {
    throw Error(Errc::MalformedInstance, "one corner per label required");
  }
  for (auto v : corners_) {
    if (v < 0 || static_cast<std::size_t>(v) >= complex_.vertex_count()) {
      throw Error(Errc::MalformedInstance, "corner index out of range");
    }
  }
}

SpernerInstance SpernerInstance::from_named(SimplicialComplex complex, int label_count,
                                            const std::map<VertexId, LabelSet>& supports,
                                            const std::map<Label, VertexId>& corners) {
  std::vector<LabelSet> sup(complex.vertex_count(), LabelSet::full(label_count));
  for (const auto& [id, set] : supports) sup[static_cast<std::size_t>(complex.require_index(id))] = set;
  std::vector<VertexIndex> cor(static_cast<std::size_t>(label_count), -1);
  for (const auto& [label, id] : corners) {
    if (label < 1 || label > label_count) throw Error(Errc::MalformedInstance, "corner label out of range");
    cor[static_cast<std::size_t>(label - 1)] = complex.require_index(id);
  }
  if (std::find(cor.begin(), cor.end(), -1) != cor.end()) {
    throw Error(Errc::MalformedInstance, "every label needs a corner");
  }
  return SpernerInstance(std::move(complex), label_count, std::move(sup), std::move(cor));
}

bool InstanceReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

InstanceReport validate_instance(const SpernerInstance& s) {
  InstanceReport r;
  const auto& c = s.complex();
  auto add = [&](std::string code, std::string detail) {
    r.violations.push_back({std::move(code), std::move(detail)});
  };

  if (c.facet_count() == 0) {
    add("EMPTY_COMPLEX", "instance has no facets");
    return r;
  }
  if (!c.is_pure()) add("NOT_PURE", "facets of different dimensions");
  if (c.dim() != s.dim()) {
    add("LABEL_COUNT_MISMATCH", "complex dimension " + std::to_string(c.dim()) + " needs " +
                                    std::to_string(c.dim() + 1) + " labels, instance has " +
                                    std::to_string(s.label_count()));
  }

  const LabelSet full = LabelSet::full(s.label_count());
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    const LabelSet sup = s.supports()[v];
    if (sup.empty()) add("EMPTY_SUPPORT", c.vertices()[v]);
    if (!sup.subset_of(full)) add("SUPPORT_OUT_OF_RANGE", c.vertices()[v]);
  }

  std::set<VertexIndex> seen;
  for (Label l = 1; l <= s.label_count(); ++l) {
    const VertexIndex v = s.corner(l);
    const auto& name = c.vertices()[static_cast<std::size_t>(v)];
    if (!seen.insert(v).second) add("CORNER_DUPLICATE", name);
    const LabelSet sup = s.support(v);
    if (sup.size() != 1) {
      add("CORNER_NOT_SINGLETON", name);
    } else if (sup != LabelSet::single(l)) {
      add("CORNER_LABEL_MISMATCH", name + " is corner " + std::to_string(l));
    }
  }

  if (c.is_pure() && c.dim() >= 1) {
    for (const auto& [ridge, owners] : ridge_incidence(c)) {
      if (owners.size() > 2) add("NOT_PSEUDOMANIFOLD", format_simplex(c.names(ridge)));
      if (owners.size() != 1) continue;
      LabelSet u;
      for (auto v : ridge) u = u | s.support(v);
      if ((u & full) == full) add("BOUNDARY_FULL_SUPPORT", format_simplex(c.names(ridge)));
    }
  }
  return r;
}

}  // namespace sperner
