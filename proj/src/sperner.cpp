#include "sperner/sperner.hpp"

#include <limits>

#include "sperner/error.hpp"

namespace sperner {

Labelling densify(const SpernerInstance& s, const NamedLabelling& named) {
  const auto& c = s.complex();
  Labelling out(c.vertex_count(), 0);
  for (const auto& [id, label] : named) out[static_cast<std::size_t>(c.require_index(id))] = label;
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (out[v] == 0) throw Error(Errc::MissingVertex, "no label for '" + c.vertices()[v] + "'");
  }
  return out;
}

NamedLabelling name_labelling(const SpernerInstance& s, const Labelling& l) {
  NamedLabelling out;
  for (std::size_t v = 0; v < l.size(); ++v) out[s.complex().vertices()[v]] = l[v];
  return out;
}

bool is_valid_sperner(const SpernerInstance& s, const Labelling& l) {
  if (l.size() != s.complex().vertex_count()) {
    throw Error(Errc::MissingVertex, "labelling covers " + std::to_string(l.size()) + " of " +
                                         std::to_string(s.complex().vertex_count()) + " vertices");
  }
  for (Label i = 1; i <= s.label_count(); ++i) {
    if (l[static_cast<std::size_t>(s.corner(i))] != i) return false;
  }
  for (std::size_t v = 0; v < l.size(); ++v) {
    if (!s.supports()[v].contains(l[v])) return false;
  }
  return true;
}

bool is_valid_sperner(const SpernerInstance& s, const NamedLabelling& l) {
  return is_valid_sperner(s, densify(s, l));
}

RainbowReport rainbow_facets(const SpernerInstance& s, const Labelling& l) {
  if (!is_valid_sperner(s, l)) throw Error(Errc::InvalidLabelling, "not a Sperner labelling");
  RainbowReport r;
  const auto& c = s.complex();
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    if (is_rainbow(c.facets()[i], l)) {
      r.facet_indices.push_back(i);
      r.facets.push_back(c.facet_names(i));
    }
  }
  return r;
}

LabellingSpace::LabellingSpace(const SpernerInstance& s) {
  const auto n = s.complex().vertex_count();
  options_.resize(n);
  for (std::size_t v = 0; v < n; ++v) options_[v] = s.allowed(static_cast<VertexIndex>(v)).labels();
  for (const auto& o : options_) {
    if (o.empty()) {
      size_ = 0;
      break;
    }
    if (size_ > std::numeric_limits<std::uint64_t>::max() / o.size()) {
      size_ = std::numeric_limits<std::uint64_t>::max();
      saturated_ = true;
      break;
    }
    size_ *= o.size();
  }
}

Labelling LabellingSpace::first() const {
  Labelling out(options_.size());
  for (std::size_t v = 0; v < options_.size(); ++v) out[v] = options_[v].empty() ? 0 : options_[v][0];
  return out;
}

void LabellingSpace::decode(std::uint64_t index, Labelling& out) const {
  out.resize(options_.size());
  for (std::size_t v = options_.size(); v-- > 0;) {
    const auto radix = options_[v].size();
    out[v] = options_[v][index % radix];
    index /= radix;
  }
}

bool LabellingSpace::advance(Labelling& l) const {
  for (std::size_t v = options_.size(); v-- > 0;) {
    const auto& o = options_[v];
    auto it = std::find(o.begin(), o.end(), l[v]);
    if (it + 1 != o.end()) {
      l[v] = *(it + 1);
      return true;
    }
    l[v] = o.front();
  }
  return false;
}

bool LabellingEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (space_.size() == 0) {
      done_ = true;
      return false;
    }
    current_ = space_.first();
    return true;
  }
  if (!space_.advance(current_)) done_ = true;
  return !done_;
}

void require_enumerable(const LabellingSpace& space, const SearchOptions& opts) {
  if (space.saturated() || space.size() > opts.bound) {
    throw Error(Errc::SearchSpaceTooLarge,
                (space.saturated() ? std::string("more than 2^64") : std::to_string(space.size())) +
                    " labellings exceed the bound " + std::to_string(opts.bound));
  }
}

std::vector<Labelling> enumerate_labellings(const SpernerInstance& s, const SearchOptions& opts) {
  LabellingEnumerator e(s);
  require_enumerable(e.space(), opts);
  std::vector<Labelling> out;
  out.reserve(static_cast<std::size_t>(e.space().size()));
  while (e.next()) out.push_back(e.current());
  return out;
}

namespace {

struct SpernerSweep {
  std::uint64_t labellings = 0;
  std::uint64_t rainbow_free = 0;
  std::uint64_t even_counts = 0;
  std::size_t min_rainbow = std::numeric_limits<std::size_t>::max();
  std::size_t max_rainbow = 0;
  std::optional<Labelling> first_free;
};

}  // namespace

Certificate verify_sperner_lemma(const SpernerInstance& s, const SearchOptions& opts) {
  const LabellingSpace space(s);
  require_enumerable(space, opts);
  const auto& facets = s.complex().facets();

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    SpernerSweep r;
    if (begin == end) return r;
    Labelling l;
    space.decode(begin, l);
    for (std::uint64_t i = begin; i < end; ++i) {
      std::size_t count = 0;
      for (const auto& f : facets) count += is_rainbow(f, l);
      ++r.labellings;
      r.min_rainbow = std::min(r.min_rainbow, count);
      r.max_rainbow = std::max(r.max_rainbow, count);
      if (count % 2 == 0) ++r.even_counts;
      if (count == 0) {
        ++r.rainbow_free;
        if (!r.first_free) r.first_free = l;
      }
      space.advance(l);
    }
    return r;
  };
  auto merge = [](SpernerSweep a, SpernerSweep b) {
    a.labellings += b.labellings;
    a.rainbow_free += b.rainbow_free;
    a.even_counts += b.even_counts;
    a.min_rainbow = std::min(a.min_rainbow, b.min_rainbow);
    a.max_rainbow = std::max(a.max_rainbow, b.max_rainbow);
    if (!a.first_free) a.first_free = std::move(b.first_free);
    return a;
  };
  const auto r = sweep_ranges<SpernerSweep>(space, opts.jobs, work, merge);

  Certificate cert;
  cert.kind = "sperner-lemma";
  cert.space_size = space.size();
  cert.status = r.rainbow_free == 0 ? Status::Pass : Status::Fail;
  if (r.first_free) cert.witness = labelling_to_json(s, *r.first_free);
  cert.details = {{"labellings", r.labellings},
                  {"rainbowFree", r.rainbow_free},
                  {"minRainbow", r.labellings ? r.min_rainbow : 0},
                  {"maxRainbow", r.max_rainbow},
                  // Observation only: the parity strengthening is not part of
                  // what is being certified.
                  {"allRainbowCountsOdd", r.even_counts == 0}};
  return cert;
}

std::optional<Labelling> unique_rainbow_witness(const SpernerInstance& s, const Simplex& sigma,
                                                const SearchOptions& opts) {
  return unique_rainbow_witness(s, s.complex().require_facet(make_simplex(sigma)), opts);
}

std::optional<Labelling> unique_rainbow_witness(const SpernerInstance& s, std::size_t facet,
                                                const SearchOptions& opts) {
  const auto& c = s.complex();
  if (facet >= c.facet_count()) throw Error(Errc::NotAFacet, "facet index out of range");
  const LabellingSpace space(s);
  require_enumerable(space, opts);
  const std::size_t n = c.vertex_count();
  if (n == 0) return std::nullopt;

  // Each facet is decided once its largest vertex is labelled.
  std::vector<std::vector<std::size_t>> closing(n);
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    closing[static_cast<std::size_t>(c.facets()[i].back())].push_back(i);
  }
  const IndexSimplex& target = c.facets()[facet];
  std::vector<bool> in_target(n, false);
  for (auto v : target) in_target[static_cast<std::size_t>(v)] = true;

  Labelling l(n, 0);
  std::uint32_t target_labels = 0;

  auto dfs = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (Label lab : space.options()[v]) {
      const std::uint32_t bit = std::uint32_t{1} << (lab - 1);
      if (in_target[v] && (target_labels & bit)) continue;
      l[v] = lab;
      bool ok = true;
      for (auto fi : closing[v]) {
        if (fi != facet && is_rainbow(c.facets()[fi], l)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (in_target[v]) target_labels |= bit;
      const bool found = self(self, v + 1);
      if (in_target[v]) target_labels &= ~bit;
      if (found) return true;
    }
    l[v] = 0;
    return false;
  };
  if (dfs(dfs, 0)) return l;
  return std::nullopt;
}

std::vector<FacetClassification> classify_facets(const SpernerInstance& s, const SearchOptions& opts) {
  const auto& c = s.complex();
  require_enumerable(LabellingSpace(s), opts);
  std::vector<FacetClassification> out(c.facet_count());
  auto run = [&](std::size_t i) {
    out[i].facet = i;
    out[i].simplex = c.facet_names(i);
    out[i].witness = unique_rainbow_witness(s, i, opts);
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < out.size(); ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = static_cast<std::size_t>(t); i < out.size(); i += static_cast<std::size_t>(jobs)) run(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

nlohmann::json labelling_to_json(const SpernerInstance& s, const Labelling& l) {
  nlohmann::json assignment = nlohmann::json::object();
  for (std::size_t v = 0; v < l.size(); ++v) assignment[s.complex().vertices()[v]] = l[v];
  return {{"assignment", assignment}};
}

}  // namespace sperner
