#include "sperner/counterexample.hpp"

#include <limits>
#include <random>

#include "sperner/error.hpp"
#include "sperner/gallery.hpp"

namespace sperner {

Counterexample build_kd(int d) {
  if (d < 3 || d >= kMaxLabels) throw Error(Errc::BadDimension, "dimension must lie in 3..30");
  const SimplicialComplex k = remove_facet(h8_boundary(), h8_sigma0());

  std::vector<VertexId> rho;
  for (int j = 5; j <= d + 1; ++j) rho.push_back("p" + std::to_string(j));
  const SimplicialComplex kd =
      rho.empty() ? k : join(k, SimplicialComplex(std::vector<Simplex>{make_simplex(rho)}));

  std::map<VertexId, LabelSet> supports;
  std::map<Label, VertexId> corners;
  const std::vector<VertexId> base = {"A", "B", "G", "Z"};
  for (int i = 0; i < 4; ++i) {
    supports[base[static_cast<std::size_t>(i)]] = LabelSet::single(i + 1);
    corners[i + 1] = base[static_cast<std::size_t>(i)];
  }
  for (const char* v : {"C", "D", "E", "F"}) supports[v] = LabelSet::full(4);
  for (int j = 5; j <= d + 1; ++j) {
    supports["p" + std::to_string(j)] = LabelSet::single(j);
    corners[j] = "p" + std::to_string(j);
  }

  Simplex sigma = h8_sigma1();
  sigma.insert(sigma.end(), rho.begin(), rho.end());
  return {SpernerInstance::from_named(kd, d + 1, supports, corners), make_simplex(sigma)};
}

namespace {

std::string next_apex_name(const SimplicialComplex& c, int& counter) {
  std::string name;
  do {
    name = "b" + std::to_string(++counter);
  } while (c.index_of(name));
  return name;
}

}  // namespace

SpernerInstance refine(const SpernerInstance& s, const Simplex& sigma, int steps,
                       std::optional<std::uint64_t> seed) {
  if (steps < 0) throw Error(Errc::BadParams, "steps must be non-negative");
  const Simplex target = make_simplex(sigma);
  s.complex().require_facet(target);
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);

  SpernerInstance cur = s;
  int counter = 0;
  for (int step = 0; step < steps; ++step) {
    const auto& c = cur.complex();
    const std::size_t sigma_idx = c.require_facet(target);
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < c.facet_count(); ++i) {
      if (i != sigma_idx) eligible.push_back(i);
    }
    if (eligible.empty()) throw Error(Errc::NoEligibleFacet, "only sigma remains");
    std::size_t chosen = eligible.front();
    if (rng) chosen = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(*rng)];

    const VertexId apex = next_apex_name(c, counter);
    SimplicialComplex next = stellar_subdivide_facet(c, c.facet_names(chosen), apex);

    std::map<VertexId, LabelSet> supports;
    for (std::size_t v = 0; v < c.vertex_count(); ++v) supports[c.vertices()[v]] = cur.supports()[v];
    supports[apex] = LabelSet::full(cur.label_count());
    std::map<Label, VertexId> corners;
    for (Label l = 1; l <= cur.label_count(); ++l) corners[l] = c.vertices()[static_cast<std::size_t>(cur.corner(l))];
    cur = SpernerInstance::from_named(std::move(next), cur.label_count(), supports, corners);
  }
  return cur;
}

namespace {

struct MainSweep {
  std::uint64_t labellings = 0;
  std::uint64_t sigma_rainbow = 0;
  std::uint64_t rainbow_free = 0;
  std::uint64_t only_sigma = 0;
  std::size_t min_other = std::numeric_limits<std::size_t>::max();
  std::optional<Labelling> first_bad;
};

}  // namespace

Certificate verify_theorem_main(const SpernerInstance& s, const Simplex& sigma, const SearchOptions& opts) {
  const auto& c = s.complex();
  const std::size_t target = c.require_facet(make_simplex(sigma));
  const LabellingSpace space(s);
  require_enumerable(space, opts);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    MainSweep r;
    if (begin == end) return r;
    Labelling l;
    space.decode(begin, l);
    for (std::uint64_t i = begin; i < end; ++i) {
      std::size_t others = 0;
      bool sigma_rb = false;
      for (std::size_t f = 0; f < c.facet_count(); ++f) {
        if (!is_rainbow(c.facets()[f], l)) continue;
        if (f == target) {
          sigma_rb = true;
        } else {
          ++others;
        }
      }
      ++r.labellings;
      r.sigma_rainbow += sigma_rb;
      r.rainbow_free += (!sigma_rb && others == 0);
      r.min_other = std::min(r.min_other, others);
      if (others == 0) {
        r.only_sigma += sigma_rb;
        if (!r.first_bad) r.first_bad = l;
      }
      space.advance(l);
    }
    return r;
  };
  auto merge = [](MainSweep a, MainSweep b) {
    a.labellings += b.labellings;
    a.sigma_rainbow += b.sigma_rainbow;
    a.rainbow_free += b.rainbow_free;
    a.only_sigma += b.only_sigma;
    a.min_other = std::min(a.min_other, b.min_other);
    if (!a.first_bad) a.first_bad = std::move(b.first_bad);
    return a;
  };
  const auto r = sweep_ranges<MainSweep>(space, opts.jobs, work, merge);
  const auto witness = unique_rainbow_witness(s, target, opts);

  Certificate cert;
  cert.kind = "no-unique-rainbow";
  cert.space_size = space.size();
  const bool consistent = witness.has_value() == (r.only_sigma > 0);
  cert.status = (r.first_bad || witness || !consistent) ? Status::Fail : Status::Pass;
  if (r.first_bad) {
    cert.witness = labelling_to_json(s, *r.first_bad);
  } else if (witness) {
    cert.witness = labelling_to_json(s, *witness);
  }
  cert.details = {{"sigma", format_simplex(c.facet_names(target))},
                  {"labellings", r.labellings},
                  {"sigmaRainbow", r.sigma_rainbow},
                  {"rainbowFree", r.rainbow_free},
                  {"onlySigmaRainbow", r.only_sigma},
                  {"minOtherRainbow", r.labellings ? r.min_other : 0},
                  {"uniqueRainbowWitnessFound", witness.has_value()},
                  {"searchRoutesAgree", consistent}};
  return cert;
}

}  // namespace sperner
