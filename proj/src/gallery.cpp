#include "sperner/gallery.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "sperner/error.hpp"

namespace sperner {

const std::vector<std::string>& h8_facet_table() {
  static const std::vector<std::string> table = {
      "ABCD", "ABCG", "ABDE", "ABEF", "ABFZ",  //
      "ABGZ", "ACDZ", "ACGZ", "ADEZ", "AEFZ",  //
      "BCDE", "BCEF", "BCFG", "BFGZ", "CDEF",  //
      "CDFG", "CDGZ", "DEFG", "DEGZ", "EFGZ",
  };
  return table;
}

namespace {

Simplex letters(const std::string& word) {
  std::vector<VertexId> out;
  for (char ch : word) out.emplace_back(1, ch);
  return make_simplex(std::move(out));
}

}  // namespace

SimplicialComplex h8_boundary() {
  std::vector<Simplex> facets;
  for (const auto& row : h8_facet_table()) facets.push_back(letters(row));
  return SimplicialComplex(facets);
}

Simplex h8_sigma0() { return letters("ABGZ"); }
Simplex h8_sigma1() { return letters("CDEF"); }

namespace {

using Domain = std::uint8_t;  // bit l-1 set when label l is still possible

constexpr Domain kAllLabels = 0xF;

Domain bit(Label l) { return static_cast<Domain>(1U << (l - 1)); }
bool singleton(Domain d) { return d && !(d & (d - 1)); }
Label only_label(Domain d) { return __builtin_ctz(d) + 1; }

/// Constraint model behind the propagation route of two_rainbow_check.
class TwoRainbowModel {
 public:
  TwoRainbowModel(const SimplicialComplex& c, std::size_t s0, std::size_t s1) : c_(c), s0_(s0), s1_(s1) {
    const auto& f0 = c.facets()[s0];
    const auto& f1 = c.facets()[s1];
    for (std::size_t t = 0; t < c.facet_count(); ++t) {
      if (t != s0 && t != s1) others_.push_back(t);
    }
    // Facets sharing a triangle with sigma0 or sigma1 yield "differ" pairs.
    for (std::size_t side : {s0, s1}) {
      const auto& sigma = side == s0 ? f0 : f1;
      for (std::size_t t : others_) {
        const auto& tau = c.facets()[t];
        IndexSimplex common;
        std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(), std::back_inserter(common));
        if (common.size() != 3) continue;
        IndexSimplex x, y;
        std::set_difference(tau.begin(), tau.end(), sigma.begin(), sigma.end(), std::back_inserter(x));
        std::set_difference(sigma.begin(), sigma.end(), tau.begin(), tau.end(), std::back_inserter(y));
        differ_.push_back({x[0], y[0], t});
      }
    }
  }

  struct Differ {
    VertexIndex a, b;
    std::size_t via;
  };

  /// Propagates to a fixpoint. Returns false on a wiped-out domain or a
  /// rainbow facet among the others. `trace` (optional) collects forced
  /// labels in the order they appear.
  bool propagate(std::vector<Domain>& dom, DeductionTrace* trace) const {
    auto note = [&](VertexIndex v, const char* rule, std::size_t via) {
      if (trace && singleton(dom[static_cast<std::size_t>(v)])) {
        trace->forced.push_back({c_.vertices()[static_cast<std::size_t>(v)],
                                 only_label(dom[static_cast<std::size_t>(v)]), rule, c_.facet_names(via)});
      }
    };
    auto fail = [&](std::size_t via) {
      if (trace) {
        trace->contradiction = true;
        trace->contradiction_facet = c_.facet_names(via);
      }
      return false;
    };
    auto remove = [&](VertexIndex v, Domain d, const char* rule, std::size_t via) -> int {
      auto& cur = dom[static_cast<std::size_t>(v)];
      if (!(cur & d)) return 0;
      cur = static_cast<Domain>(cur & ~d);
      if (!cur) return -1;
      note(v, rule, via);
      return 1;
    };

    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : differ_) {
        for (auto [u, w] : {std::pair{p.a, p.b}, std::pair{p.b, p.a}}) {
          const Domain dw = dom[static_cast<std::size_t>(w)];
          if (!singleton(dw)) continue;
          const int r = remove(u, dw, "shared-triangle", p.via);
          if (r < 0) return fail(p.via);
          changed |= r > 0;
        }
      }
      if (changed) continue;

      for (std::size_t side : {s0_, s1_}) {
        const int r = all_different(dom, c_.facets()[side], side, remove);
        if (r < 0) return fail(side);
        changed |= r > 0;
      }
      if (changed) continue;

      for (std::size_t t : others_) {
        const auto& tau = c_.facets()[t];
        Domain fixed = 0;
        int open = -1, fixed_count = 0;
        bool repeat = false;
        for (auto v : tau) {
          const Domain d = dom[static_cast<std::size_t>(v)];
          if (singleton(d)) {
            repeat |= (fixed & d) != 0;
            fixed |= d;
            ++fixed_count;
          } else {
            open = v;
          }
        }
        if (repeat) continue;
        if (fixed_count == 4) return fail(t);
        if (fixed_count == 3) {
          const int r = remove(open, static_cast<Domain>(kAllLabels & ~fixed), "not-rainbow", t);
          if (r < 0) return fail(t);
          changed |= r > 0;
        }
      }
    }
    return true;
  }

  const SimplicialComplex& complex() const { return c_; }
  std::size_t sigma0() const { return s0_; }
  std::size_t sigma1() const { return s1_; }

 private:
  // Keeps a value only when it extends to a bijection of the facet's
  // vertices onto 1..4.
  template <class Remove>
  int all_different(std::vector<Domain>& dom, const IndexSimplex& f, std::size_t via, Remove& remove) const {
    std::array<Label, 4> perm{1, 2, 3, 4};
    std::array<Domain, 4> support{};
    bool any = false;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < 4 && ok; ++i) ok = dom[static_cast<std::size_t>(f[i])] & bit(perm[i]);
      if (!ok) continue;
      any = true;
      for (std::size_t i = 0; i < 4; ++i) support[i] = static_cast<Domain>(support[i] | bit(perm[i]));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!any) return -1;
    int changed = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const Domain drop = static_cast<Domain>(dom[static_cast<std::size_t>(f[i])] & ~support[i]);
      if (drop) changed |= remove(f[i], drop, "rainbow", via);
    }
    return changed;
  }

  const SimplicialComplex& c_;
  std::size_t s0_, s1_;
  std::vector<std::size_t> others_;
  std::vector<Differ> differ_;
};

struct Preconditions {
  std::size_t s0 = 0, s1 = 0;
};

Preconditions check_two_rainbow_input(const SimplicialComplex& c, const Simplex& sigma0, const Simplex& sigma1) {
  if (c.facet_count() == 0 || !c.is_pure() || c.dim() != 3) {
    throw Error(Errc::BadInput, "expected a pure 3-dimensional complex");
  }
  if (!validate_complex(c).closed()) throw Error(Errc::BadInput, "expected a closed pseudomanifold");
  const auto s0 = c.find_facet(make_simplex(sigma0));
  const auto s1 = c.find_facet(make_simplex(sigma1));
  if (!s0 || !s1) throw Error(Errc::BadInput, "sigma0 and sigma1 must be facets");
  const auto& a = c.facets()[*s0];
  const auto& b = c.facets()[*s1];
  IndexSimplex common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) throw Error(Errc::BadInput, "sigma0 and sigma1 must be disjoint");
  return {*s0, *s1};
}

std::vector<Domain> initial_domains(const SimplicialComplex& c, std::size_t s0) {
  std::vector<Domain> dom(c.vertex_count(), kAllLabels);
  Label next = 1;
  for (auto v : c.facets()[s0]) dom[static_cast<std::size_t>(v)] = bit(next++);
  return dom;
}

std::uint64_t pow4(std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 4;
  return r;
}

}  // namespace

nlohmann::json DeductionTrace::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& d : forced) {
    steps.push_back({{"vertex", d.vertex}, {"label", d.label}, {"rule", d.rule}, {"via", format_simplex(d.via, "")}});
  }
  nlohmann::json out = {{"forced", steps}, {"contradiction", contradiction}};
  if (contradiction) out["contradictionAt"] = format_simplex(contradiction_facet, "");
  return out;
}

DeductionTrace two_rainbow_deduction(const SimplicialComplex& c, const Simplex& sigma0, const Simplex& sigma1) {
  const auto pre = check_two_rainbow_input(c, sigma0, sigma1);
  const TwoRainbowModel model(c, pre.s0, pre.s1);
  auto dom = initial_domains(c, pre.s0);
  DeductionTrace trace;
  model.propagate(dom, &trace);
  return trace;
}

Certificate two_rainbow_check(const SimplicialComplex& c, const Simplex& sigma0, const Simplex& sigma1,
                              const TwoRainbowOptions& opts) {
  const auto pre = check_two_rainbow_input(c, sigma0, sigma1);
  const std::size_t n = c.vertex_count();
  const auto& f0 = c.facets()[pre.s0];
  const auto& f1 = c.facets()[pre.s1];

  // Route 1: plain sweep.
  std::vector<std::vector<Label>> options(n, {1, 2, 3, 4});
  if (opts.symmetry_reduction) {
    Label next = 1;
    for (auto v : f0) options[static_cast<std::size_t>(v)] = {next++};
  }
  const std::uint64_t swept = opts.symmetry_reduction ? pow4(n - 4) : pow4(n);
  if (n > 31 || swept > opts.search.bound) {
    throw Error(Errc::SearchSpaceTooLarge, std::to_string(swept) + " labellings exceed the bound");
  }
  std::uint64_t both_rainbow = 0, exactly_two = 0;
  std::optional<Labelling> first_counterexample;
  Labelling l(n);
  for (std::uint64_t idx = 0; idx < swept; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t v = n; v-- > 0;) {
      const auto& o = options[v];
      l[v] = o[rest % o.size()];
      rest /= o.size();
    }
    if (!is_rainbow(f0, l) || !is_rainbow(f1, l)) continue;
    ++both_rainbow;
    std::size_t count = 0;
    for (const auto& f : c.facets()) count += is_rainbow(f, l);
    if (count == 2) {
      ++exactly_two;
      if (!first_counterexample) first_counterexample = l;
    }
  }
  const std::uint64_t factor = opts.symmetry_reduction ? 24 : 1;

  // Route 2: propagation search over the pinned orbit representatives.
  const TwoRainbowModel model(c, pre.s0, pre.s1);
  std::uint64_t search_nodes = 0, search_hits = 0;
  auto dfs = [&](auto&& self, std::vector<Domain> dom) -> void {
    ++search_nodes;
    if (!model.propagate(dom, nullptr)) return;
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!singleton(dom[v]) && (pick == n || __builtin_popcount(dom[v]) < __builtin_popcount(dom[pick]))) pick = v;
    }
    if (pick == n) {
      Labelling leaf(n);
      for (std::size_t v = 0; v < n; ++v) leaf[v] = only_label(dom[v]);
      std::size_t count = 0;
      for (const auto& f : c.facets()) count += is_rainbow(f, leaf);
      if (count == 2 && is_rainbow(f0, leaf) && is_rainbow(f1, leaf)) ++search_hits;
      return;
    }
    for (Label lab = 1; lab <= 4; ++lab) {
      if (!(dom[pick] & bit(lab))) continue;
      auto next = dom;
      next[pick] = bit(lab);
      self(self, std::move(next));
    }
  };
  dfs(dfs, initial_domains(c, pre.s0));
  // The sweep without reduction counts every orbit member; compare orbits.
  const std::uint64_t sweep_orbits = opts.symmetry_reduction ? exactly_two : exactly_two / 24;
  const bool routes_agree = sweep_orbits == search_hits;

  Certificate cert;
  cert.kind = "two-rainbow";
  cert.space_size = pow4(n);
  cert.status = (exactly_two == 0 && search_hits == 0 && routes_agree) ? Status::Pass : Status::Fail;
  if (first_counterexample) {
    nlohmann::json assignment = nlohmann::json::object();
    for (std::size_t v = 0; v < n; ++v) assignment[c.vertices()[v]] = (*first_counterexample)[v];
    cert.witness = {{"assignment", assignment}};
  }
  cert.details = {{"sigma0", format_simplex(c.facet_names(pre.s0), "")},
                  {"sigma1", format_simplex(c.facet_names(pre.s1), "")},
                  {"symmetryReduction", opts.symmetry_reduction},
                  {"sweptLabellings", swept},
                  {"symmetryFactor", factor},
                  {"bothRainbow", both_rainbow * factor},
                  {"exactlyTwoRainbow", exactly_two * factor},
                  {"propagationNodes", search_nodes},
                  {"propagationCounterexampleOrbits", search_hits},
                  {"routesAgree", routes_agree}};
  return cert;
}

CrossPolytope cross_polytope_boundary(int dim) {
  if (dim < 1 || dim > 20) throw Error(Errc::BadParams, "cross polytope dimension must lie in 1..20");
  CrossPolytope out;
  std::vector<Simplex> facets;
  for (std::uint32_t signs = 0; signs < (1U << dim); ++signs) {
    std::vector<VertexId> f;
    for (int i = 0; i < dim; ++i) f.push_back(((signs >> i) & 1U ? "-" : "+") + std::to_string(i + 1));
    facets.push_back(make_simplex(std::move(f)));
  }
  out.complex = SimplicialComplex(facets);
  for (int i = 1; i <= dim; ++i) {
    out.antipode["+" + std::to_string(i)] = "-" + std::to_string(i);
    out.antipode["-" + std::to_string(i)] = "+" + std::to_string(i);
  }
  return out;
}

SimplicialComplex cyclic_polytope_boundary(int n, int dim) {
  if (dim < 2 || n < dim + 1 || n > 30) {
    throw Error(Errc::BadParams, "cyclic polytope needs 2 <= dim < n <= 30");
  }
  std::vector<Simplex> facets;
  // Walk all dim-subsets of 1..n in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(dim));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    std::vector<bool> in(static_cast<std::size_t>(n) + 2, false);
    for (int p : pick) in[static_cast<std::size_t>(p)] = true;
    // Gale: between any two non-members the members form an even block.
    bool even = true;
    int prev_gap = 0, between = 0;
    for (int i = 1; i <= n && even; ++i) {
      if (in[static_cast<std::size_t>(i)]) {
        ++between;
      } else {
        if (prev_gap && between % 2) even = false;
        prev_gap = i;
        between = 0;
      }
    }
    if (even) {
      std::vector<VertexId> f;
      for (int p : pick) f.push_back(std::to_string(p));
      facets.push_back(make_simplex(std::move(f)));
    }
    int i = dim - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - dim + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < dim; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return SimplicialComplex(facets);
}

SpernerInstance associated_triangulation(const SimplicialComplex& c, const Simplex& tau) {
  const auto sorted_tau = make_simplex(tau);
  c.require_facet(sorted_tau);
  if (!c.is_pure() || !validate_complex(c).closed()) {
    throw Error(Errc::BadInput, "expected a closed pure pseudomanifold");
  }
  SimplicialComplex rest = remove_facet(c, sorted_tau);
  const int labels = static_cast<int>(sorted_tau.size());
  std::map<VertexId, LabelSet> supports;
  std::map<Label, VertexId> corners;
  for (int i = 0; i < labels; ++i) {
    supports[sorted_tau[static_cast<std::size_t>(i)]] = LabelSet::single(i + 1);
    corners[i + 1] = sorted_tau[static_cast<std::size_t>(i)];
  }
  return SpernerInstance::from_named(std::move(rest), labels, supports, corners);
}

}  // namespace sperner
