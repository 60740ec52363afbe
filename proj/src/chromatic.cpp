#include "sperner/chromatic.hpp"

#include <algorithm>
#include <deque>
#include <thread>

#include "sperner/error.hpp"

namespace sperner {

namespace {

std::vector<int> greedy_clique(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> clique;
  for (int v : order) {
    if (std::all_of(clique.begin(), clique.end(), [&](int u) { return g.has_edge(u, v); })) {
      clique.push_back(v);
    }
  }
  return clique;
}

class Dsatur {
 public:
  Dsatur(const Graph& g, int k)
      : g_(g),
        k_(k),
        n_(static_cast<std::size_t>(g.vertex_count())),
        colour_(n_, 0),
        seen_(n_, std::vector<int>(static_cast<std::size_t>(k) + 1, 0)),
        saturation_(n_, 0) {}

  std::optional<Colouring> run() {
    const auto clique = greedy_clique(g_);
    if (static_cast<int>(clique.size()) > k_) return std::nullopt;
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i) + 1);
    max_used_ = static_cast<int>(clique.size());
    remaining_ = n_ - clique.size();
    if (!search()) return std::nullopt;
    return colour_;
  }

 private:
  void assign(int v, int c) {
    colour_[static_cast<std::size_t>(v)] = c;
    for (int u : g_.neighbours(v)) {
      auto& s = seen_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
      if (s++ == 0) ++saturation_[static_cast<std::size_t>(u)];
    }
  }

  void unassign(int v) {
    const int c = colour_[static_cast<std::size_t>(v)];
    colour_[static_cast<std::size_t>(v)] = 0;
    for (int u : g_.neighbours(v)) {
      auto& s = seen_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
      if (--s == 0) --saturation_[static_cast<std::size_t>(u)];
    }
  }

  int pick() const {
    int best = -1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v]) continue;
      if (best < 0 || saturation_[v] > saturation_[static_cast<std::size_t>(best)] ||
          (saturation_[v] == saturation_[static_cast<std::size_t>(best)] &&
           g_.degree(static_cast<int>(v)) > g_.degree(best))) {
        best = static_cast<int>(v);
      }
    }
    return best;
  }

  bool search() {
    if (remaining_ == 0) return true;
    const int v = pick();
    if (saturation_[static_cast<std::size_t>(v)] >= k_) return false;
    const int limit = std::min(k_, max_used_ + 1);
    for (int c = 1; c <= limit; ++c) {
      if (seen_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]) continue;
      const int saved = max_used_;
      max_used_ = std::max(max_used_, c);
      assign(v, c);
      --remaining_;
      if (search()) return true;
      ++remaining_;
      unassign(v);
      max_used_ = saved;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::size_t n_;
  Colouring colour_;
  std::vector<std::vector<int>> seen_;
  std::vector<int> saturation_;
  int max_used_ = 0;
  std::size_t remaining_ = 0;
};

template <class Fn>
void parallel_indices(std::size_t count, int jobs, Fn fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < count; i += static_cast<std::size_t>(jobs)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::optional<Colouring> is_k_colourable(const Graph& g, int k) {
  if (k < 1) throw Error(Errc::BadParams, "k must be at least 1");
  if (g.vertex_count() == 0) return Colouring{};
  return Dsatur(g, k).run();
}

int chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int k = std::max<int>(1, static_cast<int>(greedy_clique(g).size()));
  while (!is_k_colourable(g, k)) ++k;
  return k;
}

nlohmann::json CriticalityReport::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : non_critical_edges) edges.push_back({u, v});
  return {{"k", k},
          {"chromaticNumber", chromatic},
          {"isChromaticK", is_chromatic_k},
          {"nonCriticalEdges", edges},
          {"deletionBoundHolds", deletion_bound_holds},
          {"verdict", critical() ? "critical" : "not critical"}};
}

CriticalityReport criticality_report(const Graph& g, int k, int jobs) {
  CriticalityReport r;
  r.k = k;
  r.chromatic = chromatic_number(g);
  if (r.chromatic != k) {
    throw Error(Errc::ChiMismatch, "chromatic number is " + std::to_string(r.chromatic) + ", not " +
                                       std::to_string(k));
  }
  r.is_chromatic_k = true;
  const auto edges = g.edges();
  std::vector<char> stays(edges.size(), 0), bound_ok(edges.size(), 1);
  parallel_indices(edges.size(), jobs, [&](std::size_t i) {
    const Graph h = g.without_edge(edges[i].first, edges[i].second);
    if (k < 2) return;
    if (!is_k_colourable(h, k - 1)) {
      stays[i] = 1;
    } else if (k >= 3 && is_k_colourable(h, k - 2)) {
      bound_ok[i] = 0;
    }
  });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (stays[i]) r.non_critical_edges.push_back(edges[i]);
    if (!bound_ok[i]) r.deletion_bound_holds = false;
  }
  return r;
}

nlohmann::json VertexCriticalityReport::to_json() const {
  return {{"k", k},
          {"chromaticNumber", chromatic},
          {"nonCriticalVertices", non_critical_vertices},
          {"verdict", critical() ? "vertex-critical" : "not vertex-critical"}};
}

VertexCriticalityReport vertex_criticality_report(const Graph& g, int k, int jobs) {
  VertexCriticalityReport r;
  r.k = k;
  r.chromatic = chromatic_number(g);
  if (r.chromatic != k) {
    throw Error(Errc::ChiMismatch, "chromatic number is " + std::to_string(r.chromatic) + ", not " +
                                       std::to_string(k));
  }
  std::vector<char> stays(static_cast<std::size_t>(g.vertex_count()), 0);
  parallel_indices(stays.size(), jobs, [&](std::size_t v) {
    if (k >= 2 && !is_k_colourable(g.without_vertex(static_cast<int>(v)), k - 1)) stays[v] = 1;
  });
  for (std::size_t v = 0; v < stays.size(); ++v) {
    if (stays[v]) r.non_critical_vertices.push_back(static_cast<int>(v));
  }
  return r;
}

std::variant<OddCycle, Bipartition> odd_cycle_or_bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbours(u)) {
        const auto vi = static_cast<std::size_t>(v), ui = static_cast<std::size_t>(u);
        if (side[vi] < 0) {
          side[vi] = 1 - side[ui];
          parent[vi] = u;
          depth[vi] = depth[ui] + 1;
          queue.push_back(v);
        } else if (side[vi] == side[ui]) {
          // Climb both tree paths to their lowest common ancestor.
          std::vector<int> left{u}, right{v};
          int a = u, b = v;
          while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
              a = parent[static_cast<std::size_t>(a)];
              left.push_back(a);
            } else {
              b = parent[static_cast<std::size_t>(b)];
              right.push_back(b);
            }
          }
          right.pop_back();  // the common ancestor is already in `left`
          OddCycle cyc;
          cyc.cycle.assign(left.rbegin(), left.rend());
          cyc.cycle.insert(cyc.cycle.end(), right.begin(), right.end());
          return cyc;  // ancestor ... u, v ... child of ancestor
        }
      }
    }
  }
  return Bipartition{side};
}

}  // namespace sperner
