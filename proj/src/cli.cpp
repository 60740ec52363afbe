#include "sperner/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "sperner/chromatic.hpp"
#include "sperner/counterexample.hpp"
#include "sperner/error.hpp"
#include "sperner/gallai.hpp"
#include "sperner/gallery.hpp"
#include "sperner/io.hpp"
#include "sperner/planar.hpp"
#include "sperner/projective.hpp"

namespace sperner::cli {

using nlohmann::json;

namespace {

struct Config {
  int jobs = 1;
  std::uint64_t bound = SearchOptions{}.bound;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string output;

  SearchOptions search() const { return {bound, jobs}; }
};

int default_jobs() {
  const char* env = std::getenv(kJobsEnv);
  if (!env) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (const std::exception&) {
    return 1;
  }
}

// Scalars print as-is, everything else as compact JSON.
void summarize(const json& j, std::ostream& out) {
  if (!j.is_object()) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && (key == "details" || key == "certificate")) {
      out << key << ":\n";
      for (const auto& [k, v] : value.items()) out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  Config config;

  void text(const std::string& body) const {
    if (config.output.empty()) {
      out_ << body;
    } else {
      write_file(config.output, body);
    }
  }

  void emit(const json& j) const {
    if (config.format == "text") {
      std::ostringstream s;
      summarize(j, s);
      text(s.str());
    } else {
      text(dump(j));
    }
  }

  int certificate(const Certificate& c) const {
    emit(c.to_json());
    return c.passed() ? 0 : 1;
  }

 private:
  std::ostream& out_;
};

SpernerInstance load_instance(const std::string& path) { return instance_from_json(parse_json_text(read_file(path))); }

Simplex require_sigma(const std::string& flag, const std::string& path) {
  if (!flag.empty()) return parse_simplex(flag);
  if (auto s = sigma_from_json(parse_json_text(read_file(path)))) return *s;
  throw Error(Errc::BadParams, "no --sigma given and the file names none");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(Errc::BadParams, "expected N or A..B, got \"" + text + "\"");
  }
}

json conjecture_report(int n, const SearchOptions& opts) {
  const SimplicialComplex boundary = cyclic_polytope_boundary(n, 4);
  const Simplex tau = boundary.facet_names(0);
  const SpernerInstance s = associated_triangulation(boundary, tau);
  json facets = json::array();
  std::size_t admitting = 0;
  for (const auto& fc : classify_facets(s, opts)) {
    admitting += fc.admits_unique_rainbow();
    facets.push_back({{"facet", format_simplex(fc.simplex)},
                      {"admitsUniqueRainbow", fc.admits_unique_rainbow()},
                      {"witness", fc.witness ? labelling_to_json(s, *fc.witness) : json(nullptr)}});
  }
  return {{"n", n},
          {"dim", 4},
          {"removedFacet", format_simplex(tau)},
          {"vertices", s.complex().vertex_count()},
          {"facetCount", s.complex().facet_count()},
          {"labellings", LabellingSpace(s).size()},
          {"facetsAdmitting", admitting},
          {"facets", facets}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner r(out);
  r.config.jobs = default_jobs();
  std::function<int()> action;

  CLI::App app{"Sperner labellings, rainbow facets and their graph-colouring counterparts", "sperner-forge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", r.config.jobs, std::string("Worker threads (default from ") + kJobsEnv + " or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", r.config.bound, "Largest labelling space an exhaustive search may visit")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", r.config.seed, "Seed for randomized choices");
  app.add_option("--format", r.config.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", r.config.output, "Write the result here instead of stdout");

  // gallery
  auto* gallery = app.add_subcommand("gallery", "Emit polytope boundaries as complex JSON");
  gallery->require_subcommand(1);
  gallery->add_subcommand("h8", "Boundary of H8")->callback([&] {
    action = [&] {
      r.emit(complex_to_json(h8_boundary()));
      return 0;
    };
  });
  int cross_dim = 3;
  auto* cross = gallery->add_subcommand("cross", "Boundary of the cross polytope");
  cross->add_option("--dim", cross_dim, "Ambient dimension")->check(CLI::PositiveNumber);
  cross->callback([&] {
    action = [&] {
      r.emit(complex_to_json(cross_polytope_boundary(cross_dim).complex));
      return 0;
    };
  });
  int cyclic_n = 8, cyclic_dim = 4;
  auto* cyclic = gallery->add_subcommand("cyclic", "Boundary of a cyclic polytope");
  cyclic->add_option("--n", cyclic_n, "Number of vertices");
  cyclic->add_option("--dim", cyclic_dim, "Dimension");
  cyclic->callback([&] {
    action = [&] {
      r.emit(complex_to_json(cyclic_polytope_boundary(cyclic_n, cyclic_dim)));
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check a property exhaustively and emit a certificate");
  verify->require_subcommand(1);
  std::string h8_complex, s0_flag, s1_flag;
  bool no_symmetry = false;
  auto* vh8 = verify->add_subcommand("h8", "Every labelling with two given rainbow facets has a third");
  vh8->add_option("--complex", h8_complex, "Closed 3-pseudomanifold (default: boundary of H8)");
  vh8->add_option("--sigma0", s0_flag, "First facet (default ABGZ)");
  vh8->add_option("--sigma1", s1_flag, "Second facet (default CDEF)");
  vh8->add_flag("--no-symmetry", no_symmetry, "Sweep all labellings instead of pinning sigma0");
  vh8->callback([&] {
    action = [&] {
      const SimplicialComplex c = h8_complex.empty() ? h8_boundary() : complex_from_json(parse_json_text(read_file(h8_complex)));
      const Simplex s0 = s0_flag.empty() ? h8_sigma0() : parse_simplex(s0_flag);
      const Simplex s1 = s1_flag.empty() ? h8_sigma1() : parse_simplex(s1_flag);
      return r.certificate(two_rainbow_check(c, s0, s1, {!no_symmetry, r.config.search()}));
    };
  });
  std::string main_complex, main_sigma;
  auto* vmain = verify->add_subcommand("main", "No labelling has sigma as its only rainbow facet");
  vmain->add_option("--complex", main_complex, "Instance JSON")->required();
  vmain->add_option("--sigma", main_sigma, "Facet, comma separated (default: the file's sigma)");
  vmain->callback([&] {
    action = [&] {
      const auto s = load_instance(main_complex);
      return r.certificate(verify_theorem_main(s, require_sigma(main_sigma, main_complex), r.config.search()));
    };
  });

  // build
  auto* build = app.add_subcommand("build", "Construct instances");
  build->require_subcommand(1);
  int ce_dim = 3, ce_refinements = 0;
  auto* ce = build->add_subcommand("counterexample", "K_d with optional stellar refinements");
  ce->add_option("--dim", ce_dim, "Dimension d >= 3")->required();
  ce->add_option("--refinements", ce_refinements, "Stellar subdivisions away from sigma")->check(CLI::NonNegativeNumber);
  ce->callback([&] {
    action = [&] {
      const Counterexample k = build_kd(ce_dim);
      const SpernerInstance s = refine(k.instance, k.sigma, ce_refinements, r.config.seed);
      r.emit(instance_to_json(s, k.sigma));
      return 0;
    };
  });

  // sperner
  auto* sp = app.add_subcommand("sperner", "Enumerate labellings and classify facets");
  sp->require_subcommand(1);
  std::string sp_complex;
  auto* spe = sp->add_subcommand("enumerate", "List every Sperner labelling");
  spe->add_option("--complex", sp_complex, "Instance JSON")->required();
  spe->callback([&] {
    action = [&] {
      const auto s = load_instance(sp_complex);
      json list = json::array();
      for (const auto& l : enumerate_labellings(s, r.config.search())) list.push_back(labelling_to_json(s, l));
      r.emit({{"count", list.size()}, {"labellings", list}});
      return 0;
    };
  });
  auto* spc = sp->add_subcommand("classify", "Which facets can be the only rainbow facet");
  spc->add_option("--complex", sp_complex, "Instance JSON")->required();
  spc->callback([&] {
    action = [&] {
      const auto s = load_instance(sp_complex);
      json facets = json::array();
      for (const auto& fc : classify_facets(s, r.config.search())) {
        facets.push_back({{"facet", format_simplex(fc.simplex)},
                          {"admitsUniqueRainbow", fc.admits_unique_rainbow()},
                          {"witness", fc.witness ? labelling_to_json(s, *fc.witness) : json(nullptr)}});
      }
      r.emit({{"labellings", LabellingSpace(s).size()}, {"facets", facets}});
      return 0;
    };
  });

  // gallai
  auto* gallai = app.add_subcommand("gallai", "The graph G_K of an instance");
  gallai->require_subcommand(1);
  std::string g_complex;
  auto* gb = gallai->add_subcommand("build", "Emit G_K in DIMACS format");
  gb->add_option("--complex", g_complex, "Instance JSON")->required();
  gb->callback([&] {
    action = [&] {
      const GallaiGraph g = build_gallai_graph(load_instance(g_complex));
      r.text(to_dimacs(g.graph, g.vertices));
      return 0;
    };
  });
  auto* ge = gallai->add_subcommand("equiv", "Colourability of G_K against the labelling sweep");
  ge->add_option("--complex", g_complex, "Instance JSON")->required();
  ge->callback([&] {
    action = [&] { return r.certificate(verify_equivalence(load_instance(g_complex), r.config.search())); };
  });
  auto* gt = gallai->add_subcommand("triangles", "Count triangles of G_K");
  gt->add_option("--complex", g_complex, "Instance JSON")->required();
  gt->callback([&] {
    action = [&] {
      const GallaiGraph g = build_gallai_graph(load_instance(g_complex));
      r.emit({{"vertices", g.graph.vertex_count()}, {"edges", g.graph.edge_count()}, {"triangles", triangle_count(g.graph)}});
      return 0;
    };
  });

  // chromatic
  auto* chrom = app.add_subcommand("chromatic", "Exact colouring of a DIMACS graph");
  chrom->require_subcommand(1);
  std::string graph_path;
  int crit_k = 0;
  auto* cn = chrom->add_subcommand("number", "Chromatic number with an optimal colouring");
  cn->add_option("--graph", graph_path, "DIMACS .col file")->required();
  cn->callback([&] {
    action = [&] {
      const auto g = parse_dimacs(read_file(graph_path)).graph;
      const int chi = chromatic_number(g);
      const auto colouring = is_k_colourable(g, std::max(chi, 1));
      r.emit({{"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"chromatic", chi},
              {"colouring", colouring ? json(*colouring) : json::array()}});
      return 0;
    };
  });
  auto* cc = chrom->add_subcommand("critical", "Edge-criticality of a k-chromatic graph");
  cc->add_option("--graph", graph_path, "DIMACS .col file")->required();
  cc->add_option("--k", crit_k, "Expected chromatic number")->required()->check(CLI::PositiveNumber);
  cc->callback([&] {
    action = [&] {
      const auto g = parse_dimacs(read_file(graph_path)).graph;
      const auto report = criticality_report(g, crit_k, r.config.jobs);
      json j = report.to_json();
      j["verdict"] = report.critical() ? "critical" : "not critical";
      r.emit(j);
      return 0;
    };
  });

  // quad
  auto* quad = app.add_subcommand("quad", "Projective quadrangulation built from an instance");
  quad->require_subcommand(1);
  std::string q_complex, q_quotient;
  auto* qb = quad->add_subcommand("build", "Emit the centrally symmetric sphere");
  qb->add_option("--complex", q_complex, "Instance JSON")->required();
  qb->add_option("--quotient", q_quotient, "Also write the quotient graph in DIMACS format");
  qb->callback([&] {
    action = [&] {
      const auto s = load_instance(q_complex);
      const SymmetricComplex kt = insert_k_copies(build_glued_sphere(s.dim()), s);
      if (!q_quotient.empty()) {
        const QuotientGraph q = antipodal_quotient(kt);
        write_file(q_quotient, to_dimacs(q.graph, quotient_roles(kt, q)));
      }
      r.emit(symmetric_complex_to_json(kt));
      return 0;
    };
  });
  auto* qv = quad->add_subcommand("verify", "Check the quotient against G_K");
  qv->add_option("--complex", q_complex, "Instance JSON")->required();
  qv->callback([&] {
    action = [&] { return r.certificate(verify_projective_theorem(load_instance(q_complex))); };
  });

  // planar-label
  std::string pl_complex, pl_facet;
  bool pl_fallback = false;
  auto* pl = app.add_subcommand("planar-label", "Labelling of a triangle triangulation with one rainbow facet");
  pl->add_option("--complex", pl_complex, "Instance JSON")->required();
  pl->add_option("--facet", pl_facet, "Facet, comma separated")->required();
  pl->add_flag("--fallback-exhaustive", pl_fallback, "Fall back to exhaustive search if the construction fails");
  pl->callback([&] {
    action = [&] {
      const auto s = load_instance(pl_complex);
      const Simplex sigma = parse_simplex(pl_facet);
      const PlanarResult res = unique_rainbow_labelling_2d(make_disk(s), sigma, {pl_fallback, r.config.search()});
      const auto rainbow = rainbow_facets(s, res.labelling);
      Certificate cert;
      cert.kind = "planar-unique-rainbow";
      cert.space_size = LabellingSpace(s).size();
      cert.status = is_valid_sperner(s, res.labelling) && rainbow.count() == 1 &&
                            rainbow.facets.front() == make_simplex(sigma)
                        ? Status::Pass
                        : Status::Fail;
      cert.witness = labelling_to_json(s, res.labelling);
      json paths = json::array();
      for (const auto& p : res.paths.faces) paths.push_back(p);
      cert.details = {{"sigma", format_simplex(make_simplex(sigma))},
                      {"rainbowFacets", rainbow.facets},
                      {"fallbackUsed", res.fallback_used},
                      {"dualPaths", paths}};
      r.emit({{"labelling", labelling_to_json(s, res.labelling)}, {"certificate", cert.to_json()}});
      return cert.passed() ? 0 : 1;
    };
  });

  // conjecture
  auto* conj = app.add_subcommand("conjecture", "Exploratory unique-rainbow reports");
  conj->require_subcommand(1);
  std::string conj_n = "6..8";
  auto* cyc = conj->add_subcommand("cyclic", "Instances from C(n,4) minus a facet");
  cyc->add_option("--n", conj_n, "N or A..B");
  cyc->callback([&] {
    action = [&] {
      const auto [lo, hi] = parse_range(conj_n);
      if (lo < 5 || hi < lo) throw Error(Errc::BadParams, "need 5 <= A <= B");
      json reports = json::array();
      for (int n = lo; n <= hi; ++n) reports.push_back(conjecture_report(n, r.config.search()));
      r.emit({{"instances", reports}});
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace sperner::cli
