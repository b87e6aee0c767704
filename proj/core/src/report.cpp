#include "monotop/report.hpp"

#include <chrono>
#include <sstream>

namespace monotop {

namespace {

Json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(x));
  }
  return Json(x.str());
}

std::string big_str(const BigInt& x) { return x.str(); }

std::string face_text(const VariableUniverse& u, Monomial m) {
  return m.is_one() ? "()" : u.format(m, " ");
}

Json generator_list(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (Monomial g : ideal.generators()) out.push_back(face_text(ideal.universe(), g));
  return out;
}

Json header(const Input& input, const char* command, const ReportOptions& options) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  Json in;
  in["path"] = input.path;
  in["kind"] = input.kind == InputKind::Graph ? "graph" : "ideal";
  if (input.kind == InputKind::Graph) {
    in["ideal"] = input.graph_ideal == GraphIdeal::Edge ? "edge" : "star";
    in["vertices"] = input.graph->num_vertices();
    in["edges"] = input.graph->num_edges();
  }
  in["variables"] = input.ideal.universe().names();
  in["generators"] = generator_list(input.ideal);
  j["input"] = std::move(in);
  j["seed"] = options.seed;
  return j;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void finish(CommandResult& r, const Stopwatch& clock, const ReportOptions& options) {
  r.json["consistent"] = r.consistent;
  if (options.timing) r.json["timing_ms"] = clock.ms();
}

std::string verdict_name(Verdict v) { return v == Verdict::Spherical ? "spherical" : "conical"; }

Json classification_json(const Classification& c, const VariableUniverse& u) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  j["depth"] = c.depth ? Json(*c.depth) : Json(nullptr);
  j["simple"] = c.simple;
  j["resolution"] = to_json(c.resolution, u);
  return j;
}

std::string steps_text(const Resolution& r, const VariableUniverse& u) {
  std::string out;
  for (const auto& s : r.steps) {
    if (!out.empty()) out += ", ";
    out += s.is_cone() ? u.name(s.a) + " (cone)" : u.name(s.a) + " > " + u.name(*s.b);
  }
  return out.empty() ? "(none)" : out;
}

// Homology of R(I) against the classification: conical gives zero, spherical
// gives the core homology moved up by the depth.
bool homology_matches(const Classification& c, const HomologyProfile& profile,
                      std::size_t max_faces) {
  if (c.verdict == Verdict::Conical) return profile.is_zero();
  const HomologyProfile core = reduced_homology(realize(c.resolution.core, max_faces));
  return same_up_to_shift(profile, core, static_cast<int>(*c.depth));
}

}  // namespace

Input load_input(const std::filesystem::path& path, GraphIdeal graph_ideal) {
  const std::string text = read_text_file(path);
  if (input_kind(path) == InputKind::Graph) {
    return make_input(path.string(), parse_graph(text), graph_ideal);
  }
  return make_input(path.string(), parse_ideal(text));
}

Input make_input(std::string path, const Graph& graph, GraphIdeal graph_ideal) {
  MonomialIdeal ideal = graph_ideal == GraphIdeal::Edge ? edge_ideal(graph) : star_ideal(graph);
  return Input{std::move(path), InputKind::Graph, graph_ideal, graph, std::move(ideal)};
}

Input make_input(std::string path, MonomialIdeal ideal) {
  return Input{std::move(path), InputKind::Ideal, GraphIdeal::Edge, std::nullopt, std::move(ideal)};
}

Json to_json(const HomologyProfile& profile) {
  Json out = Json::array();
  for (const auto& g : profile.groups) {
    Json e;
    e["degree"] = g.degree;
    e["rank"] = g.rank;
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(big_json(d));
    e["torsion"] = std::move(t);
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const Resolution& r, const VariableUniverse& u) {
  Json j;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json step;
    step["a"] = u.name(s.a);
    if (s.is_cone()) {
      step["cone"] = true;
    } else {
      step["b"] = u.name(*s.b);
    }
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["depth"] = r.depth();
  j["spherical"] = r.spherical;
  j["core"] = generator_list(r.core);
  return j;
}

Json to_json(const GraphInvariants& inv) {
  Json j;
  j["gamma"] = inv.domination;
  j["i"] = inv.independent_domination;
  j["alpha0"] = inv.vertex_cover;
  j["alpha1"] = inv.edge_cover ? Json(*inv.edge_cover) : Json(nullptr);
  j["beta1"] = inv.matching;
  return j;
}

std::string format_profile(const HomologyProfile& profile) {
  std::ostringstream os;
  bool any = false;
  for (const auto& g : profile.groups) {
    if (g.is_zero()) continue;
    if (any) os << ", ";
    any = true;
    os << "H" << g.degree << " = ";
    bool first = true;
    if (g.rank > 0) {
      os << "Z";
      if (g.rank > 1) os << "^" << g.rank;
      first = false;
    }
    for (const auto& d : g.torsion) {
      if (!first) os << " + ";
      os << "Z/" << d;
      first = false;
    }
  }
  return any ? os.str() : "all zero";
}

bool same_up_to_shift(const HomologyProfile& a, const HomologyProfile& b, int shift) {
  auto nonzero = [](const HomologyProfile& p, int by) {
    std::vector<HomologyGroup> out;
    for (auto g : p.groups) {
      if (g.is_zero()) continue;
      g.degree += by;
      out.push_back(std::move(g));
    }
    return out;
  };
  return nonzero(a, 0) == nonzero(b, shift);
}

CommandResult run_classify(const Input& input, const ReportOptions& options) {
  const Stopwatch clock;
  CommandResult r;
  r.json = header(input, "classify", options);
  const auto& u = input.ideal.universe();
  const Classification c = classify(input.ideal);
  r.json["classification"] = classification_json(c, u);

  // The greedy verdict must not depend on the strategy.
  const Classification alt = classify(input.ideal, Strategy::DominationFirst);
  bool ok = alt.verdict == c.verdict && alt.depth == c.depth;
  std::ostringstream text;
  text << "verdict: " << verdict_name(c.verdict) << "\n";
  if (c.depth) text << "depth: " << *c.depth << "\nsimple: " << (c.simple ? "yes" : "no") << "\n";
  text << "steps: " << steps_text(c.resolution, u) << "\n";
  text << "core: " << c.resolution.core.to_string() << "\n";

  if (options.all_resolutions) {
    const ResolutionSearch search = all_maximal_resolutions(input.ideal, options.max_resolution_states);
    Json all = Json::array();
    for (const auto& res : search.resolutions) all.push_back(to_json(res, u));
    const bool coco = cores_consistent(search);
    const bool agrees = (c.verdict == Verdict::Spherical) == search.has_spherical() ||
                        input.ideal.is_unit();
    Json s;
    s["states"] = search.nodes_visited;
    s["resolutions"] = std::move(all);
    s["cores_consistent"] = coco;
    s["verdict_agrees"] = agrees;
    r.json["all_resolutions"] = std::move(s);
    ok = ok && coco && agrees;
    text << "resolutions: " << search.resolutions.size() << " (" << search.nodes_visited
         << " states)\n";
    for (const auto& res : search.resolutions) {
      text << "  " << steps_text(res, u) << "  core " << res.core.to_string() << "\n";
    }
    text << "cores consistent: " << (coco ? "yes" : "no") << "\n";
  }
  r.consistent = ok;
  r.text = text.str();
  finish(r, clock, options);
  return r;
}

CommandResult run_homology(const Input& input, const ReportOptions& options) {
  const Stopwatch clock;
  CommandResult r;
  r.json = header(input, "homology", options);
  const SimplicialComplex complex = realize(input.ideal, options.max_faces);
  const HomologyProfile profile = reduced_homology(complex);
  const HomologySize size = h_and_hd(profile);
  const long long euler = reduced_euler(complex);
  const Classification c = classify(input.ideal);
  const bool euler_ok = profile.euler() == euler;
  const bool class_ok = homology_matches(c, profile, options.max_faces);

  r.json["faces"] = complex.size();
  r.json["homology"] = to_json(profile);
  r.json["h"] = size.h_free;
  r.json["h_with_torsion"] = size.h_inclusive;
  r.json["hd"] = size.hd ? Json(*size.hd) : Json(nullptr);
  r.json["reduced_euler"] = euler;
  r.json["euler_matches"] = euler_ok;
  r.json["classification_matches"] = class_ok;
  r.consistent = euler_ok && class_ok;

  std::ostringstream text;
  text << "faces: " << complex.size() << "\n";
  text << "homology: " << format_profile(profile) << "\n";
  text << "h: " << size.h_free << " (with torsion " << size.h_inclusive << ")\n";
  text << "hd: " << (size.hd ? std::to_string(*size.hd) : "-inf") << "\n";
  text << "reduced euler: " << euler << "\n";
  r.text = text.str();
  finish(r, clock, options);
  return r;
}

CommandResult run_euler(const Input& input, const ReportOptions& options) {
  const Stopwatch clock;
  CommandResult r;
  r.json = header(input, "euler", options);
  const BigInt covers = euler_via_covers(input.ideal);
  const long long faces = reduced_euler(realize(input.ideal, options.max_faces));
  const bool agree = covers == faces;
  r.json["euler_covers"] = big_json(covers);
  r.json["euler_faces"] = faces;
  r.json["agree"] = agree;
  std::ostringstream text;
  text << "covers: " << big_str(covers) << "\nfaces: " << faces << "\nagree: "
       << (agree ? "yes" : "no") << "\n";
  r.consistent = agree;
  if (input.ideal.generators().size() <= 20) {
    const BigInt count = top_cover_count(input.ideal);
    const bool parity = (count - faces) % 2 == 0;
    r.json["top_covers"] = big_json(count);
    r.json["parity_agrees"] = parity;
    text << "covers of the top monomial: " << big_str(count) << "\n";
    r.consistent = r.consistent && parity;
  }
  if (input.graph && input.graph_ideal == GraphIdeal::Edge) {
    const auto cov = edge_cover_polynomial(*input.graph);
    r.json["cov_polynomial"] = cov.to_string();
    r.json["cov_at_minus_one"] = big_json(cov.evaluate(-1));
    text << "cov(t): " << cov.to_string() << "\n";
  }
  r.text = text.str();
  finish(r, clock, options);
  return r;
}

CommandResult run_invariants(const Input& input, const ReportOptions& options) {
  if (!input.graph) throw PreconditionError("invariants needs a .graph input");
  const Stopwatch clock;
  CommandResult r;
  r.json = header(input, "invariants", options);
  const Graph& g = *input.graph;
  const GraphInvariants inv = invariants(g);
  const GraphStructure st = structure(g);
  r.json["invariants"] = to_json(inv);
  r.json["components"] = st.components;
  r.json["h1"] = st.h1;
  r.json["forest"] = st.is_forest;
  bool ok = true;
  if (st.is_forest) {
    const bool konig = inv.vertex_cover == inv.matching;
    r.json["konig"] = konig;
    ok = ok && konig;
  }
  if (inv.edge_cover) {
    const bool gallai = *inv.edge_cover + inv.matching == g.num_vertices();
    r.json["gallai"] = gallai;
    ok = ok && gallai;
  }
  r.consistent = ok;
  std::ostringstream text;
  text << "gamma: " << inv.domination << "\ni: " << inv.independent_domination
       << "\nalpha0: " << inv.vertex_cover << "\nalpha1: "
       << (inv.edge_cover ? std::to_string(*inv.edge_cover) : "undefined")
       << "\nbeta1: " << inv.matching << "\nh1: " << st.h1 << "\n";
  r.text = text.str();
  finish(r, clock, options);
  return r;
}

CommandResult run_collapse(const Input& input, const ReportOptions& options) {
  const Stopwatch clock;
  CommandResult r;
  r.json = header(input, "collapse", options);
  const auto& u = input.ideal.universe();
  const Classification c = classify(input.ideal);
  r.json["classification"] = classification_json(c, u);
  std::ostringstream text;
  if (input.ideal.is_unit()) {
    r.json["plan"] = nullptr;
    text << "empty complex: nothing to collapse\n";
    r.text = text.str();
    finish(r, clock, options);
    return r;
  }
  const SimplicialComplex start = realize(input.ideal, options.max_faces);
  const CollapsePlan plan = witness_collapse(input.ideal, c.resolution, options.max_faces);
  const CollapseVerdict verdict = verify_collapse_sequence(start, plan.steps, plan.target);
  Json steps = Json::array();
  for (const auto& s : plan.steps) {
    steps.push_back(Json::array({face_text(u, s.tau), face_text(u, s.sigma)}));
  }
  Json p;
  p["start_faces"] = start.size();
  p["target_faces"] = plan.target.size();
  p["target_facets"] = Json::array();
  for (Monomial f : plan.target.facets()) p["target_facets"].push_back(face_text(u, f));
  p["steps"] = std::move(steps);
  p["verified"] = verdict.ok;
  if (!verdict.ok) {
    p["failed_at"] = verdict.failed_at ? Json(*verdict.failed_at) : Json(nullptr);
    p["reason"] = verdict.reason;
  }
  r.json["plan"] = std::move(p);
  r.consistent = verdict.ok;
  text << "verdict: " << verdict_name(c.verdict) << "\n";
  text << "collapses: " << plan.steps.size() << " (" << start.size() << " -> "
       << plan.target.size() << " faces)\n";
  text << "verified: " << (verdict.ok ? "yes" : "no: " + verdict.reason) << "\n";
  r.text = text.str();
  finish(r, clock, options);
  return r;
}

CommandResult run_report(const Input& input, const ReportOptions& options) {
  const Stopwatch clock;
  CommandResult r;
  r.json = header(input, "report", options);
  const auto& u = input.ideal.universe();
  std::ostringstream text;
  bool ok = true;

  const Classification c = classify(input.ideal);
  r.json["classification"] = classification_json(c, u);
  text << "verdict: " << verdict_name(c.verdict);
  if (c.depth) text << ", depth " << *c.depth << (c.simple ? ", simple" : "");
  text << "\nsteps: " << steps_text(c.resolution, u) << "\n";

  const SimplicialComplex complex = realize(input.ideal, options.max_faces);
  const HomologyProfile profile = reduced_homology(complex);
  const HomologySize size = h_and_hd(profile);
  const long long euler = reduced_euler(complex);
  const bool class_ok = homology_matches(c, profile, options.max_faces);
  Json hom;
  hom["faces"] = complex.size();
  hom["groups"] = to_json(profile);
  hom["h"] = size.h_free;
  hom["h_with_torsion"] = size.h_inclusive;
  hom["hd"] = size.hd ? Json(*size.hd) : Json(nullptr);
  hom["classification_matches"] = class_ok;
  r.json["homology"] = std::move(hom);
  ok = ok && class_ok && profile.euler() == euler;
  text << "homology: " << format_profile(profile) << "\n";

  const BigInt covers = euler_via_covers(input.ideal);
  Json eu;
  eu["covers"] = big_json(covers);
  eu["faces"] = euler;
  eu["agree"] = covers == euler;
  r.json["euler"] = std::move(eu);
  ok = ok && covers == euler;
  text << "reduced euler: " << euler << " (covers " << big_str(covers) << ")\n";

  if (input.ideal.is_unit()) {
    r.json["collapse"] = nullptr;
  } else {
    const CollapsePlan plan = witness_collapse(input.ideal, c.resolution, options.max_faces);
    const CollapseVerdict verdict = verify_collapse_sequence(complex, plan.steps, plan.target);
    Json col;
    col["steps"] = plan.steps.size();
    col["target_faces"] = plan.target.size();
    col["verified"] = verdict.ok;
    r.json["collapse"] = std::move(col);
    ok = ok && verdict.ok;
    text << "collapse witness: " << plan.steps.size() << " steps, "
         << (verdict.ok ? "verified" : "FAILED") << "\n";
    if (c.verdict == Verdict::Spherical && c.simple && !c.resolution.pairs().empty()) {
      try {
        const Chain z = generator_cycle(input.ideal, c.resolution);
        const bool gen = generates_top_class(z, complex, static_cast<int>(*c.depth) - 1);
        r.json["generator_cycle"] = gen;
        ok = ok && gen;
        text << "generator cycle: " << (gen ? "generates" : "does NOT generate") << "\n";
      } catch (const PreconditionError&) {
        // Shared b variables: outside the generator construction.
        r.json["generator_cycle"] = nullptr;
      }
    }
  }

  if (input.graph) {
    const Graph& g = *input.graph;
    const GraphStructure st = structure(g);
    Json gj;
    gj["components"] = st.components;
    gj["h1"] = st.h1;
    gj["forest"] = st.is_forest;
    if (g.num_vertices() <= kDefaultMaxInvariantVertices) {
      gj["invariants"] = to_json(invariants(g));
    }
    if (g.num_edges() <= kDefaultMaxCoverEdges) {
      const auto cov = edge_cover_polynomial(g);
      gj["cov_polynomial"] = cov.to_string();
      gj["cov_at_minus_one"] = big_json(cov.evaluate(-1));
    }
    const BoundsReport b = bounds_check(g, options.max_faces);
    gj["bounds"] = {{"h", b.size.h_inclusive},
                    {"hd", b.size.hd ? Json(*b.size.hd) : Json(nullptr)},
                    {"h_bound", b.h_bound_ok},
                    {"hd_bound", b.hd_bound_ok}};
    ok = ok && b.consistent();
    if (st.is_forest && g.num_vertices() <= kDefaultMaxInvariantVertices) {
      const ForestReport f = forest_report(g, options.max_faces);
      Json fj;
      fj["edge_verdict"] = verdict_name(f.edge.verdict);
      fj["edge_depth"] = f.edge.depth ? Json(*f.edge.depth) : Json(nullptr);
      fj["star_depth"] = f.star.depth ? Json(*f.star.depth) : Json(nullptr);
      fj["edge_homology_ok"] = f.edge_homology_ok;
      fj["edge_depth_ok"] = f.edge_depth_ok;
      fj["star_ok"] = f.star_ok;
      fj["equivalences_ok"] = g.num_vertices() == 0 || f.facco.consistent();
      fj["dominating_sign_sum"] = big_json(f.dominating_sum);
      fj["sign_identity_ok"] = f.sign_identity_ok;
      fj["konig_ok"] = f.konig_ok;
      fj["gallai_ok"] = f.gallai_ok ? Json(*f.gallai_ok) : Json(nullptr);
      gj["forest_report"] = std::move(fj);
      const bool facco_ok = g.num_vertices() == 0 || f.facco.consistent();
      ok = ok && f.edge_homology_ok && f.edge_depth_ok && f.star_ok && facco_ok &&
           f.sign_identity_ok && f.konig_ok && f.gallai_ok.value_or(true);
      text << "forest: edge depth " << (f.edge.depth ? std::to_string(*f.edge.depth) : "n/a")
           << ", star depth " << (f.star.depth ? std::to_string(*f.star.depth) : "n/a") << "\n";
    }
    if (st.h1 == 1) {
      const UnicyclicReport ur = unicyclic_report(g, options.max_faces);
      Json uj;
      Json cyc = Json::array();
      for (std::size_t v : ur.cycle) cyc.push_back(g.vertices().name(v));
      uj["cycle"] = std::move(cyc);
      uj["case"] = to_string(ur.predicted);
      uj["euler"] = big_json(ur.euler);
      uj["cov_at_minus_one"] = big_json(ur.cover_at_minus_one);
      uj["homology_ok"] = ur.homology_ok;
      uj["cycle_table_ok"] = ur.cycle_table_ok ? Json(*ur.cycle_table_ok) : Json(nullptr);
      uj["wedge_condition_ok"] = ur.wedge_condition_ok;
      gj["unicyclic_report"] = std::move(uj);
      ok = ok && ur.consistent();
      text << "unicyclic: " << to_string(ur.predicted) << "\n";
    }
    r.json["graph"] = std::move(gj);
  }
  r.consistent = ok;
  text << "consistent: " << (ok ? "yes" : "no") << "\n";
  r.text = text.str();
  finish(r, clock, options);
  return r;
}

}  // namespace monotop
