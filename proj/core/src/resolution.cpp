#include "monotop/resolution.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace monotop {

namespace {

void require_variable(const MonomialIdeal& ideal, std::size_t v, const char* where) {
  if (v >= ideal.num_variables()) {
    throw UniverseMismatch(std::string(where) + ": variable index out of range");
  }
}

void require_outside(const MonomialIdeal& ideal, std::size_t v, const char* where) {
  require_variable(ideal, v, where);
  if (ideal.contains_variable(v)) {
    throw PreconditionError(std::string(where) + ": variable " + ideal.universe().name(v) +
                            " lies in the ideal");
  }
}

// Per variable, the set of generator positions divisible by it.
class Incidence {
 public:
  explicit Incidence(const MonomialIdeal& ideal)
      : words_((ideal.generators().size() + 63) / 64),
        sets_(ideal.num_variables(), std::vector<std::uint64_t>(words_, 0)) {
    const auto& gens = ideal.generators();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (std::size_t v : gens[g].support()) sets_[v][g / 64] |= std::uint64_t{1} << (g % 64);
    }
  }

  bool empty(std::size_t v) const {
    return std::all_of(sets_[v].begin(), sets_[v].end(), [](std::uint64_t w) { return w == 0; });
  }

  // gens(b) is a nonempty subset of gens(a).
  bool dominates(std::size_t a, std::size_t b) const {
    if (empty(b)) return false;
    for (std::size_t w = 0; w < words_; ++w) {
      if ((sets_[b][w] & ~sets_[a][w]) != 0) return false;
    }
    return true;
  }

 private:
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> sets_;
};

}  // namespace

bool is_cone_apex(const MonomialIdeal& ideal, std::size_t a) {
  require_outside(ideal, a, "is_cone_apex");
  const Monomial x = Monomial::variable(a);
  return std::none_of(ideal.generators().begin(), ideal.generators().end(),
                      [x](Monomial g) { return x.divides(g); });
}

bool dominates(const MonomialIdeal& ideal, std::size_t a, std::size_t b) {
  require_outside(ideal, a, "dominates");
  require_outside(ideal, b, "dominates");
  if (a == b) throw PreconditionError("dominates: a and b must differ");
  const Monomial xa = Monomial::variable(a);
  const Monomial xb = Monomial::variable(b);
  bool any = false;
  for (Monomial g : ideal.generators()) {
    if (!xb.divides(g)) continue;
    if (!xa.divides(g)) return false;
    any = true;
  }
  return any;
}

bool dominates_by_cones(const MonomialIdeal& ideal, std::size_t a, std::size_t b) {
  require_outside(ideal, a, "dominates_by_cones");
  require_outside(ideal, b, "dominates_by_cones");
  if (a == b) throw PreconditionError("dominates_by_cones: a and b must differ");
  const MonomialIdeal with_a = add(ideal, Monomial::variable(a));
  if (with_a.contains_variable(b)) return false;
  return !is_cone_apex(ideal, b) && is_cone_apex(with_a, b);
}

std::vector<std::pair<std::size_t, std::size_t>> Resolution::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& s : steps) {
    if (s.b) out.emplace_back(s.a, *s.b);
  }
  return out;
}

Resolution make_resolution(const MonomialIdeal& ideal, std::vector<ResolutionStep> steps) {
  MonomialIdeal current = ideal;
  bool spherical = true;
  for (const auto& s : steps) {
    require_outside(current, s.a, "resolution step");
    if (s.is_cone()) {
      if (!is_cone_apex(current, s.a)) {
        throw PreconditionError("resolution step: " + ideal.universe().name(s.a) +
                                " is not a cone apex");
      }
      spherical = false;
    } else {
      require_outside(current, *s.b, "resolution step");
      if (s.a == *s.b || !dominates(current, s.a, *s.b)) {
        throw PreconditionError("resolution step: " + ideal.universe().name(s.a) +
                                " does not dominate " + ideal.universe().name(*s.b));
      }
    }
    current = colon(current, Monomial::variable(s.a));
  }
  return Resolution{std::move(steps), std::move(current), spherical};
}

Extensions extensions(const MonomialIdeal& current) {
  Extensions out;
  if (current.is_unit()) return out;
  const std::size_t n = current.num_variables();
  const Incidence inc(current);
  for (std::size_t a = 0; a < n; ++a) {
    if (current.contains_variable(a)) continue;
    if (inc.empty(a)) {
      out.cone_apexes.push_back(a);
      continue;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || current.contains_variable(b)) continue;
      if (inc.dominates(a, b)) {
        out.dominations.emplace_back(a, b);
        break;
      }
    }
  }
  return out;
}

Resolution find_resolution(const MonomialIdeal& ideal, Strategy strategy) {
  std::vector<ResolutionStep> steps;
  MonomialIdeal current = ideal;
  bool spherical = true;
  while (true) {
    const Extensions ext = extensions(current);
    if (ext.empty()) break;
    const bool take_cone = !ext.cone_apexes.empty() &&
                           (strategy == Strategy::ConeFirst || ext.dominations.empty());
    if (take_cone) {
      const std::size_t a = ext.cone_apexes.front();
      steps.push_back({a, std::nullopt});
      current = colon(current, Monomial::variable(a));
      spherical = false;
      break;
    }
    const auto [a, b] = ext.dominations.front();
    steps.push_back({a, b});
    current = colon(current, Monomial::variable(a));
  }
  return Resolution{std::move(steps), std::move(current), spherical};
}

Classification classify(const MonomialIdeal& ideal, Strategy strategy) {
  Resolution res = find_resolution(ideal, strategy);
  if (ideal.is_unit() || !res.spherical) {
    return Classification{Verdict::Conical, std::move(res), std::nullopt, false};
  }
  const bool simple = !res.core.is_unit() &&
                      res.core.variables_in_ideal() == ideal.universe().all();
  const std::size_t depth = res.depth();
  return Classification{Verdict::Spherical, std::move(res), depth, simple};
}

bool ResolutionSearch::has_spherical() const {
  return std::any_of(resolutions.begin(), resolutions.end(),
                     [](const Resolution& r) { return r.spherical; });
}

bool ResolutionSearch::has_conical() const {
  return std::any_of(resolutions.begin(), resolutions.end(),
                     [](const Resolution& r) { return !r.spherical; });
}

ResolutionSearch all_maximal_resolutions(const MonomialIdeal& ideal, std::size_t max_nodes) {
  ResolutionSearch out;
  std::vector<Resolution> conical;
  std::unordered_set<std::uint64_t> visited;
  std::vector<ResolutionStep> path;

  std::function<void(const MonomialIdeal&, std::uint64_t)> visit =
      [&](const MonomialIdeal& current, std::uint64_t chosen) {
        if (!visited.insert(chosen).second) return;
        if (++out.nodes_visited > max_nodes) {
          throw BudgetExceeded("resolution search exceeds " + std::to_string(max_nodes) +
                               " states");
        }
        const Extensions ext = extensions(current);
        if (ext.empty()) {
          out.resolutions.push_back(Resolution{path, current, !ideal.is_unit()});
          return;
        }
        for (std::size_t a : ext.cone_apexes) {
          auto steps = path;
          steps.push_back({a, std::nullopt});
          conical.push_back(Resolution{std::move(steps), colon(current, Monomial::variable(a)), false});
        }
        for (const auto& [a, b] : ext.dominations) {
          path.push_back({a, b});
          visit(colon(current, Monomial::variable(a)), chosen | (std::uint64_t{1} << a));
          path.pop_back();
        }
      };
  visit(ideal, 0);

  auto by_steps = [](const Resolution& x, const Resolution& y) {
    return std::lexicographical_compare(
        x.steps.begin(), x.steps.end(), y.steps.begin(), y.steps.end(),
        [](const ResolutionStep& s, const ResolutionStep& t) {
          if (s.a != t.a) return s.a < t.a;
          return s.b.value_or(SIZE_MAX) < t.b.value_or(SIZE_MAX);
        });
  };
  std::sort(out.resolutions.begin(), out.resolutions.end(), by_steps);
  std::sort(conical.begin(), conical.end(), by_steps);
  for (auto& r : conical) out.resolutions.push_back(std::move(r));
  return out;
}

bool permutation_equivalent(const MonomialIdeal& a, const MonomialIdeal& b) {
  const std::size_t n = a.num_variables();
  if (n != b.num_variables()) return false;
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  if (ga.size() != gb.size()) return false;

  auto signatures = [n](const std::vector<Monomial>& gens) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Monomial g : gens) {
      for (std::size_t v : g.support()) sig[v].push_back(g.degree());
    }
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
  };
  const auto sa = signatures(ga);
  const auto sb = signatures(gb);
  {
    auto x = sa;
    auto y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }

  // Generators of `a` grouped by their largest variable: checked once that
  // variable is assigned.
  std::vector<std::vector<Monomial>> closing(n);
  for (Monomial g : ga) {
    if (g.is_one()) continue;
    closing[static_cast<std::size_t>(63 - std::countl_zero(g.bits()))].push_back(g);
  }
  const std::unordered_set<Monomial, MonomialHash> targets(gb.begin(), gb.end());
  std::vector<std::size_t> perm(n, 0);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> assign = [&](std::size_t k) {
    if (k == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sb[w] != sa[k]) continue;
      perm[k] = w;
      const bool ok = std::all_of(closing[k].begin(), closing[k].end(), [&](Monomial g) {
        return targets.contains(permute(g, perm));
      });
      if (!ok) continue;
      used[w] = true;
      if (assign(k + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return assign(0);
}

bool cores_consistent(const ResolutionSearch& search) {
  if (search.has_spherical() && search.has_conical()) return false;
  const Resolution* first = nullptr;
  for (const auto& r : search.resolutions) {
    if (!r.spherical) continue;
    if (!first) {
      first = &r;
      continue;
    }
    if (r.depth() != first->depth() || !permutation_equivalent(r.core, first->core)) return false;
  }
  return true;
}

namespace {

// f lies in join(inner, {1, a, b}).
bool in_suspension(const FaceSet& inner, Monomial f, Monomial a, Monomial b) {
  if (inner.contains(f)) return true;
  if (a.divides(f) && inner.contains(f.without(a))) return true;
  return b.divides(f) && inner.contains(f.without(b));
}

bool graded_desc(Monomial x, Monomial y) {
  if (x.degree() != y.degree()) return x.degree() > y.degree();
  return graded_lex_less(x, y);
}

// Orders the faces in `left` into free pairs valid in `ws`, applying them.
bool remove_as_pairs(std::vector<Monomial>& left, CollapseWorkspace& ws,
                     std::vector<CollapseStep>& out) {
  if (left.empty()) return true;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < left.size(); ++j) {
      const CollapseStep step{left[i], left[j]};
      if (i == j || !ws.check(step).empty()) continue;
      ws.apply(step);
      out.push_back(step);
      std::vector<Monomial> rest;
      for (std::size_t k = 0; k < left.size(); ++k) {
        if (k != i && k != j) rest.push_back(left[k]);
      }
      if (remove_as_pairs(rest, ws, out)) return true;
      out.pop_back();
      ws.undo(step);
    }
  }
  return false;
}

// Collapses R(J) onto join({1,a_1,b_1}, ..., {1,a_k,b_k}, R(J : a_1...a_k)).
std::vector<CollapseStep> spherical_plan(const MonomialIdeal& J,
                                         std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                         std::size_t max_faces) {
  std::vector<CollapseStep> out;
  if (pairs.empty()) return out;
  const Monomial a = Monomial::variable(pairs.front().first);
  const Monomial b = Monomial::variable(pairs.front().second);
  const MonomialIdeal inner_ideal = colon(J, a);
  const SimplicialComplex outer = realize(J, max_faces);
  const SimplicialComplex inner = realize(inner_ideal, max_faces);

  // Collapse R(J) onto Sigma_{a,b} R(J : a): pairs (sigma / b, sigma) from the
  // top degree down.
  CollapseWorkspace ws(outer);
  std::vector<Monomial> tops;
  std::size_t outside = 0;
  for (Monomial f : outer.faces()) {
    if (in_suspension(inner.face_set(), f, a, b)) continue;
    ++outside;
    if (b.divides(f)) tops.push_back(f);
  }
  std::sort(tops.begin(), tops.end(), graded_desc);
  if (2 * tops.size() != outside) {
    throw InternalError("domination collapse: faces outside the suspension do not pair up");
  }
  for (Monomial sigma : tops) {
    const CollapseStep step{sigma.without(b), sigma};
    if (auto why = ws.check(step); !why.empty()) {
      throw InternalError("domination collapse produced an invalid step: " + why);
    }
    ws.apply(step);
    out.push_back(step);
  }

  // Lift the inner plan through the suspension.
  const auto inner_steps = spherical_plan(inner_ideal, pairs.subspan(1), max_faces);
  FaceSet inner_faces = inner.face_set();
  for (const auto& s : inner_steps) {
    inner_faces.erase(s.tau);
    inner_faces.erase(s.sigma);
    std::vector<Monomial> removed;
    for (Monomial base : {s.tau, s.sigma}) {
      for (Monomial f : {base, base.lcm(a), base.lcm(b)}) {
        if (ws.contains(f) && !in_suspension(inner_faces, f, a, b) &&
            std::find(removed.begin(), removed.end(), f) == removed.end()) {
          removed.push_back(f);
        }
      }
    }
    std::sort(removed.begin(), removed.end(), graded_desc);
    if (!remove_as_pairs(removed, ws, out)) {
      throw InternalError("lifting a collapse through a suspension failed");
    }
  }
  return out;
}

}  // namespace

CollapsePlan witness_collapse(const MonomialIdeal& ideal, const Resolution& resolution,
                              std::size_t max_faces) {
  if (ideal.is_unit()) throw PreconditionError("witness_collapse: R(I) is empty");
  const auto& u = ideal.universe_ptr();
  const auto pairs = resolution.pairs();
  const SimplicialComplex start = realize(ideal, max_faces);
  std::vector<CollapseStep> steps = spherical_plan(ideal, pairs, max_faces);

  CollapseWorkspace ws(start);
  for (const auto& s : steps) ws.apply(s);

  if (resolution.spherical) {
    SimplicialComplex target =
        join(cross_polytope_boundary(u, pairs), realize(resolution.core, max_faces));
    if (ws.size() != target.size() ||
        !std::all_of(target.faces().begin(), target.faces().end(),
                     [&](Monomial f) { return ws.contains(f); })) {
      throw InternalError("collapse plan does not reach join(Sigma, R(core))");
    }
    return CollapsePlan{std::move(steps), std::move(target)};
  }

  // The current complex is an iterated suspension of a cone; find its apex,
  // preferring the variable of the cone step.
  std::vector<std::size_t> candidates;
  if (!resolution.steps.empty() && resolution.steps.back().is_cone()) {
    candidates.push_back(resolution.steps.back().a);
  }
  for (std::size_t v = 0; v < u->size(); ++v) candidates.push_back(v);
  std::optional<std::size_t> apex;
  for (std::size_t v : candidates) {
    const Monomial x = Monomial::variable(v);
    if (!ws.contains(x)) continue;
    const bool is_apex = std::all_of(ws.faces().begin(), ws.faces().end(),
                                     [&](Monomial f) { return ws.contains(f.lcm(x)); });
    if (is_apex) {
      apex = v;
      break;
    }
  }
  if (!apex) throw InternalError("conical collapse: no cone apex found");
  const Monomial x = Monomial::variable(*apex);
  std::vector<Monomial> bases;
  for (Monomial f : ws.faces()) {
    if (!x.divides(f) && !f.is_one()) bases.push_back(f);
  }
  std::sort(bases.begin(), bases.end(), graded_desc);
  for (Monomial tau : bases) {
    const CollapseStep step{tau, tau.lcm(x)};
    if (auto why = ws.check(step); !why.empty()) {
      throw InternalError("cone collapse produced an invalid step: " + why);
    }
    ws.apply(step);
    steps.push_back(step);
  }
  const Monomial point[] = {x};
  return CollapsePlan{std::move(steps), SimplicialComplex::generated_by(u, point)};
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> distinct_pairs(
    const MonomialIdeal& ideal, const Resolution& resolution) {
  if (!resolution.spherical) return std::nullopt;
  const std::size_t n = ideal.num_variables();
  Monomial as;
  for (const auto& s : resolution.steps) as = as.with_var(s.a);
  // Variables dominated by a_i in I_i, excluding every a_j.
  std::vector<std::vector<std::size_t>> options;
  MonomialIdeal current = ideal;
  for (const auto& s : resolution.steps) {
    std::vector<std::size_t> opts;
    if (s.b) opts.push_back(*s.b);
    for (std::size_t b = 0; b < n; ++b) {
      if (b == s.a || as.has(b) || current.contains_variable(b) || (s.b && b == *s.b)) continue;
      if (dominates(current, s.a, b)) opts.push_back(b);
    }
    std::erase_if(opts, [&](std::size_t b) { return as.has(b); });
    options.push_back(std::move(opts));
    current = colon(current, Monomial::variable(s.a));
  }
  // Kuhn's augmenting paths: steps on one side, variables on the other.
  std::vector<std::optional<std::size_t>> owner(n);
  std::function<bool(std::size_t, std::vector<bool>&)> augment =
      [&](std::size_t i, std::vector<bool>& tried) {
        for (std::size_t b : options[i]) {
          if (tried[b]) continue;
          tried[b] = true;
          if (!owner[b] || augment(*owner[b], tried)) {
            owner[b] = i;
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < options.size(); ++i) {
    std::vector<bool> tried(n, false);
    if (!augment(i, tried)) return std::nullopt;
  }
  std::vector<std::pair<std::size_t, std::size_t>> out(options.size());
  for (std::size_t b = 0; b < n; ++b) {
    if (owner[b]) out[*owner[b]] = {resolution.steps[*owner[b]].a, b};
  }
  return out;
}

Chain generator_cycle(const MonomialIdeal& ideal, const Resolution& resolution) {
  if (!resolution.spherical) throw PreconditionError("generator_cycle needs a spherical resolution");
  const Monomial all = ideal.universe().all();
  if (resolution.core.is_unit() || resolution.core.variables_in_ideal() != all) {
    throw PreconditionError("generator_cycle needs a core containing every variable");
  }
  const auto chosen_pairs = distinct_pairs(ideal, resolution);
  if (!chosen_pairs) {
    throw PreconditionError("generator_cycle: no choice of pairwise distinct a_i and b_i");
  }
  const auto& pairs = *chosen_pairs;
  const std::size_t r = pairs.size();
  Chain z(static_cast<int>(r) - 1);
  std::vector<std::size_t> chosen(r);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    Monomial face;
    int sign = 1;
    for (std::size_t i = 0; i < r; ++i) {
      const bool pick_b = (mask >> i) & 1U;
      chosen[i] = pick_b ? pairs[i].second : pairs[i].first;
      if (pick_b) sign = -sign;
      face = face.with_var(chosen[i]);
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        if (chosen[i] > chosen[j]) sign = -sign;
      }
    }
    if (ideal.contains(face)) {
      throw InternalError("generator_cycle: " + ideal.universe().format(face) + " is not a face");
    }
    z.add(face, sign);
  }
  return z;
}

}  // namespace monotop
