#include "monotop/graph.hpp"

#include "monotop/covers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace monotop {

Graph::Graph(UniversePtr vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
  if (!vertices_) throw PreconditionError("graph requires a vertex universe");
  const std::size_t n = vertices_->size();
  adjacency_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw UniverseMismatch("edge endpoint outside the vertex set");
    if (u == v) throw PreconditionError("loop at " + vertices_->name(u));
    if (u > v) std::swap(u, v);
    if ((adjacency_[u] >> v) & 1U) {
      throw PreconditionError("repeated edge " + vertices_->name(u) + " " + vertices_->name(v));
    }
    adjacency_[u] |= std::uint64_t{1} << v;
    adjacency_[v] |= std::uint64_t{1} << u;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

Monomial Graph::closed_neighborhood(Monomial s) const {
  require_fits(*vertices_, s, "closed_neighborhood");
  std::uint64_t out = s.bits();
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    out |= adjacency_[static_cast<std::size_t>(std::countr_zero(b))];
  }
  return Monomial{out};
}

bool Graph::is_independent(Monomial s) const {
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    if (adjacency_[static_cast<std::size_t>(std::countr_zero(b))] & s.bits()) return false;
  }
  return true;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](std::uint64_t a) { return a == 0; });
}

bool operator==(const Graph& a, const Graph& b) {
  return same_universe(a.vertices_, b.vertices_) && a.edges_ == b.edges_;
}

Graph induced_subgraph(const Graph& g, Monomial s) {
  require_fits(g.vertices(), s, "induced_subgraph");
  std::vector<std::size_t> kept = s.support();
  std::vector<std::string> names;
  std::vector<std::size_t> position(g.num_vertices(), 0);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    position[kept[k]] = k;
    names.push_back(g.vertices().name(kept[k]));
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (s.has(u) && s.has(v)) edges.emplace_back(position[u], position[v]);
  }
  return Graph(VariableUniverse::make(std::move(names)), std::move(edges));
}

Graph delete_vertices(const Graph& g, Monomial s) {
  require_fits(g.vertices(), s, "delete_vertices");
  return induced_subgraph(g, g.all().without(s));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges()) gens.push_back(Monomial::variable(u).with_var(v));
  return MonomialIdeal(g.universe_ptr(), std::move(gens));
}

MonomialIdeal star_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    gens.push_back(g.closed_neighborhood(Monomial::variable(v)));
  }
  return MonomialIdeal(g.universe_ptr(), std::move(gens));
}

namespace {

void require_small(const Graph& g, std::size_t max_vertices, const char* what) {
  if (g.num_vertices() > max_vertices) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(g.num_vertices()) +
                         " vertices exceed the budget of " + std::to_string(max_vertices));
  }
}

// Smallest k such that some k-subset satisfies `pred`, scanning subsets by
// increasing size.
template <typename Pred>
std::size_t min_subset(std::size_t n, Pred pred) {
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      if (pred(Monomial::one())) return 0;
      continue;
    }
    // Gosper's hack over k-subsets of n.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (pred(Monomial{s})) return k;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  throw InternalError("min_subset: no subset satisfies the predicate");
}

std::size_t max_matching(const Graph& g) {
  std::unordered_map<std::uint64_t, std::size_t> memo;
  std::function<std::size_t(std::uint64_t)> best = [&](std::uint64_t avail) -> std::size_t {
    // Drop vertices with no available neighbor; they cannot be matched.
    while (avail != 0) {
      const auto v = static_cast<std::size_t>(std::countr_zero(avail));
      if ((g.neighbors(v).bits() & avail) != 0) break;
      avail &= avail - 1;
    }
    if (avail == 0) return 0;
    if (auto it = memo.find(avail); it != memo.end()) return it->second;
    const auto v = static_cast<std::size_t>(std::countr_zero(avail));
    const std::uint64_t rest = avail & ~(std::uint64_t{1} << v);
    std::size_t result = best(rest);
    for (std::uint64_t nb = g.neighbors(v).bits() & rest; nb != 0; nb &= nb - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(nb));
      result = std::max(result, 1 + best(rest & ~(std::uint64_t{1} << u)));
    }
    memo.emplace(avail, result);
    return result;
  };
  return best(g.all().bits());
}

std::size_t min_edge_cover(const Graph& g) {
  std::unordered_map<std::uint64_t, std::size_t> memo;
  std::function<std::size_t(std::uint64_t)> best = [&](std::uint64_t uncovered) -> std::size_t {
    if (uncovered == 0) return 0;
    if (auto it = memo.find(uncovered); it != memo.end()) return it->second;
    const auto v = static_cast<std::size_t>(std::countr_zero(uncovered));
    std::size_t result = SIZE_MAX;
    for (std::uint64_t nb = g.neighbors(v).bits(); nb != 0; nb &= nb - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(nb));
      const std::uint64_t next = uncovered & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << u);
      result = std::min(result, 1 + best(next));
    }
    memo.emplace(uncovered, result);
    return result;
  };
  return best(g.all().bits());
}

}  // namespace

GraphInvariants invariants(const Graph& g, std::size_t max_vertices) {
  require_small(g, max_vertices, "invariants");
  const std::size_t n = g.num_vertices();
  GraphInvariants out;
  out.domination = min_subset(n, [&](Monomial s) { return g.is_dominating(s); });
  out.independent_domination =
      min_subset(n, [&](Monomial s) { return g.is_independent(s) && g.is_dominating(s); });
  out.vertex_cover = min_subset(n, [&](Monomial s) {
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [s](const Edge& e) { return s.has(e.first) || s.has(e.second); });
  });
  out.matching = max_matching(g);
  if (!g.has_isolated_vertex()) out.edge_cover = min_edge_cover(g);
  return out;
}

UnivariatePolynomial edge_cover_polynomial(const Graph& g, std::size_t max_edges) {
  if (g.num_edges() > max_edges) {
    throw BudgetExceeded("edge cover polynomial: " + std::to_string(g.num_edges()) +
                         " edges exceed the budget of " + std::to_string(max_edges));
  }
  if (g.has_isolated_vertex()) return {};
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  // remaining[i] = vertices touched by edges i..m-1
  std::vector<std::uint64_t> remaining(m + 1, 0);
  for (std::size_t i = m; i-- > 0;) {
    remaining[i] = remaining[i + 1] | (std::uint64_t{1} << edges[i].first) |
                   (std::uint64_t{1} << edges[i].second);
  }
  const std::uint64_t all = g.all().bits();
  std::vector<BigInt> counts(m + 1, 0);
  std::function<void(std::size_t, std::uint64_t, std::size_t)> walk =
      [&](std::size_t i, std::uint64_t covered, std::size_t size) {
        if ((covered | remaining[i]) != all) return;
        if (i == m) {
          counts[size] += 1;
          return;
        }
        walk(i + 1, covered, size);
        walk(i + 1,
             covered | (std::uint64_t{1} << edges[i].first) | (std::uint64_t{1} << edges[i].second),
             size + 1);
      };
  walk(0, 0, 0);
  return UnivariatePolynomial(std::move(counts));
}

BigInt dominating_sign_sum(const Graph& g, std::size_t max_vertices) {
  require_small(g, max_vertices, "dominating_sign_sum");
  const std::size_t n = g.num_vertices();
  long long acc = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (g.is_dominating(Monomial{s})) acc += (std::popcount(s) % 2 == 0) ? 1 : -1;
  }
  return acc;
}

GraphStructure structure(const Graph& g) {
  const std::size_t n = g.num_vertices();
  GraphStructure out;
  std::uint64_t seen = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if ((seen >> v) & 1U) continue;
    ++out.components;
    std::uint64_t frontier = std::uint64_t{1} << v;
    seen |= frontier;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
        next |= g.neighbors(static_cast<std::size_t>(std::countr_zero(b))).bits();
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
  }
  out.h1 = static_cast<long long>(out.components) + static_cast<long long>(g.num_edges()) -
           static_cast<long long>(n);
  out.is_forest = out.h1 == 0;
  if (out.h1 == 1) {
    // Strip vertices of degree at most one; what remains is the cycle.
    std::uint64_t alive = g.all().bits();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint64_t b = alive; b != 0; b &= b - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(b));
        if (std::popcount(g.neighbors(v).bits() & alive) <= 1) {
          alive &= ~(std::uint64_t{1} << v);
          changed = true;
        }
      }
    }
    std::vector<std::size_t> cycle;
    auto start = static_cast<std::size_t>(std::countr_zero(alive));
    std::size_t prev = start;
    std::size_t cur = start;
    do {
      cycle.push_back(cur);
      const std::uint64_t nb = g.neighbors(cur).bits() & alive & ~(std::uint64_t{1} << prev);
      // At the start both neighbors qualify; take the smaller one.
      const auto next = static_cast<std::size_t>(std::countr_zero(nb));
      prev = cur;
      cur = next;
    } while (cur != start);
    out.cycle = std::move(cycle);
  }
  return out;
}

std::vector<Graph> tree_tentacles(const Graph& g) {
  const GraphStructure st = structure(g);
  if (!st.cycle) throw PreconditionError("tree tentacles need a graph with exactly one cycle");
  Monomial on_cycle;
  for (std::size_t v : *st.cycle) on_cycle = on_cycle.with_var(v);
  std::vector<Graph> out;
  for (std::size_t v : *st.cycle) {
    const Monomial off = g.neighbors(v).without(on_cycle);
    for (std::size_t u : off.support()) {
      // Component of u once v is removed.
      std::uint64_t comp = std::uint64_t{1} << u;
      std::uint64_t frontier = comp;
      const std::uint64_t blocked = std::uint64_t{1} << v;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
          next |= g.neighbors(static_cast<std::size_t>(std::countr_zero(b))).bits();
        }
        frontier = next & ~comp & ~blocked;
        comp |= frontier;
      }
      out.push_back(induced_subgraph(g, Monomial{comp | blocked}));
    }
  }
  return out;
}

bool leaf_stripping_reaches_isolated(const Graph& forest) {
  Graph current = forest;
  while (true) {
    if (current.has_isolated_vertex()) return true;
    std::optional<std::size_t> a;
    for (std::size_t v = 0; v < current.num_vertices() && !a; ++v) {
      if (current.degree(v) == 1) {
        a = static_cast<std::size_t>(std::countr_zero(current.neighbors(v).bits()));
      }
    }
    if (!a) return false;
    current = delete_vertices(current, current.closed_neighborhood(Monomial::variable(*a)));
  }
}

Graph path_graph(std::size_t n, const std::string& prefix) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(VariableUniverse::numbered(n, prefix), std::move(edges));
}

Graph cycle_graph(std::size_t n, const std::string& prefix) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(VariableUniverse::numbered(n, prefix), std::move(edges));
}

Graph empty_graph(std::size_t n, const std::string& prefix) {
  return Graph(VariableUniverse::numbered(n, prefix), {});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::string> names = a.vertices().names();
  for (const auto& nm : b.vertices().names()) {
    std::string candidate = nm;
    while (a.vertices().index_of(candidate) ||
           std::find(names.begin(), names.end(), candidate) != names.end()) {
      candidate += "'";
    }
    names.push_back(candidate);
  }
  std::vector<Edge> edges = a.edges();
  const std::size_t shift = a.num_vertices();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(VariableUniverse::make(std::move(names)), std::move(edges));
}

Graph disjoint_triangles(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < n; ++t) {
    edges.emplace_back(3 * t, 3 * t + 1);
    edges.emplace_back(3 * t, 3 * t + 2);
    edges.emplace_back(3 * t + 1, 3 * t + 2);
  }
  return Graph(VariableUniverse::numbered(3 * n, "v"), std::move(edges));
}

Graph disjoint_edges(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < n; ++t) edges.emplace_back(2 * t, 2 * t + 1);
  return Graph(VariableUniverse::numbered(2 * n, "v"), std::move(edges));
}

Graph spider(std::size_t k) {
  std::vector<std::string> names{"L", "R"};
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t side = 0; side < 2; ++side) {
    for (std::size_t j = 1; j <= k + 1; ++j) {
      names.push_back((side == 0 ? "l" : "r") + std::to_string(j));
      edges.emplace_back(side, names.size() - 1);
    }
  }
  return Graph(VariableUniverse::make(std::move(names)), std::move(edges));
}

bool FaccoChecks::consistent() const {
  const bool v = conical;
  return contractible == v && euler_even == v && cover_at_minus_one_zero == v &&
         cover_count_even == v && leaf_stripping == v && some_vertex_agrees == v &&
         every_vertex_agrees == v;
}

bool ForestReport::consistent() const {
  return edge_homology_ok && edge_depth_ok && star_ok && facco.consistent() && sign_identity_ok &&
         konig_ok && gallai_ok.value_or(true);
}

namespace {

bool is_even(const BigInt& x) { return x % 2 == 0; }

bool edge_conical(const Graph& g) {
  return classify(edge_ideal(g)).verdict == Verdict::Conical;
}

}  // namespace

ForestReport forest_report(const Graph& forest, std::size_t max_faces) {
  if (!structure(forest).is_forest) throw PreconditionError("forest_report: graph has a cycle");
  ForestReport r;
  r.invariants = invariants(forest);
  const MonomialIdeal edge = edge_ideal(forest);
  const SimplicialComplex independence = realize(edge, max_faces);
  r.edge = classify(edge);
  r.edge_homology = reduced_homology(independence);
  if (r.edge.verdict == Verdict::Conical) {
    r.edge_homology_ok = r.edge_homology.is_zero();
    r.edge_depth_ok = true;
  } else {
    const auto d = static_cast<int>(*r.edge.depth);
    r.edge_homology_ok = r.edge_homology.is_sphere(d - 1);
    r.edge_depth_ok = *r.edge.depth == r.invariants.independent_domination &&
                      *r.edge.depth == r.invariants.domination && r.edge.simple;
  }

  const MonomialIdeal star = star_ideal(forest);
  r.star = classify(star);
  r.star_homology = reduced_homology(realize(star, max_faces));
  r.star_ok = r.star.verdict == Verdict::Spherical && r.star.simple &&
              *r.star.depth == r.invariants.matching &&
              *r.star.depth == r.invariants.vertex_cover &&
              r.star_homology.is_sphere(static_cast<int>(r.invariants.matching) - 1);

  r.euler = euler_via_covers(edge);
  r.cover_polynomial = edge_cover_polynomial(forest);
  auto& f = r.facco;
  f.conical = r.edge.verdict == Verdict::Conical;
  f.contractible = r.edge_homology.is_zero();
  f.euler_even = is_even(r.euler);
  f.cover_at_minus_one_zero = r.cover_polynomial.evaluate(-1) == 0;
  f.cover_count_even = is_even(r.cover_polynomial.evaluate(1));
  f.leaf_stripping = leaf_stripping_reaches_isolated(forest);
  bool some = false;
  bool every = forest.num_vertices() > 0;
  for (std::size_t v = 0; v < forest.num_vertices(); ++v) {
    const Monomial x = Monomial::variable(v);
    const bool agree = edge_conical(delete_vertices(forest, x)) ==
                       edge_conical(delete_vertices(forest, forest.closed_neighborhood(x)));
    some = some || agree;
    every = every && agree;
  }
  f.some_vertex_agrees = some;
  f.every_vertex_agrees = every;

  r.dominating_sum = dominating_sign_sum(forest);
  const std::size_t parity = r.invariants.matching + forest.num_vertices();
  r.sign_identity_ok = r.dominating_sum == (parity % 2 == 0 ? 1 : -1);
  r.konig_ok = r.invariants.vertex_cover == r.invariants.matching;
  if (r.invariants.edge_cover) {
    r.gallai_ok = *r.invariants.edge_cover + r.invariants.matching == forest.num_vertices();
  }
  return r;
}

std::string to_string(UnicyclicCase c) {
  switch (c) {
    case UnicyclicCase::Contractible:
      return "contractible";
    case UnicyclicCase::Sphere:
      return "sphere";
    case UnicyclicCase::Wedge:
      return "wedge";
  }
  return "unknown";
}

bool UnicyclicReport::consistent() const {
  return homology_ok && cycle_table_ok.value_or(true) && wedge_condition_ok;
}

UnicyclicReport unicyclic_report(const Graph& g, std::size_t max_faces) {
  const GraphStructure st = structure(g);
  if (st.h1 != 1) throw PreconditionError("unicyclic_report: h1 is " + std::to_string(st.h1));
  UnicyclicReport r;
  r.cycle = *st.cycle;
  const MonomialIdeal edge = edge_ideal(g);
  r.euler = euler_via_covers(edge);
  r.cover_at_minus_one = edge_cover_polynomial(g).evaluate(-1);
  const BigInt magnitude = r.euler < 0 ? BigInt{-r.euler} : r.euler;
  if (magnitude > 2) throw InternalError("unicyclic graph with |euler| > 2");
  r.predicted = magnitude == 0   ? UnicyclicCase::Contractible
                : magnitude == 1 ? UnicyclicCase::Sphere
                                 : UnicyclicCase::Wedge;
  r.homology = reduced_homology(realize(edge, max_faces));

  // Non-zero groups must sit in a single degree with total rank |euler|.
  std::size_t nonzero = 0;
  std::size_t total = 0;
  bool torsion = false;
  for (const auto& grp : r.homology.groups) {
    if (grp.is_zero()) continue;
    ++nonzero;
    total += grp.rank;
    torsion = torsion || !grp.torsion.empty();
  }
  r.homology_ok = !torsion && nonzero <= 1 && BigInt(total) == magnitude;

  const std::size_t k = r.cycle.size();
  if (g.num_vertices() == k && g.num_edges() == k) {
    bool ok = false;
    if (k % 3 == 2) ok = r.homology.is_sphere(static_cast<int>((k + 1) / 3) - 1);
    if (k % 3 == 1) ok = r.homology.is_sphere(static_cast<int>((k - 1) / 3) - 1);
    if (k % 3 == 0) {
      const int deg = static_cast<int>(k / 3) - 1;
      const auto* grp = r.homology.find(deg);
      ok = grp && grp->rank == 2 && grp->torsion.empty() && total == 2;
    }
    r.cycle_table_ok = ok;
  }

  bool all_conical = true;
  for (const Graph& t : tree_tentacles(g)) {
    const bool c = edge_conical(t);
    r.tentacles_conical.push_back(c);
    all_conical = all_conical && c;
  }
  r.wedge_condition_ok = r.predicted != UnicyclicCase::Wedge || (all_conical && k % 3 == 0);
  return r;
}

BoundsReport bounds_check(const Graph& g, std::size_t max_faces) {
  BoundsReport r;
  r.h1 = structure(g).h1;
  r.vertices = g.num_vertices();
  r.size = h_and_hd(reduced_homology(realize(edge_ideal(g), max_faces)));
  r.h_bound_ok = r.h1 >= 63 || r.size.h_inclusive <= (std::size_t{1} << r.h1);
  // hd <= |V|/2 - 1  <=>  2 (hd + 1) <= |V|
  r.hd_bound_ok = !r.size.hd || 2 * (static_cast<long long>(*r.size.hd) + 1) <=
                                    static_cast<long long>(r.vertices);
  return r;
}

}  // namespace monotop
