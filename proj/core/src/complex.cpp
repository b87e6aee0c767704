#include "monotop/complex.hpp"

#include <algorithm>
#include <bit>

namespace monotop {

namespace {

std::vector<Monomial> sorted_faces(const FaceSet& set) {
  std::vector<Monomial> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw PreconditionError("complex requires a variable universe");
}

SimplicialComplex::SimplicialComplex(UniversePtr universe, std::vector<Monomial> sorted,
                                     FaceSet index)
    : universe_(std::move(universe)), faces_(std::move(sorted)), index_(std::move(index)) {}

SimplicialComplex SimplicialComplex::from_faces(UniversePtr universe, std::vector<Monomial> faces) {
  if (!universe) throw PreconditionError("complex requires a variable universe");
  FaceSet index;
  index.reserve(faces.size());
  for (Monomial f : faces) {
    require_fits(*universe, f, "from_faces");
    index.insert(f);
  }
  for (Monomial f : index) {
    for (std::size_t v : f.support()) {
      if (!index.contains(f.without_var(v))) {
        throw PreconditionError("face set is not downward closed: missing " +
                                universe->format(f.without_var(v)));
      }
    }
  }
  auto sorted = sorted_faces(index);
  return SimplicialComplex(std::move(universe), std::move(sorted), std::move(index));
}

SimplicialComplex SimplicialComplex::generated_by(UniversePtr universe,
                                                  std::span<const Monomial> facets) {
  FaceSet index;
  for (Monomial f : facets) {
    require_fits(*universe, f, "generated_by");
    if (index.contains(f)) continue;
    // All submasks of f.
    const std::uint64_t bits = f.bits();
    std::uint64_t sub = bits;
    while (true) {
      index.insert(Monomial{sub});
      if (sub == 0) break;
      sub = (sub - 1) & bits;
    }
  }
  auto sorted = sorted_faces(index);
  return SimplicialComplex(std::move(universe), std::move(sorted), std::move(index));
}

int SimplicialComplex::max_degree() const {
  if (faces_.empty()) return -1;
  return static_cast<int>(faces_.back().degree());
}

Monomial SimplicialComplex::vertex_mask() const {
  Monomial out;
  for (Monomial f : faces_) {
    if (f.degree() > 1) break;
    out = out.lcm(f);
  }
  return out;
}

std::vector<Monomial> SimplicialComplex::faces_of_degree(std::size_t d) const {
  std::vector<Monomial> out;
  for (Monomial f : faces_) {
    if (f.degree() == d) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::is_maximal(Monomial face) const {
  if (!contains(face)) return false;
  const Monomial free = universe_->all().without(face);
  for (std::size_t v : free.support()) {
    if (contains(face.with_var(v))) return false;
  }
  return true;
}

std::vector<Monomial> SimplicialComplex::facets() const {
  std::vector<Monomial> out;
  for (Monomial f : faces_) {
    if (is_maximal(f)) out.push_back(f);
  }
  return out;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return same_universe(a.universe_, b.universe_) && a.faces_ == b.faces_;
}

SimplicialComplex realize(const MonomialIdeal& ideal, std::size_t max_faces) {
  const auto& u = ideal.universe_ptr();
  const std::size_t n = ideal.num_variables();
  if (ideal.is_unit()) return SimplicialComplex(u);

  // Generators grouped by their largest variable: a new face f = parent * x_v
  // (v above every variable of the parent) can only be divisible by a
  // generator containing v, and such a generator must have v as its largest
  // variable because f has no variable beyond v.
  std::vector<std::vector<Monomial>> by_top(n);
  for (Monomial g : ideal.generators()) {
    const auto top = static_cast<std::size_t>(63 - std::countl_zero(g.bits()));
    by_top[top].push_back(g);
  }

  std::vector<Monomial> faces{Monomial::one()};
  std::size_t level_begin = 0;
  while (level_begin < faces.size()) {
    const std::size_t level_end = faces.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      const Monomial parent = faces[k];
      const std::size_t start =
          parent.is_one() ? 0 : static_cast<std::size_t>(64 - std::countl_zero(parent.bits()));
      for (std::size_t v = start; v < n; ++v) {
        const Monomial child = parent.with_var(v);
        const auto& gens = by_top[v];
        const bool in_ideal = std::any_of(gens.begin(), gens.end(),
                                          [child](Monomial g) { return g.divides(child); });
        if (in_ideal) continue;
        if (faces.size() >= max_faces) {
          throw BudgetExceeded("face enumeration exceeds budget of " + std::to_string(max_faces) +
                               " faces");
        }
        faces.push_back(child);
      }
    }
    level_begin = level_end;
  }
  return SimplicialComplex::from_faces(u, std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& complex, Monomial x) {
  require_fits(complex.universe(), x, "link");
  std::vector<Monomial> out;
  for (Monomial m : complex.faces()) {
    if (complex.contains(m.lcm(x)) && m.coprime(x)) out.push_back(m);
  }
  // Faces sharing variables with x: xm = lcm only when coprime; a face m with
  // a common variable gives x*m divisible by a square, which is not a face.
  return SimplicialComplex::from_faces(complex.universe_ptr(), std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& complex, Monomial x) {
  require_fits(complex.universe(), x, "deletion");
  std::vector<Monomial> out;
  for (Monomial m : complex.faces()) {
    if (!x.divides(m)) out.push_back(m);
  }
  return SimplicialComplex::from_faces(complex.universe_ptr(), std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  require_same_universe(a.universe_ptr(), b.universe_ptr(), "join");
  FaceSet out;
  for (Monomial ma : a.faces()) {
    for (Monomial mb : b.faces()) out.insert(ma.lcm(mb));
  }
  return SimplicialComplex::from_faces(a.universe_ptr(),
                                       std::vector<Monomial>(out.begin(), out.end()));
}

SimplicialComplex join(std::span<const SimplicialComplex> complexes) {
  if (complexes.empty()) throw PreconditionError("join of an empty list needs a universe");
  SimplicialComplex acc = complexes.front();
  for (std::size_t i = 1; i < complexes.size(); ++i) acc = join(acc, complexes[i]);
  return acc;
}

SimplicialComplex cone(const SimplicialComplex& complex, Monomial x, bool require_coprime) {
  require_fits(complex.universe(), x, "cone");
  if (require_coprime && !complex.vertex_mask().coprime(x)) {
    throw PreconditionError("cone apex is not coprime with the faces");
  }
  const Monomial pts[] = {Monomial::one(), x};
  return join(complex, SimplicialComplex::generated_by(complex.universe_ptr(), pts));
}

SimplicialComplex suspension(const SimplicialComplex& complex, Monomial x, Monomial y,
                             bool require_coprime) {
  require_fits(complex.universe(), x, "suspension");
  require_fits(complex.universe(), y, "suspension");
  if (require_coprime) {
    if (x == y || !x.coprime(y) || !complex.vertex_mask().coprime(x.lcm(y))) {
      throw PreconditionError("suspension points must be distinct and coprime with the faces");
    }
  }
  std::vector<Monomial> pts{Monomial::one(), x, y};
  // {1, x, y} is downward closed only when x and y are variables or 1; build
  // the join directly from the lcm definition instead.
  FaceSet out;
  for (Monomial m : complex.faces()) {
    for (Monomial p : pts) out.insert(m.lcm(p));
  }
  return SimplicialComplex::from_faces(complex.universe_ptr(),
                                       std::vector<Monomial>(out.begin(), out.end()));
}

bool is_cone_with_apex(const SimplicialComplex& complex, std::size_t v) {
  if (v >= complex.universe().size()) throw UniverseMismatch("is_cone_with_apex: variable out of range");
  if (complex.is_empty()) return false;
  return std::all_of(complex.faces().begin(), complex.faces().end(),
                     [&](Monomial f) { return complex.contains(f.with_var(v)); });
}

bool decompose_check(const SimplicialComplex& complex, Monomial x) {
  const SimplicialComplex lk = link(complex, x);
  const SimplicialComplex del = deletion(complex, x);
  FaceSet uni;
  for (Monomial m : lk.faces()) {
    uni.insert(m);
    uni.insert(m.lcm(x));
  }
  for (Monomial m : del.faces()) uni.insert(m);
  if (uni.size() != complex.size()) return false;
  return std::all_of(uni.begin(), uni.end(), [&](Monomial m) { return complex.contains(m); });
}

MultigradedPolynomial face_polynomial(const SimplicialComplex& complex) {
  const std::size_t n = complex.universe().size();
  MultigradedPolynomial p(n);
  for (Monomial f : complex.faces()) p.add_term(exponents_of(f, n), 1);
  return p;
}

UnivariatePolynomial face_counts(const SimplicialComplex& complex) {
  UnivariatePolynomial p;
  for (Monomial f : complex.faces()) p.add_to(f.degree(), 1);
  return p;
}

long long reduced_euler(const SimplicialComplex& complex) {
  long long acc = 0;
  for (Monomial f : complex.faces()) acc += (f.degree() % 2 == 0) ? 1 : -1;
  return -acc;
}

CollapseWorkspace::CollapseWorkspace(const SimplicialComplex& start)
    : universe_(start.universe_ptr()), faces_(start.face_set()) {}

CollapseWorkspace::CollapseWorkspace(UniversePtr universe, FaceSet faces)
    : universe_(std::move(universe)), faces_(std::move(faces)) {}

std::string CollapseWorkspace::check(const CollapseStep& step) const {
  const Monomial tau = step.tau;
  const Monomial sigma = step.sigma;
  if (!tau.divides(sigma) || sigma.degree() != tau.degree() + 1) {
    return "sigma is not tau times one variable";
  }
  if (!universe_->fits(sigma)) return "face outside the universe";
  if (!faces_.contains(sigma)) return "sigma is not a face";
  if (!faces_.contains(tau)) return "tau is not a face";
  const Monomial others = universe_->all().without(sigma);
  for (std::size_t v : others.support()) {
    if (faces_.contains(sigma.with_var(v))) return "sigma is not maximal";
    if (faces_.contains(tau.with_var(v))) return "tau has a second coface";
  }
  return {};
}

void CollapseWorkspace::apply(const CollapseStep& step) {
  if (auto why = check(step); !why.empty()) {
    throw InvalidCollapse("invalid elementary collapse (" + universe_->format(step.tau) + ", " +
                          universe_->format(step.sigma) + "): " + why);
  }
  faces_.erase(step.sigma);
  faces_.erase(step.tau);
}

void CollapseWorkspace::undo(const CollapseStep& step) {
  faces_.insert(step.tau);
  faces_.insert(step.sigma);
}

SimplicialComplex CollapseWorkspace::to_complex() const {
  return SimplicialComplex::from_faces(universe_, std::vector<Monomial>(faces_.begin(), faces_.end()));
}

SimplicialComplex apply_collapse(const SimplicialComplex& complex, const CollapseStep& step) {
  CollapseWorkspace ws(complex);
  ws.apply(step);
  return ws.to_complex();
}

CollapseVerdict verify_collapse_sequence(const SimplicialComplex& from,
                                         std::span<const CollapseStep> steps,
                                         const SimplicialComplex& to) {
  CollapseVerdict verdict;
  if (!same_universe(from.universe_ptr(), to.universe_ptr())) {
    return {false, std::size_t{0}, "complexes use different universes"};
  }
  CollapseWorkspace ws(from);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (auto why = ws.check(steps[i]); !why.empty()) {
      return {false, i, why};
    }
    ws.apply(steps[i]);
  }
  if (ws.size() != to.size() ||
      !std::all_of(to.faces().begin(), to.faces().end(),
                   [&](Monomial m) { return ws.contains(m); })) {
    return {false, steps.size(), "sequence does not end at the target complex"};
  }
  return verdict;
}

SimplicialComplex cross_polytope_boundary(
    UniversePtr universe, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t n = universe->size();
  Monomial seen_a;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw UniverseMismatch("cross_polytope_boundary: variable out of range");
    if (a == b) throw PreconditionError("cross_polytope_boundary: a_i equals b_i");
    if (seen_a.has(a)) throw PreconditionError("cross_polytope_boundary: repeated a_i");
    seen_a = seen_a.with_var(a);
    if (seen_a.has(b)) throw PreconditionError("cross_polytope_boundary: b_i equals some a_j, j <= i");
  }
  FaceSet acc{Monomial::one()};
  for (const auto& [a, b] : pairs) {
    FaceSet next;
    for (Monomial m : acc) {
      next.insert(m);
      next.insert(m.with_var(a));
      next.insert(m.with_var(b));
    }
    acc = std::move(next);
  }
  return SimplicialComplex::from_faces(std::move(universe),
                                       std::vector<Monomial>(acc.begin(), acc.end()));
}

SimplicialComplex simplex(UniversePtr universe, Monomial vertices) {
  const Monomial facets[] = {vertices};
  return SimplicialComplex::generated_by(std::move(universe), facets);
}

SimplicialComplex simplex_boundary(UniversePtr universe, Monomial vertices) {
  std::vector<Monomial> facets;
  for (std::size_t v : vertices.support()) facets.push_back(vertices.without_var(v));
  if (vertices.is_one()) return SimplicialComplex(std::move(universe));
  return SimplicialComplex::generated_by(std::move(universe), facets);
}

SimplicialComplex sphere_minus_one(UniversePtr universe) {
  return SimplicialComplex::from_faces(std::move(universe), {Monomial::one()});
}

}  // namespace monotop
