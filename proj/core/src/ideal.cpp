#include "monotop/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace monotop {

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  out.reserve(degree());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

Monomial lcm_set(std::span<const Monomial> ms) {
  Monomial out;
  for (Monomial m : ms) out = out.lcm(m);
  return out;
}

VariableUniverse::VariableUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw PreconditionError("at most 64 variables are supported, got " +
                            std::to_string(names_.size()));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw PreconditionError("empty variable name");
    if (!index_.emplace(names_[i], i).second) {
      throw PreconditionError("duplicate variable name '" + names_[i] + "'");
    }
  }
}

UniversePtr VariableUniverse::numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names));
}

UniversePtr VariableUniverse::make(std::vector<std::string> names) {
  return std::make_shared<const VariableUniverse>(std::move(names));
}

std::optional<std::size_t> VariableUniverse::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableUniverse::require_index(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) throw UniverseMismatch("unknown variable '" + name + "'");
  return *idx;
}

Monomial VariableUniverse::monomial(std::span<const std::string> names) const {
  Monomial m;
  for (const auto& n : names) m = m.with_var(require_index(n));
  return m;
}

std::string VariableUniverse::format(Monomial m, const std::string& sep) const {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i : m.support()) {
    if (!out.empty()) out += sep;
    out += i < names_.size() ? names_[i] : ("?" + std::to_string(i));
  }
  return out;
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b, const char* where) {
  if (!same_universe(a, b)) {
    throw UniverseMismatch(std::string(where) + ": operands use different variable universes");
  }
}

void require_fits(const VariableUniverse& u, Monomial m, const char* where) {
  if (!u.fits(m)) {
    throw UniverseMismatch(std::string(where) + ": monomial uses a variable outside the universe");
  }
}

std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), graded_lex_less);
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  out.reserve(ms.size());
  for (Monomial m : ms) {
    const bool redundant =
        std::any_of(out.begin(), out.end(), [m](Monomial g) { return g.divides(m); });
    if (!redundant) out.push_back(m);
  }
  // Keeping the graded order: `ms` was sorted, and `out` is a subsequence.
  return out;
}

MonomialIdeal::MonomialIdeal() : universe_(VariableUniverse::make({})) {}

MonomialIdeal::MonomialIdeal(UniversePtr universe, std::vector<Monomial> generators)
    : universe_(std::move(universe)) {
  if (!universe_) throw PreconditionError("ideal requires a variable universe");
  for (Monomial g : generators) require_fits(*universe_, g, "MonomialIdeal");
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(Monomial m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [m](Monomial g) { return g.divides(m); });
}

Monomial MonomialIdeal::variables_in_ideal() const {
  if (is_unit()) return universe_->all();
  Monomial out;
  for (Monomial g : generators_) {
    if (g.degree() == 1) out = out.lcm(g);
  }
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (Monomial g : generators_) {
    if (!first) os << ", ";
    first = false;
    os << universe_->format(g, "*");
  }
  os << ')';
  return os.str();
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return same_universe(a.universe_, b.universe_) && a.generators_ == b.generators_;
}

bool contains(const MonomialIdeal& ideal, Monomial m) {
  require_fits(ideal.universe(), m, "contains");
  return ideal.contains(m);
}

MonomialIdeal colon(const MonomialIdeal& ideal, Monomial x) {
  require_fits(ideal.universe(), x, "colon");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size() + x.degree());
  for (Monomial g : ideal.generators()) gens.push_back(g.without(x));
  for (std::size_t v : x.support()) gens.push_back(Monomial::variable(v));
  return {ideal.universe_ptr(), std::move(gens)};
}

MonomialIdeal add(const MonomialIdeal& ideal, Monomial x) {
  require_fits(ideal.universe(), x, "add");
  std::vector<Monomial> gens = ideal.generators();
  gens.push_back(x);
  return {ideal.universe_ptr(), std::move(gens)};
}

Monomial lift_monomial(Monomial m, std::span<const std::size_t> kept) {
  Monomial out;
  for (std::size_t j : m.support()) out = out.with_var(kept[j]);
  return out;
}

Monomial restrict_monomial(Monomial m, std::span<const std::size_t> kept) {
  Monomial out;
  for (std::size_t j = 0; j < kept.size(); ++j) {
    if (m.has(kept[j])) out = out.with_var(j);
  }
  return out;
}

Monomial permute(Monomial m, std::span<const std::size_t> perm) {
  Monomial out;
  for (std::size_t i : m.support()) out = out.with_var(perm[i]);
  return out;
}

CanonicalIdeal canonicalize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_variables();
  if (ideal.is_unit()) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return {ideal, std::move(all)};
  }
  const Monomial dropped = ideal.variables_in_ideal();
  if (dropped.is_one()) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return {ideal, std::move(all)};
  }
  std::vector<std::size_t> kept;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (!dropped.has(i)) {
      kept.push_back(i);
      names.push_back(ideal.universe().name(i));
    }
  }
  std::vector<Monomial> gens;
  for (Monomial g : ideal.generators()) {
    if (g.degree() == 1) continue;
    gens.push_back(restrict_monomial(g, kept));
  }
  return {MonomialIdeal(VariableUniverse::make(std::move(names)), std::move(gens)),
          std::move(kept)};
}

}  // namespace monotop
