#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "monotop/errors.hpp"

namespace monotop {

inline constexpr std::size_t kMaxVariables = 64;

/// A square-free monomial over at most 64 variables, stored as its support
/// bit set. Bit i set means variable i divides the monomial. The empty
/// support is the monomial 1, which doubles as the empty face.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

  static constexpr Monomial one() { return Monomial{}; }
  static constexpr Monomial variable(std::size_t i) {
    return Monomial{std::uint64_t{1} << i};
  }
  /// Product of the first n variables.
  static constexpr Monomial first(std::size_t n) {
    return Monomial{n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t degree() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool is_one() const { return bits_ == 0; }
  constexpr bool has(std::size_t i) const { return (bits_ >> i) & 1U; }

  constexpr bool divides(Monomial other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr Monomial lcm(Monomial other) const { return Monomial{bits_ | other.bits_}; }
  constexpr Monomial gcd(Monomial other) const { return Monomial{bits_ & other.bits_}; }
  /// this / gcd(this, other)
  constexpr Monomial without(Monomial other) const {
    return Monomial{bits_ & ~other.bits_};
  }
  constexpr Monomial with_var(std::size_t i) const {
    return Monomial{bits_ | (std::uint64_t{1} << i)};
  }
  constexpr Monomial without_var(std::size_t i) const {
    return Monomial{bits_ & ~(std::uint64_t{1} << i)};
  }
  constexpr bool coprime(Monomial other) const { return (bits_ & other.bits_) == 0; }

  /// Variable indices of the support in increasing order.
  std::vector<std::size_t> support() const;

  friend constexpr bool operator==(Monomial, Monomial) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Degree first, then lexicographic order of the increasing index lists.
/// This is the order used for generator lists and complex dumps.
constexpr bool graded_lex_less(Monomial a, Monomial b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

struct GradedLexLess {
  constexpr bool operator()(Monomial a, Monomial b) const { return graded_lex_less(a, b); }
};

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept {
    std::uint64_t x = m.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

inline bool divides(Monomial m, Monomial m2) { return m.divides(m2); }

/// lcm of a collection; the empty collection gives 1.
Monomial lcm_set(std::span<const Monomial> ms);

/// Ordered, duplicate-free variable names. The order is fixed and induces the
/// orientation signs of simplicial chains.
class VariableUniverse {
 public:
  VariableUniverse() = default;
  explicit VariableUniverse(std::vector<std::string> names);

  /// x1, ..., xn
  static std::shared_ptr<const VariableUniverse> numbered(std::size_t n,
                                                          const std::string& prefix = "x");
  static std::shared_ptr<const VariableUniverse> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;

  /// Every variable of the universe multiplied together.
  Monomial all() const { return Monomial::first(size()); }
  bool fits(Monomial m) const { return m.divides(all()); }

  Monomial monomial(std::span<const std::string> names) const;
  std::string format(Monomial m, const std::string& sep = " ") const;

  friend bool operator==(const VariableUniverse& a, const VariableUniverse& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

bool same_universe(const UniversePtr& a, const UniversePtr& b);
void require_same_universe(const UniversePtr& a, const UniversePtr& b, const char* where);
void require_fits(const VariableUniverse& u, Monomial m, const char* where);

/// A monomial ideal containing every square x_i^2, stored by its minimal
/// square-free generators B. The squares are implicit.
///
/// generators == {} is the zero ideal part (R(I) is the full simplex);
/// generators == {1} is the unit ideal (R(I) is the empty complex).
class MonomialIdeal {
 public:
  /// Zero ideal in no variables.
  MonomialIdeal();
  /// Minimalizes `generators` into an antichain sorted by graded_lex_less.
  MonomialIdeal(UniversePtr universe, std::vector<Monomial> generators);

  static MonomialIdeal zero(UniversePtr universe) { return {std::move(universe), {}}; }
  static MonomialIdeal unit(UniversePtr universe) {
    return {std::move(universe), {Monomial::one()}};
  }

  const VariableUniverse& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::size_t num_variables() const { return universe_->size(); }
  const std::vector<Monomial>& generators() const { return generators_; }

  bool is_unit() const { return generators_.size() == 1 && generators_.front().is_one(); }
  bool is_zero() const { return generators_.empty(); }

  /// True iff some generator divides m. Squares never divide a square-free m.
  bool contains(Monomial m) const;
  /// x_i belongs to the ideal (a degree-1 generator or the unit ideal).
  bool contains_variable(std::size_t i) const { return contains(Monomial::variable(i)); }
  /// Variables lying in the ideal, as one monomial.
  Monomial variables_in_ideal() const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  UniversePtr universe_;
  std::vector<Monomial> generators_;
};

/// Antichain of the divisibility-minimal elements, sorted by graded_lex_less.
std::vector<Monomial> minimalize(std::vector<Monomial> ms);

bool contains(const MonomialIdeal& ideal, Monomial m);

/// (I : x) for a square-free x. Uses x_v^2 : x_v = x_v for the implicit squares.
MonomialIdeal colon(const MonomialIdeal& ideal, Monomial x);

/// (I, x)
MonomialIdeal add(const MonomialIdeal& ideal, Monomial x);

/// Result of dropping every variable that is itself a generator.
struct CanonicalIdeal {
  MonomialIdeal ideal;
  /// kept[j] is the index, in the original universe, of new variable j.
  std::vector<std::size_t> kept;
};

/// Removes every variable appearing as a degree-1 generator from the universe
/// and from B. The associated complex is unchanged. The unit ideal keeps its
/// universe.
CanonicalIdeal canonicalize(const MonomialIdeal& ideal);

/// Re-expresses a monomial over a sub-universe (kept indices) in the parent.
Monomial lift_monomial(Monomial m, std::span<const std::size_t> kept);
/// Inverse of lift_monomial; `m` must be supported on the kept variables.
Monomial restrict_monomial(Monomial m, std::span<const std::size_t> kept);

/// Applies a variable permutation: variable i goes to perm[i].
Monomial permute(Monomial m, std::span<const std::size_t> perm);

}  // namespace monotop
