#include "monotop/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace monotop {

BigInt Chain::coefficient(Monomial face) const {
  auto it = terms_.find(face);
  return it == terms_.end() ? BigInt{0} : it->second;
}

void Chain::add(Monomial face, const BigInt& c) {
  if (static_cast<int>(face.degree()) != dimension_ + 1) {
    throw PreconditionError("chain face has the wrong degree");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(face, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain boundary(const Chain& chain, const SimplicialComplex& complex) {
  Chain out(chain.dimension() - 1);
  for (const auto& [face, c] : chain.terms()) {
    if (!complex.contains(face)) {
      throw PreconditionError("chain face " + complex.universe().format(face) +
                              " is not in the complex");
    }
    if (face.is_one()) continue;  // nothing below the empty face
    int sign = 1;
    for (std::size_t v : face.support()) {
      out.add(face.without_var(v), sign > 0 ? c : BigInt{-c});
      sign = -sign;
    }
  }
  return out;
}

bool is_cycle(const Chain& chain, const SimplicialComplex& complex) {
  return boundary(chain, complex).is_zero();
}

namespace {

using FaceIndex = std::unordered_map<Monomial, std::uint32_t, MonomialHash>;

FaceIndex index_faces(const std::vector<Monomial>& faces) {
  FaceIndex idx;
  idx.reserve(faces.size());
  for (std::uint32_t i = 0; i < faces.size(); ++i) idx.emplace(faces[i], i);
  return idx;
}

SparseIntMatrix build_boundary(const std::vector<Monomial>& lower,
                               const std::vector<Monomial>& upper) {
  const FaceIndex rows = index_faces(lower);
  SparseIntMatrix m(lower.size(), upper.size());
  for (std::size_t j = 0; j < upper.size(); ++j) {
    int sign = 1;
    for (std::size_t v : upper[j].support()) {
      m.set(rows.at(upper[j].without_var(v)), j, sign);
      sign = -sign;
    }
  }
  return m;
}

std::vector<std::vector<Monomial>> faces_by_degree(const SimplicialComplex& complex) {
  std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(complex.max_degree() + 2));
  for (Monomial f : complex.faces()) out[f.degree()].push_back(f);
  return out;
}

}  // namespace

SparseIntMatrix boundary_matrix(const SimplicialComplex& complex, std::size_t face_degree) {
  if (face_degree == 0) throw PreconditionError("boundary_matrix needs face_degree >= 1");
  return build_boundary(complex.faces_of_degree(face_degree - 1),
                        complex.faces_of_degree(face_degree));
}

const HomologyGroup* HomologyProfile::find(int degree) const {
  for (const auto& g : groups) {
    if (g.degree == degree) return &g;
  }
  return nullptr;
}

std::size_t HomologyProfile::rank(int degree) const {
  const auto* g = find(degree);
  return g ? g->rank : 0;
}

bool HomologyProfile::is_zero() const {
  return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.is_zero(); });
}

bool HomologyProfile::is_sphere(int degree) const {
  return std::all_of(groups.begin(), groups.end(), [degree](const HomologyGroup& g) {
    return g.degree == degree ? (g.rank == 1 && g.torsion.empty()) : g.is_zero();
  }) && find(degree) != nullptr;
}

long long HomologyProfile::euler() const {
  long long acc = 0;
  for (const auto& g : groups) {
    const auto r = static_cast<long long>(g.rank);
    acc += (g.degree % 2 == 0) ? r : -r;
  }
  return acc;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex) {
  HomologyProfile profile;
  if (complex.is_empty()) return profile;
  const auto by_degree = faces_by_degree(complex);
  const std::size_t top = by_degree.size() - 1;  // one past the largest face degree
  // smith[d] describes the boundary from degree d to degree d - 1.
  std::vector<SmithForm> smith(top + 1);
  for (std::size_t d = 1; d < top; ++d) {
    smith[d] = smith_normal_form(build_boundary(by_degree[d - 1], by_degree[d]));
  }
  for (std::size_t d = 0; d < top; ++d) {
    HomologyGroup g;
    g.degree = static_cast<int>(d) - 1;
    g.rank = by_degree[d].size() - smith[d].rank - smith[d + 1].rank;
    g.torsion = smith[d + 1].torsion();
    profile.groups.push_back(std::move(g));
  }
  return profile;
}

HomologySize h_and_hd(const HomologyProfile& profile) {
  HomologySize out;
  for (const auto& g : profile.groups) {
    out.h_free += g.rank;
    out.h_inclusive += g.rank + g.torsion.size();
    if (!g.is_zero()) out.hd = g.degree;
  }
  return out;
}

bool generates_top_class(const Chain& z, const SimplicialComplex& complex, int k) {
  const HomologyProfile profile = reduced_homology(complex);
  if (!profile.is_sphere(k)) {
    throw PreconditionError("generator check requires reduced homology Z in degree " +
                            std::to_string(k) + " and zero elsewhere");
  }
  if (z.dimension() != k) return false;
  if (!is_cycle(z, complex)) return false;
  const auto lower = complex.faces_of_degree(static_cast<std::size_t>(k + 1));
  const auto upper = complex.faces_of_degree(static_cast<std::size_t>(k + 2));
  const FaceIndex idx = index_faces(lower);
  std::vector<BigInt> coords(lower.size(), 0);
  for (const auto& [face, c] : z.terms()) coords[idx.at(face)] = c;
  const CokernelImage image = cokernel_image(build_boundary(lower, upper), coords);
  return image.free_content() == 1;
}

}  // namespace monotop
