#include "chainreg/simplicial.hpp"

#include <algorithm>
#include <bit>

#include "chainreg/error.hpp"

namespace chainreg {

namespace {

int top_bit(FaceMask m) { return 63 - std::countl_zero(m); }

// Level-by-level enumeration: each face is extended only by vertices above
// its largest one, so every face appears exactly once.
template <class Admits>
std::vector<std::vector<FaceMask>> enumerate(int vertex_count, Admits admits) {
  std::vector<std::vector<FaceMask>> levels;
  levels.push_back({0});
  for (;;) {
    std::vector<FaceMask> next;
    for (FaceMask f : levels.back()) {
      int start = f ? top_bit(f) + 1 : 0;
      for (int v = start; v < vertex_count; ++v) {
        FaceMask g = f | (FaceMask{1} << v);
        if (admits(g)) next.push_back(g);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

std::vector<FaceMask> maximal_faces(std::vector<FaceMask> faces) {
  std::sort(faces.begin(), faces.end(), [](FaceMask a, FaceMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<FaceMask> kept;
  for (FaceMask f : faces) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [f](FaceMask g) { return (f & ~g) == 0; });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<int> vertices,
                                                 const std::vector<FaceMask>& facets) {
  if (vertices.size() > 64) throw InvalidArgument("more than 64 vertices");
  const FaceMask all = vertices.size() == 64 ? ~FaceMask{0}
                                             : (FaceMask{1} << vertices.size()) - 1;
  for (FaceMask f : facets) {
    if (f & ~all) throw InvalidArgument("facet outside the vertex set");
  }
  SimplicialComplex c;
  c.vertices_ = std::move(vertices);
  if (facets.empty()) return c;
  const std::vector<FaceMask> top = maximal_faces(facets);
  c.faces_ = enumerate(static_cast<int>(c.vertices_.size()), [&](FaceMask g) {
    return std::any_of(top.begin(), top.end(),
                       [g](FaceMask t) { return (g & ~t) == 0; });
  });
  return c;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<int> vertices,
                                                const std::vector<FaceMask>& faces) {
  std::vector<FaceMask> sorted = faces;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (FaceMask f : sorted) {
    for (FaceMask rest = f; rest; rest &= rest - 1) {
      FaceMask sub = f & ~(rest & -rest);
      if (!std::binary_search(sorted.begin(), sorted.end(), sub)) {
        throw InvalidArgument("face list is not closed under subsets");
      }
    }
  }
  SimplicialComplex c = from_facets(std::move(vertices), sorted);
  if (c.face_count() != sorted.size()) {
    throw InvalidArgument("face list is not closed under subsets");
  }
  return c;
}

SimplicialComplex SimplicialComplex::nerve(const std::vector<FaceMask>& facets) {
  if (facets.size() > 64) throw InvalidArgument("nerve of more than 64 facets");
  SimplicialComplex c;
  for (std::size_t i = 0; i < facets.size(); ++i) c.vertices_.push_back(static_cast<int>(i));
  if (facets.empty()) return c;
  c.faces_ = enumerate(static_cast<int>(facets.size()), [&](FaceMask g) {
    FaceMask common = ~FaceMask{0};
    for (FaceMask rest = g; rest; rest &= rest - 1) {
      common &= facets[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    return common != 0;
  });
  return c;
}

std::size_t SimplicialComplex::face_count() const noexcept {
  std::size_t n = 0;
  for (const auto& level : faces_) n += level.size();
  return n;
}

bool SimplicialComplex::contains(FaceMask face) const {
  std::size_t level = static_cast<std::size_t>(std::popcount(face));
  if (level >= faces_.size()) return false;
  return std::binary_search(faces_[level].begin(), faces_[level].end(), face);
}

std::vector<int> SimplicialComplex::labels(FaceMask face) const {
  std::vector<int> out;
  for (FaceMask rest = face; rest; rest &= rest - 1) {
    out.push_back(vertices_[static_cast<std::size_t>(std::countr_zero(rest))]);
  }
  return out;
}

std::vector<std::uint64_t> homology_ranks(const SimplicialComplex& complex,
                                          const FieldSpec& field) {
  const auto& faces = complex.faces();
  const std::size_t levels = faces.size();
  if (levels == 0) return {};

  // boundary_rank[k] = rank of the boundary map from level k to level k - 1.
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  const std::uint32_t minus_one = field.characteristic() - 1;
  for (std::size_t k = 1; k < levels; ++k) {
    const auto& rows = faces[k];
    const auto& cols = faces[k - 1];
    DenseMatrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int sign = 0;
      for (FaceMask rest = rows[r]; rest; rest &= rest - 1, ++sign) {
        FaceMask facet = rows[r] & ~(rest & -rest);
        auto it = std::lower_bound(cols.begin(), cols.end(), facet);
        m.at(r, static_cast<std::size_t>(it - cols.begin())) =
            (sign % 2 == 0) ? 1 : minus_one;
      }
    }
    boundary_rank[k] = rank(std::move(m), field);
  }

  std::vector<std::uint64_t> ranks(levels, 0);
  for (std::size_t k = 0; k < levels; ++k) {
    ranks[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  }
  return ranks;
}

long long reduced_euler_characteristic(const SimplicialComplex& complex) {
  long long chi = 0;
  for (std::size_t k = 0; k < complex.faces().size(); ++k) {
    long long n = static_cast<long long>(complex.faces()[k].size());
    chi += (k % 2 == 0) ? -n : n;
  }
  return chi;
}

}  // namespace chainreg
