#pragma once

#include <cstdint>
#include <vector>

#include "chainreg/field.hpp"

namespace chainreg {

/// Face of a complex as a bitmask over positions in the vertex list.
using FaceMask = std::uint64_t;

/// A finite abstract simplicial complex on labelled vertices.
///
/// faces()[d + 1] lists the d-dimensional faces in increasing mask order, so
/// faces()[0] is {empty face} for any nonempty complex. The void complex has
/// no faces at all.
class SimplicialComplex {
 public:
  /// The void complex on no vertices.
  SimplicialComplex() = default;

  /// Closure of the given facets. Throws InvalidArgument for more than 64
  /// vertices or a facet mask outside the vertex list.
  static SimplicialComplex from_facets(std::vector<int> vertices,
                                       const std::vector<FaceMask>& facets);

  /// From an explicit face list; throws InvalidArgument unless the list is
  /// closed under taking subsets.
  static SimplicialComplex from_faces(std::vector<int> vertices,
                                      const std::vector<FaceMask>& faces);

  /// Nerve of a facet cover: one vertex per facet, a face for every set of
  /// facets with a common vertex. Same reduced homology as the complex.
  static SimplicialComplex nerve(const std::vector<FaceMask>& facets);

  const std::vector<int>& vertices() const noexcept { return vertices_; }
  const std::vector<std::vector<FaceMask>>& faces() const noexcept { return faces_; }

  bool is_void() const noexcept { return faces_.empty(); }
  /// Dimension; -1 for {empty face}, -2 for the void complex.
  int dimension() const noexcept { return static_cast<int>(faces_.size()) - 2; }
  std::size_t face_count() const noexcept;
  bool contains(FaceMask face) const;

  /// Vertex labels of a face, in vertex-list order.
  std::vector<int> labels(FaceMask face) const;

 private:
  std::vector<int> vertices_;
  std::vector<std::vector<FaceMask>> faces_;
};

/// Ranks of reduced homology: element k is dim H~_{k-1}, for k-1 from -1 to
/// the dimension. Empty for the void complex.
std::vector<std::uint64_t> homology_ranks(const SimplicialComplex& complex,
                                          const FieldSpec& field);

/// Reduced Euler characteristic, sum over faces of (-1)^dim.
long long reduced_euler_characteristic(const SimplicialComplex& complex);

/// Keeps the inclusion-maximal masks, deduplicated and sorted.
std::vector<FaceMask> maximal_faces(std::vector<FaceMask> faces);

}  // namespace chainreg
