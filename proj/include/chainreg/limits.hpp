#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

namespace chainreg {

/// Resource guards shared by the expensive computations.
struct ResourceLimits {
  /// Maximum number of lcm-lattice elements visited by betti_table.
  std::size_t lattice_cap = std::size_t{1} << 20;
  /// Maximum |G(J)| for subset enumeration (Taylor complex, subset lcms).
  std::size_t subset_generator_cap = 20;
  /// Maximum number of vertices of a single upper Koszul complex.
  int vertex_cap = 24;
  /// Maximum number of candidate monomials hilbert_count may enumerate.
  std::uint64_t enumeration_cap = 1'000'000;
  /// Wall-clock budget for one Betti table; zero disables the check.
  std::chrono::milliseconds term_budget{0};
  /// Worker threads for per-multidegree homology; values < 2 run inline.
  unsigned jobs = 1;
};

}  // namespace chainreg
