#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chromatic_reduce.hpp"
#include "cube.hpp"
#include "graph.hpp"

namespace chromkh {

inline constexpr int kDefaultEdgeLimit = 24;

/// Cube whose coordinate e, when set, joins the endpoints of edge e.
inline CubeSpec chromatic_cube(const SimpleGraph& g, int m) {
  if (m < 2) throw std::invalid_argument("algebra A_m needs m >= 2");
  if (g.edge_count() > cube_dimension_limit(kDefaultEdgeLimit))
    throw ResourceError("graph has " + std::to_string(g.edge_count()) + " edges; limit is " +
                        std::to_string(cube_dimension_limit(kDefaultEdgeLimit)));
  CubeSpec spec;
  spec.elements = g.vertex_count();
  spec.m = m;
  spec.allow_split = false;
  spec.allow_identity = true;
  spec.grading = CubeSpec::Grading::LabelSum;
  for (const Edge& e : g.edges()) spec.joins.push_back({std::vector<std::pair<int, int>>{}, {{e.a, e.b}}});
  return spec;
}

/// H_{A_m}(G) straight from the full cube, keyed (i, j).
inline BigradedGroups chromatic_homology_cube(const SimpleGraph& g, int m, const CubeOptions& opt = {}) {
  return cube_homology(chromatic_cube(g, m), opt);
}

/// H_{A_m}(G) over the integers, keyed (i, j).
inline BigradedGroups chromatic_homology(const SimpleGraph& g, int m, const CubeOptions& opt = {}) {
  if (g.edge_count() > cube_dimension_limit(kDefaultEdgeLimit))
    throw ResourceError("graph has " + std::to_string(g.edge_count()) + " edges; limit is " +
                        std::to_string(cube_dimension_limit(kDefaultEdgeLimit)));
  return chromatic_homology_reduced(g, m, opt);
}

/// All edge subsets with their component counts, ordered by size then colex
/// rank (the cube's basis order).
inline std::vector<std::pair<std::uint32_t, int>> enumerate_states(const SimpleGraph& g) {
  CubeSpec spec = chromatic_cube(g, 2);
  std::vector<std::pair<std::uint32_t, int>> out;
  for (int i = 0; i <= spec.dimension(); ++i) {
    auto L = detail::build_level(spec, i);
    for (std::size_t s = 0; s < L.states.size(); ++s) out.push_back({L.states[s], L.k[s]});
  }
  return out;
}

/// One graded piece C^{i,j} with its outgoing differential.
struct GradedChainSlice {
  int i = 0;
  int j = 0;
  /// (edge subset, labels per component) for each basis element.
  std::vector<std::pair<std::uint32_t, std::vector<int>>> basis;
  SparseMatrix d_out;  ///< rows: C^{i+1,j}
};

inline GradedChainSlice chromatic_complex(const SimpleGraph& g, int m, int i, int j) {
  CubeSpec spec = chromatic_cube(g, m);
  GradedChainSlice slice;
  slice.i = i;
  slice.j = j;
  if (i < 0 || i > spec.dimension()) return slice;
  detail::LabelTable lt(m, spec.elements);
  auto src = detail::build_level(spec, i), dst = detail::build_level(spec, i + 1);
  auto so = detail::block_offsets(spec, src, lt, j), dof = detail::block_offsets(spec, dst, lt, j);
  for (std::size_t s = 0; s < src.states.size(); ++s) {
    int t = spec.label_sum(src.k[s], i, j);
    if (t < 0) continue;
    const auto& labs = lt.list(src.k[s], t);
    const int k = src.k[s];
    for (std::size_t p = 0; k && p < labs.size(); p += static_cast<std::size_t>(k))
      slice.basis.push_back({src.states[s], std::vector<int>(labs.begin() + static_cast<long>(p),
                                                             labs.begin() + static_cast<long>(p) + k)});
  }
  if (i + 1 <= spec.dimension()) slice.d_out = detail::differential(spec, src, dst, lt, j, so, dof);
  return slice;
}

}  // namespace chromkh
