#pragma once

#include <string>
#include <utility>
#include <vector>

#include "link_diagram.hpp"

namespace chromkh {

using NamedDiagram = std::pair<std::string, LinkDiagram>;

namespace detail {

inline PlaneGraph plane_cycle(int n) {
  PlaneGraph g;
  for (int k = 0; k < n; ++k) g.add_vertex();
  for (int k = 0; k < n; ++k) {
    int e = g.add_edge(k, (k + 1) % n);
    g.rotation[k].push_back(2 * e);
    g.rotation[(k + 1) % n].push_back(2 * e + 1);
  }
  return g;
}

/// Adds a pendant edge at vertex v: a Reidemeister I curl in the diagram.
inline PlaneGraph with_pendant(PlaneGraph g, int v) {
  int w = g.add_vertex();
  int e = g.add_edge(v, w);
  g.rotation[v].push_back(2 * e);
  g.rotation[w].push_back(2 * e + 1);
  return g;
}

}  // namespace detail

/// Diagrams used by the sanity sweeps, at most ten crossings each.
/// Trefoil and figure-eight appear under several codes.
inline std::vector<NamedDiagram> fixture_diagrams() {
  std::vector<NamedDiagram> d;
  d.push_back({"unknot", parse_pd("O")});
  d.push_back({"unknot-curl", diagram_from_plane_graph(detail::with_pendant(detail::plane_cycle(1), 0))});
  d.push_back({"hopf", torus_diagram(2)});
  d.push_back({"trefoil-pd", parse_pd("X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]")});
  d.push_back({"trefoil-mirror-torus", mirror(torus_diagram(3))});
  d.push_back({"trefoil-torus", torus_diagram(3)});
  d.push_back({"trefoil-curl", diagram_from_plane_graph(detail::with_pendant(detail::plane_cycle(3), 0))});
  d.push_back({"figure8-pd", parse_pd("X[4,2,5,1]\nX[8,6,1,5]\nX[6,3,7,4]\nX[2,7,3,8]")});
  d.push_back({"figure8-conway", conway_diagram({2, 2})});
  d.push_back({"figure8-mirror", mirror(conway_diagram({2, 2}))});
  d.push_back({"torus-2-4", torus_diagram(4)});
  d.push_back({"torus-2-5", torus_diagram(5)});
  d.push_back({"torus-2-6", torus_diagram(6)});
  d.push_back({"pretzel-3-2-3", pretzel_diagram({3, 2, 3})});
  d.push_back({"pretzel-2-2-2", pretzel_diagram({2, 2, 2})});
  d.push_back({"pretzel-3-3-3", pretzel_diagram({3, 3, 3})});
  d.push_back({"pretzel-2-2-4", pretzel_diagram({2, 2, 4})});
  d.push_back({"rational-3-4", rational_diagram(3, 4)});
  d.push_back({"rational-4-4", rational_diagram(4, 4)});
  d.push_back({"conway-3-2", conway_diagram({3, 2})});
  d.push_back({"conway-2-1-2", conway_diagram({2, 1, 2})});
  return d;
}

/// Fixture names that denote the same link (Kh must agree).
inline std::vector<std::pair<std::string, std::string>> equivalent_fixture_pairs() {
  return {{"trefoil-pd", "trefoil-mirror-torus"},
          {"trefoil-torus", "trefoil-curl"},
          {"figure8-pd", "figure8-conway"},
          {"figure8-conway", "figure8-mirror"},
          {"unknot", "unknot-curl"}};
}

}  // namespace chromkh
