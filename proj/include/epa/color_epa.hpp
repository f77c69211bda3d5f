#pragma once

#include <functional>
#include <string>
#include <vector>

#include "epa/graph.hpp"

namespace epa {

struct ColoringSol {
  std::vector<int> color;  // 1..colors_used
  int colors_used = 0;
  std::string trace;
};

/// Attempts a coloring with colors 0..c-1; the result may be invalid on
/// graphs outside the class and is checked by the caller.
struct ClassColoringOracle {
  std::string name;
  int c = 0;
  std::function<std::vector<int>(const Graph&)> attempt;

  static ClassColoringOracle bipartite();
  /// Planar graphs are 5-degenerate; this gives c = 6 rather than 4.
  static ClassColoringOracle degeneracy_six();
};

ColoringSol color_with_class_oracle(const Graph& g, const ClassColoringOracle& oracle);
ColoringSol color_degeneracy(const Graph& g);
ColoringSol color_greedy_mis(const Graph& g);
ColoringSol color_p3k1free(const Graph& g);

/// Complement of n triangles x_i y_i z_i chained by edges y_i x_{i+1}, labeled
/// so that color_greedy_mis uses 2n - 1 colors; chi is n.
Graph fig6_instance(int n);

}  // namespace epa
