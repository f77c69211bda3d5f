#pragma once

#include <vector>

#include "epa/graph.hpp"

namespace epa::named {

Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,leaves} with the center at id 0.
Graph star(int leaves);
Graph complete_multipartite(const std::vector<int>& part_sizes);
/// Triangle {0,1,2} with pendant 3 attached to 2.
Graph paw();
Graph petersen();

}  // namespace epa::named
