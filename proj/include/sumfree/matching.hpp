#pragma once

#include <utility>
#include <vector>

namespace sumfree {

// Maximum cardinality matching in a general graph (blossom contraction).
// Vertices are 0..n-1.  Returns the matching size; if mate != nullptr it
// receives the partner of each vertex (-1 when unmatched).
int max_matching(int n, const std::vector<std::pair<int, int>>& edges,
                 std::vector<int>* mate = nullptr);

}  // namespace sumfree
