#pragma once

// Internal: shared enumeration of the candidate equality systems behind
// pseudo-vertex extraction.  A pseudo-vertex is the unique solution of d
// tight inequalities x_i - x_j = c_ij whose pairs form a spanning tree of
// the coordinate set {0, ..., d}.

#include <utility>
#include <vector>

namespace polytrope::detail {

struct TreeStep {
  int node;        // coordinate being assigned
  int parent;      // coordinate already known
  int pair_index;  // index into SpanningData::pairs
  bool forward;    // true: x[node] = x[parent] + c[pair]; false: minus
};

struct SpanningData {
  int dim = 0;
  std::vector<std::pair<int, int>> pairs;     // all ordered (i, j), i != j
  std::vector<std::vector<TreeStep>> trees;   // solve program per spanning tree
};

// Cached per dimension; safe for concurrent use after first call returns.
const SpanningData& spanning_data(int dim);

}  // namespace polytrope::detail
