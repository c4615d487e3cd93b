#pragma once

#include "polytrope/covector.hpp"
#include "polytrope/weight_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace polytrope {

// A polytrope: a closed weight matrix together with its tropical vertices.
// Row i of the vertex matrix is v_i with v_ii = 0 and v_ik = c[k][i]; the
// basic type with respect to this ordering is (0, 1, ..., d).
class Polytrope {
 public:
  explicit Polytrope(ClosedWeightMatrix matrix);

  int dim() const { return matrix_.dim(); }
  const ClosedWeightMatrix& matrix() const { return matrix_; }
  const std::vector<TropPoint>& vertices() const { return vertices_; }
  PointConfig vertex_config() const { return PointConfig(dim(), vertices_); }

 private:
  ClosedWeightMatrix matrix_;
  std::vector<TropPoint> vertices_;
};

// Thrown when an inequality system has no polytrope: carries the
// infeasible/unbounded witness.
struct ClosureError : std::runtime_error {
  ClosureError(std::string msg, ClosureStatus s)
      : std::runtime_error(std::move(msg)), status(std::move(s)) {}
  ClosureStatus status;
};

// Kleene closure followed by vertex extraction.  Throws ClosureError on an
// infeasible or unbounded system.
Polytrope polytrope_from_inequalities(const WeightMatrix& c);

// Inverse of the vertex extraction: c[k][i] = v_ik after normalizing each
// row to a zero diagonal.  Rejects configurations whose matrix violates the
// closure invariants (not the vertex set of a polytrope in basic position).
ClosedWeightMatrix matrix_from_vertices(const PointConfig& v);

// All ordinary vertices of the polytrope, deduplicated, in lexicographic
// order of their dehomogenized coordinates.
std::vector<TropPoint> pseudo_vertices(const Polytrope& p);

struct OrdinaryFacet {
  int i;
  int j;
  Rational offset;  // the inequality x_i - x_j <= offset supports a facet
};

std::vector<OrdinaryFacet> ordinary_facets(const Polytrope& p);
std::vector<OrdinaryFacet> ordinary_facets(const Polytrope& p, const std::vector<TropPoint>& pvs);

// (f_0, ..., f_{d-1}) of the ordinary polytope; d <= 3 only.
std::vector<long long> f_vector(const Polytrope& p);

// Every pseudo-vertex lies on exactly d ordinary facets; d <= 3 only.
bool is_simple(const Polytrope& p);

// Translate by t (dehomogenized): c'[i][j] = c[i][j] + t_i - t_j with t_0 = 0.
Polytrope translated(const Polytrope& p, const std::vector<Rational>& t);

// Relabel coordinates: c'[pi(i)][pi(j)] = c[i][j].
Polytrope coordinate_permuted(const Polytrope& p, const std::vector<int>& pi);

// Exact rank of a set of rational vectors (helper shared with the facet and
// edge tests).
int rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace polytrope
