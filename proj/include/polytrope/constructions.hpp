#pragma once

#include "polytrope/polytrope_algebra.hpp"

#include <vector>

namespace polytrope {

// tconv(0, e_1, e_1+e_2, ..., e_1+...+e_d): both a tropical and an ordinary
// simplex; d+1 pseudo-vertices and d+1 ordinary facets.
Polytrope small_simplex(int d);

// The d-pyrope tconv(-e_0, ..., -e_d) = conv([0,1]^d u [-1,0]^d): a cubical
// zonotope attaining the d(d+1) facet bound.
Polytrope pyrope(int d);

// Row i is the i-step right cyclic shift of (0, eps, eps^2, ..., eps^d);
// requires 0 < eps < 1/2.
class EpsilonMatrix {
 public:
  EpsilonMatrix(int dim, Rational eps);

  int dim() const { return dim_; }
  const Rational& eps() const { return eps_; }
  const Rational& at(int i, int j) const;

 private:
  int dim_;
  Rational eps_;
  std::vector<Rational> entries_;
};

EpsilonMatrix epsilon_matrix(int d, const Rational& eps);

// tconv(-e_0 + E_0, ..., -e_d + E_d) for E with entries in [0, 1/2); always
// a polytrope with the generators as tropical vertices.
Polytrope perturbed_pyrope(int d, const std::vector<std::vector<Rational>>& e);
Polytrope perturbed_pyrope(const EpsilonMatrix& e);

// The (n-2)-dimensional associahedron realization from the system
// x_j - x_i >= (i-j)^2, x_1 = 0, x_n = (n-1)^2, projected onto the middle
// coordinates; requires n >= 3.
Polytrope associahedron(int n);

// The five 4x4 matrices of the 20-pseudo-vertex types, verbatim.
std::vector<ClosedWeightMatrix> fixtures_20();

}  // namespace polytrope
