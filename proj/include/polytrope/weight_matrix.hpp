#pragma once

#include "polytrope/trop_core.hpp"

#include <variant>
#include <vector>

namespace polytrope {

// Inequality offsets x_i - x_j <= c[i][j] over coordinates {0, ..., d} with
// x_0 = 0 after dehomogenization.  Entries may be +inf (constraint absent).
class WeightMatrix {
 public:
  explicit WeightMatrix(int dim);
  WeightMatrix(int dim, std::vector<TropScalar> entries);

  int dim() const { return dim_; }
  int size() const { return dim_ + 1; }
  const TropScalar& at(int i, int j) const;
  void set(int i, int j, TropScalar v);

 private:
  int dim_;
  std::vector<TropScalar> entries_;  // (d+1)^2 row-major; diagonal defaults to 0
};

// Kleene closure of a weight matrix: zero diagonal and the triangle
// inequality c[i][j] <= c[i][k] + c[k][j] hold; all entries finite.
class ClosedWeightMatrix {
 public:
  ClosedWeightMatrix(int dim, std::vector<Rational> entries);

  int dim() const { return dim_; }
  int size() const { return dim_ + 1; }
  const Rational& at(int i, int j) const;
  const std::vector<Rational>& entries() const { return entries_; }

  WeightMatrix as_weight_matrix() const;
  // Dilation x -> f x; preserves the cell decomposition combinatorics.
  ClosedWeightMatrix scaled(const Rational& factor) const;

  friend bool operator==(const ClosedWeightMatrix& a, const ClosedWeightMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  int dim_;
  std::vector<Rational> entries_;
};

// Witness for an inconsistent system: a directed cycle of negative total
// weight.  nodes lists the cycle without repeating the starting node.
struct NegativeCycle {
  std::vector<int> nodes;
  Rational weight;
};

// Witness for an unbounded system: c*[from][to] stays +inf.
struct UnboundedEntry {
  int from;
  int to;
};

using ClosureStatus = std::variant<ClosedWeightMatrix, NegativeCycle, UnboundedEntry>;

ClosureStatus kleene_closure(const WeightMatrix& c);

inline bool is_closed(const ClosureStatus& s) { return std::holds_alternative<ClosedWeightMatrix>(s); }

}  // namespace polytrope
