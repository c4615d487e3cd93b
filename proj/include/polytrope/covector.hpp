#pragma once

#include "polytrope/trop_core.hpp"
#include "polytrope/weight_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polytrope {

// Type of a point with respect to a configuration: entry k holds the
// generator indices lying in the k-th closed sector based at the point.
// Generator indices are 0-based throughout.
class Covector {
 public:
  Covector(int n_generators, std::vector<std::uint64_t> entries);

  int generators() const { return n_; }
  int dim() const { return static_cast<int>(entries_.size()) - 1; }
  std::uint64_t entry(int k) const { return entries_[static_cast<std::size_t>(k)]; }
  const std::vector<std::uint64_t>& entries() const { return entries_; }

  bool contains(int k, int i) const { return (entry(k) >> i) & 1u; }
  bool all_nonempty() const;
  std::uint64_t union_mask() const;
  // Entrywise superset: this occurs in the closure of the cell of `other`.
  bool superset_of(const Covector& other) const;

  // Relabel generators by sigma and coordinates by tau:
  // entry_new[k] = sigma(entry_old[tau[k]]).
  Covector transformed(const std::vector<int>& sigma, const std::vector<int>& tau) const;

  // Entries joined by '|'; indices comma separated; empty entry is '-'.
  std::string to_string() const;

  friend bool operator==(const Covector& a, const Covector& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const Covector& a, const Covector& b) { return a.entries_ < b.entries_; }

 private:
  int n_;
  std::vector<std::uint64_t> entries_;
};

// An ordered sequence of points of common dimension.
class PointConfig {
 public:
  PointConfig(int dim, std::vector<TropPoint> points);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  const TropPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<TropPoint>& points() const { return points_; }

 private:
  int dim_;
  std::vector<TropPoint> points_;
};

Covector type_of(const TropPoint& x, const PointConfig& v);

// x lies in tconv(V) iff every entry of its type is nonempty.
bool hull_contains(const TropPoint& x, const PointConfig& v);

// The unique minimal generating subset, in input order, duplicates removed.
PointConfig tropical_vertices(const PointConfig& v);

// c_k(V) = (+)_i (-v_{i,k}) (*) v_i; always lies in tconv(V).
TropPoint corner(const PointConfig& v, int k);
std::vector<TropPoint> corners(const PointConfig& v);

struct NotFullDimensionalError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The d+1 facet-defining halfspaces c_k + S_k of a full-dimensional hull.
// Throws NotFullDimensionalError when the corner matrix is tropically
// singular.
std::vector<TropHalfspace> cornered_halfspaces(const PointConfig& v);

// Weight matrix of the intersection of all d+1 cornered halfspaces; the
// smallest polytrope containing tconv(V).
WeightMatrix cornered_hull(const PointConfig& v);

// tconv(V) equals its cornered hull as a point set: every pseudo-vertex of
// the cornered hull lies in the tropical hull.
bool is_polytrope(const PointConfig& v);

// Rows of -V^t for a square zero-diagonal vertex matrix; equals the corner
// list entrywise.  Rejects non-square or non-zero-diagonal input.
std::vector<TropPoint> corners_via_negative_transpose(const PointConfig& v);

}  // namespace polytrope
