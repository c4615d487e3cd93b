#pragma once

#include "polytrope/constructions.hpp"
#include "polytrope/polytrope_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polytrope {

// The i-th valid region of a polytrope in basic position: the closure of
// X_i = union of the cells X_{i,j}, intersected with the sector v_i + S_i.
// A point belongs iff it lies in the sector and its covector contains one
// of the open-cell covectors entrywise.
class ValidRegion {
 public:
  ValidRegion(PointConfig config, int vertex_index, std::vector<Covector> open_cells);

  int vertex_index() const { return vertex_index_; }
  const PointConfig& config() const { return config_; }
  const std::vector<Covector>& open_cells() const { return open_cells_; }
  bool contains(const TropPoint& x) const;

 private:
  PointConfig config_;
  int vertex_index_;
  std::vector<Covector> open_cells_;
};

// Valid regions of a polytrope given by its vertices in basic position.
// Rejects non-polytrope input.
std::vector<ValidRegion> valid_regions(const PointConfig& v);

// One integral point per cell of the region, scanning dehomogenized
// coordinates over [-bound, bound]^d.  Representatives come from the open
// box; the boundary shell is scanned afterwards and must introduce no new
// cell, otherwise the bound is too small and a std::logic_error is thrown.
std::vector<TropPoint> region_representatives(const ValidRegion& r, long long bound);

// Sorted pseudo-vertex covector list, lexicographically minimal over all
// simultaneous generator and coordinate relabelings.  A complete invariant
// of tropical equivalence for polytropes.
struct TropicalForm {
  int dim = 0;
  std::vector<Covector> covectors;

  std::string to_string() const;

  friend bool operator==(const TropicalForm& a, const TropicalForm& b) {
    return a.dim == b.dim && a.covectors == b.covectors;
  }
  friend bool operator<(const TropicalForm& a, const TropicalForm& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.covectors < b.covectors;
  }
};

TropicalForm tropical_canonical_form(const Polytrope& p);

// Canonical 0/1 vertex-facet incidence matrix under independent relabeling
// of pseudo-vertices and facets (partition refinement with backtracking).
struct OrdinaryForm {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint32_t> row_masks;

  std::string to_string() const;

  friend bool operator==(const OrdinaryForm& a, const OrdinaryForm& b) {
    return a.rows == b.rows && a.cols == b.cols && a.row_masks == b.row_masks;
  }
  friend bool operator<(const OrdinaryForm& a, const OrdinaryForm& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    if (a.cols != b.cols) return a.cols < b.cols;
    return a.row_masks < b.row_masks;
  }
};

OrdinaryForm ordinary_canonical_form(const Polytrope& p);

struct CatalogRecord {
  TropicalForm tropical_form;
  OrdinaryForm ordinary_form;
  int pseudo_vertex_count = 0;
  std::vector<long long> f;
  ClosedWeightMatrix representative;  // integral, lexicographically smallest seen
};

struct EnumerateOptions {
  std::optional<long long> bound;  // default: max |dehomog coordinate| + d + 1
  int jobs = 1;
};

// All tropical equivalence classes of d-polytropes, one record per class,
// sorted by (pseudo-vertex count, tropical form).  d in {1, 2, 3}.
// Deterministic for fixed d and bound, regardless of the worker count.
std::vector<CatalogRecord> enumerate_classes(int d, const EnumerateOptions& opts = {});

struct ClassTableRow {
  int m;  // pseudo-vertex count
  int t;  // tropical equivalence classes
  int o;  // ordinary combinatorial classes
};

std::vector<ClassTableRow> class_table(const std::vector<CatalogRecord>& catalog);

}  // namespace polytrope
