#include "polytrope/polytrope_algebra.hpp"

#include "polytrope/detail/spanning_trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polytrope {

namespace detail {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

SpanningData build_spanning_data(int dim) {
  SpanningData data;
  data.dim = dim;
  const int n = dim + 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) data.pairs.emplace_back(i, j);

  const int npairs = static_cast<int>(data.pairs.size());
  std::vector<int> pick(static_cast<std::size_t>(dim));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    UnionFind uf(n);
    bool acyclic = true;
    for (int t = 0; t < dim && acyclic; ++t) {
      const auto& [i, j] = data.pairs[static_cast<std::size_t>(pick[static_cast<std::size_t>(t)])];
      acyclic = uf.unite(i, j);
    }
    if (acyclic) {
      // d acyclic edges on d+1 nodes form a spanning tree; order the
      // equality propagation by BFS from coordinate 0.
      std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));  // (neighbor, pair)
      for (int t = 0; t < dim; ++t) {
        const int p = pick[static_cast<std::size_t>(t)];
        const auto& [i, j] = data.pairs[static_cast<std::size_t>(p)];
        adj[static_cast<std::size_t>(i)].emplace_back(j, p);
        adj[static_cast<std::size_t>(j)].emplace_back(i, p);
      }
      std::vector<TreeStep> steps;
      std::vector<bool> known(static_cast<std::size_t>(n), false);
      std::vector<int> queue{0};
      known[0] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (const auto& [w, p] : adj[static_cast<std::size_t>(u)]) {
          if (known[static_cast<std::size_t>(w)]) continue;
          known[static_cast<std::size_t>(w)] = true;
          const auto& [i, j] = data.pairs[static_cast<std::size_t>(p)];
          // Equality x_i - x_j = c[i][j]; assign w from u.
          steps.push_back(TreeStep{w, u, p, w == i});
          queue.push_back(w);
        }
      }
      data.trees.push_back(std::move(steps));
    }
    // next d-subset of pair indices
    int pos = dim - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == npairs - dim + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < dim; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
  return data;
}

}  // namespace

const SpanningData& spanning_data(int dim) {
  static std::mutex mu;
  static std::map<int, SpanningData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dim);
  if (it == cache.end()) it = cache.emplace(dim, build_spanning_data(dim)).first;
  return it->second;
}

}  // namespace detail

Polytrope::Polytrope(ClosedWeightMatrix matrix) : matrix_(std::move(matrix)) {
  const int n = matrix_.size();
  vertices_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) row.push_back(matrix_.at(k, i));
    vertices_.emplace_back(std::move(row));
  }
}

Polytrope polytrope_from_inequalities(const WeightMatrix& c) {
  ClosureStatus status = kleene_closure(c);
  if (auto* closed = std::get_if<ClosedWeightMatrix>(&status)) return Polytrope(std::move(*closed));
  if (std::holds_alternative<NegativeCycle>(status))
    throw ClosureError("inequality system is infeasible (negative cycle)", std::move(status));
  throw ClosureError("inequality system is unbounded", std::move(status));
}

ClosedWeightMatrix matrix_from_vertices(const PointConfig& v) {
  const int d = v.dim();
  if (v.size() != d + 1)
    throw std::invalid_argument("vertex matrix of a d-polytrope needs exactly d+1 points");
  const int n = d + 1;
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const TropPoint row = v[static_cast<std::size_t>(i)].normalized_at(i);
    for (int k = 0; k < n; ++k)
      entries[static_cast<std::size_t>(k) * n + i] = row[static_cast<std::size_t>(k)];
  }
  return ClosedWeightMatrix(d, std::move(entries));  // validates closure invariants
}

std::vector<TropPoint> pseudo_vertices(const Polytrope& p) {
  const int d = p.dim();
  const int n = d + 1;
  const auto& data = detail::spanning_data(d);
  const auto& c = p.matrix();

  std::set<std::vector<Rational>> found;
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (const auto& tree : data.trees) {
    x.assign(static_cast<std::size_t>(n), Rational(0));
    for (const auto& step : tree) {
      const auto& [i, j] = data.pairs[static_cast<std::size_t>(step.pair_index)];
      const Rational& w = c.at(i, j);
      x[static_cast<std::size_t>(step.node)] =
          step.forward ? x[static_cast<std::size_t>(step.parent)] + w
                       : x[static_cast<std::size_t>(step.parent)] - w;
    }
    bool feasible = true;
    for (std::size_t q = 0; q < data.pairs.size() && feasible; ++q) {
      const auto& [i, j] = data.pairs[q];
      if (x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)] > c.at(i, j)) feasible = false;
    }
    if (feasible) found.insert(std::vector<Rational>(x.begin() + 1, x.end()));
  }

  std::vector<TropPoint> out;
  out.reserve(found.size());
  for (const auto& deh : found) out.push_back(TropPoint::homogenize(deh));
  return out;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    for (std::size_t r = row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[row][col];
      for (std::size_t cc = col; cc < cols; ++cc) rows[r][cc] -= f * rows[row][cc];
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

bool facet_tight(const TropPoint& pv, int i, int j, const Rational& offset) {
  return pv[static_cast<std::size_t>(i)] - pv[static_cast<std::size_t>(j)] == offset;
}

}  // namespace

std::vector<OrdinaryFacet> ordinary_facets(const Polytrope& p, const std::vector<TropPoint>& pvs) {
  const int d = p.dim();
  const auto& c = p.matrix();
  std::vector<OrdinaryFacet> out;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      if (i == j) continue;
      std::vector<const TropPoint*> tight;
      for (const auto& pv : pvs)
        if (facet_tight(pv, i, j, c.at(i, j))) tight.push_back(&pv);
      if (tight.empty()) continue;
      std::vector<std::vector<Rational>> diffs;
      const auto base = tight[0]->dehomogenized();
      for (std::size_t t = 1; t < tight.size(); ++t) {
        auto deh = tight[t]->dehomogenized();
        for (std::size_t k = 0; k < deh.size(); ++k) deh[k] -= base[k];
        diffs.push_back(std::move(deh));
      }
      if (rational_rank(std::move(diffs)) == d - 1) out.push_back(OrdinaryFacet{i, j, c.at(i, j)});
    }
  }
  return out;
}

std::vector<OrdinaryFacet> ordinary_facets(const Polytrope& p) {
  return ordinary_facets(p, pseudo_vertices(p));
}

namespace {

// Outer normal of facet (i, j) in the x_0 = 0 chart.
std::vector<Rational> facet_normal(int d, int i, int j) {
  std::vector<Rational> n(static_cast<std::size_t>(d), Rational(0));
  if (i > 0) n[static_cast<std::size_t>(i - 1)] += 1;
  if (j > 0) n[static_cast<std::size_t>(j - 1)] -= 1;
  return n;
}

}  // namespace

std::vector<long long> f_vector(const Polytrope& p) {
  const int d = p.dim();
  if (d > 3) throw std::invalid_argument("f_vector supports d <= 3 only");
  const auto pvs = pseudo_vertices(p);
  const long long m = static_cast<long long>(pvs.size());
  if (d == 1) return {m};
  const auto facets = ordinary_facets(p, pvs);
  if (d == 2) return {m, static_cast<long long>(facets.size())};

  // d == 3: two pseudo-vertices span an edge iff the normals of their common
  // facets have rank d-1.
  const auto& c = p.matrix();
  std::vector<std::vector<std::size_t>> on_facet(pvs.size());
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t v = 0; v < pvs.size(); ++v)
      if (facet_tight(pvs[v], facets[f].i, facets[f].j, c.at(facets[f].i, facets[f].j)))
        on_facet[v].push_back(f);
  long long edges = 0;
  for (std::size_t a = 0; a < pvs.size(); ++a) {
    for (std::size_t b = a + 1; b < pvs.size(); ++b) {
      std::vector<std::vector<Rational>> normals;
      std::size_t ia = 0, ib = 0;
      while (ia < on_facet[a].size() && ib < on_facet[b].size()) {
        if (on_facet[a][ia] == on_facet[b][ib]) {
          const auto& f = facets[on_facet[a][ia]];
          normals.push_back(facet_normal(d, f.i, f.j));
          ++ia;
          ++ib;
        } else if (on_facet[a][ia] < on_facet[b][ib]) {
          ++ia;
        } else {
          ++ib;
        }
      }
      if (static_cast<int>(normals.size()) >= d - 1 && rational_rank(std::move(normals)) == d - 1)
        ++edges;
    }
  }
  return {m, edges, static_cast<long long>(facets.size())};
}

bool is_simple(const Polytrope& p) {
  const int d = p.dim();
  if (d > 3) throw std::invalid_argument("is_simple supports d <= 3 only");
  const auto pvs = pseudo_vertices(p);
  const auto facets = ordinary_facets(p, pvs);
  const auto& c = p.matrix();
  for (const auto& pv : pvs) {
    int count = 0;
    for (const auto& f : facets)
      if (facet_tight(pv, f.i, f.j, c.at(f.i, f.j))) ++count;
    if (count != d) return false;
  }
  return true;
}

Polytrope translated(const Polytrope& p, const std::vector<Rational>& t) {
  const int d = p.dim();
  if (static_cast<int>(t.size()) != d) throw std::invalid_argument("translation needs d coordinates");
  std::vector<Rational> hom;
  hom.reserve(static_cast<std::size_t>(d) + 1);
  hom.emplace_back(0);
  hom.insert(hom.end(), t.begin(), t.end());
  const int n = d + 1;
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      entries[static_cast<std::size_t>(i) * n + j] =
          p.matrix().at(i, j) + hom[static_cast<std::size_t>(i)] - hom[static_cast<std::size_t>(j)];
  return Polytrope(ClosedWeightMatrix(d, std::move(entries)));
}

Polytrope coordinate_permuted(const Polytrope& p, const std::vector<int>& pi) {
  const int n = p.dim() + 1;
  if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      entries[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)]) * n +
              pi[static_cast<std::size_t>(j)]] = p.matrix().at(i, j);
  return Polytrope(ClosedWeightMatrix(p.dim(), std::move(entries)));
}

}  // namespace polytrope
