#include "polytrope/weight_matrix.hpp"

#include <stdexcept>

namespace polytrope {

WeightMatrix::WeightMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  const std::size_t n = static_cast<std::size_t>(dim + 1);
  entries_.assign(n * n, TropScalar::infinity());
  for (std::size_t i = 0; i < n; ++i) entries_[i * n + i] = TropScalar(Rational(0));
}

WeightMatrix::WeightMatrix(int dim, std::vector<TropScalar> entries) : dim_(dim), entries_(std::move(entries)) {
  const std::size_t n = static_cast<std::size_t>(dim + 1);
  if (entries_.size() != n * n) throw std::invalid_argument("entry count does not match dimension");
}

const TropScalar& WeightMatrix::at(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * (dim_ + 1) + static_cast<std::size_t>(j)];
}

void WeightMatrix::set(int i, int j, TropScalar v) {
  entries_[static_cast<std::size_t>(i) * (dim_ + 1) + static_cast<std::size_t>(j)] = std::move(v);
}

ClosedWeightMatrix::ClosedWeightMatrix(int dim, std::vector<Rational> entries)
    : dim_(dim), entries_(std::move(entries)) {
  const int n = dim + 1;
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("entry count does not match dimension");
  for (int i = 0; i < n; ++i)
    if (at(i, i) != 0) throw std::invalid_argument("closed weight matrix needs a zero diagonal");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        if (at(i, j) > at(i, k) + at(k, j))
          throw std::invalid_argument("closed weight matrix violates the triangle inequality");
}

const Rational& ClosedWeightMatrix::at(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * (dim_ + 1) + static_cast<std::size_t>(j)];
}

WeightMatrix ClosedWeightMatrix::as_weight_matrix() const {
  const int n = dim_ + 1;
  std::vector<TropScalar> e;
  e.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& v : entries_) e.emplace_back(v);
  return WeightMatrix(dim_, std::move(e));
}

ClosedWeightMatrix ClosedWeightMatrix::scaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Rational> e;
  e.reserve(entries_.size());
  for (const auto& v : entries_) e.push_back(v * factor);
  return ClosedWeightMatrix(dim_, std::move(e));
}

namespace {

// Bellman-Ford negative-cycle extraction on the finite entries of c.
// Called only when a negative cycle exists.
NegativeCycle extract_negative_cycle(const WeightMatrix& c) {
  const int n = c.size();
  // Virtual source: dist starts at 0 everywhere.
  std::vector<Rational> dist(static_cast<std::size_t>(n), Rational(0));
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  int touched = -1;
  for (int round = 0; round < n; ++round) {
    touched = -1;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || c.at(i, j).is_infinite()) continue;
        // Edge j -> i of weight c[i][j]: reading x_i - x_j <= c_ij as a
        // shortest-path constraint dist[i] <= dist[j] + c[i][j].
        const Rational cand = dist[static_cast<std::size_t>(j)] + c.at(i, j).value();
        if (cand < dist[static_cast<std::size_t>(i)]) {
          dist[static_cast<std::size_t>(i)] = cand;
          pred[static_cast<std::size_t>(i)] = j;
          touched = i;
        }
      }
    }
    if (touched < 0) break;
  }
  if (touched < 0) throw std::logic_error("negative cycle extraction without a negative cycle");
  // Walk predecessors n steps to land on the cycle, then collect it.
  int v = touched;
  for (int step = 0; step < n; ++step) v = pred[static_cast<std::size_t>(v)];
  std::vector<int> cycle;
  for (int u = v;; u = pred[static_cast<std::size_t>(u)]) {
    cycle.push_back(u);
    if (u == v && cycle.size() > 1) break;
  }
  cycle.pop_back();                         // drop the repeated start
  std::reverse(cycle.begin(), cycle.end()); // follow edges forward
  Rational weight(0);
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const int j = cycle[t];
    const int i = cycle[(t + 1) % cycle.size()];
    weight += c.at(i, j).value();
  }
  if (weight >= 0) throw std::logic_error("extracted cycle is not negative");
  return NegativeCycle{std::move(cycle), std::move(weight)};
}

}  // namespace

ClosureStatus kleene_closure(const WeightMatrix& c) {
  const int n = c.size();
  // A negative diagonal entry is already an infeasibility witness.
  for (int i = 0; i < n; ++i) {
    const TropScalar& d = c.at(i, i);
    if (d.is_finite() && d.value() < 0) return NegativeCycle{{i}, d.value()};
  }

  std::vector<TropScalar> m;
  m.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.push_back(i == j ? trop_add(c.at(i, j), TropScalar(Rational(0))) : c.at(i, j));
  auto at = [&](int i, int j) -> TropScalar& { return m[static_cast<std::size_t>(i) * n + j]; };

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (at(i, k).is_infinite()) continue;
      for (int j = 0; j < n; ++j) {
        const TropScalar via = trop_mul(at(i, k), at(k, j));
        if (via < at(i, j)) at(i, j) = via;
      }
    }

  for (int i = 0; i < n; ++i)
    if (at(i, i).value() < 0) return extract_negative_cycle(c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j).is_infinite()) return UnboundedEntry{i, j};

  std::vector<Rational> entries;
  entries.reserve(m.size());
  for (const auto& v : m) entries.push_back(v.value());
  return ClosedWeightMatrix(c.dim(), std::move(entries));
}

}  // namespace polytrope
