#include "polytrope/covector.hpp"

#include "polytrope/polytrope_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytrope {

Covector::Covector(int n_generators, std::vector<std::uint64_t> entries)
    : n_(n_generators), entries_(std::move(entries)) {
  if (n_ < 0 || n_ > 64) throw std::invalid_argument("covector supports up to 64 generators");
  if (entries_.empty()) throw std::invalid_argument("covector needs >= 1 entry");
}

bool Covector::all_nonempty() const {
  for (const auto e : entries_)
    if (e == 0) return false;
  return true;
}

std::uint64_t Covector::union_mask() const {
  std::uint64_t u = 0;
  for (const auto e : entries_) u |= e;
  return u;
}

bool Covector::superset_of(const Covector& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if ((entries_[k] & other.entries_[k]) != other.entries_[k]) return false;
  return true;
}

Covector Covector::transformed(const std::vector<int>& sigma, const std::vector<int>& tau) const {
  std::vector<std::uint64_t> out(entries_.size(), 0);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const std::uint64_t src = entries_[static_cast<std::size_t>(tau[k])];
    for (int i = 0; i < n_; ++i)
      if ((src >> i) & 1u) out[k] |= (std::uint64_t{1} << sigma[static_cast<std::size_t>(i)]);
  }
  return Covector(n_, std::move(out));
}

std::string Covector::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += '|';
    if (entries_[k] == 0) {
      s += '-';
      continue;
    }
    bool first = true;
    for (int i = 0; i < n_; ++i)
      if ((entries_[k] >> i) & 1u) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
      }
  }
  return s;
}

PointConfig::PointConfig(int dim, std::vector<TropPoint> points) : dim_(dim), points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("empty point configuration");
  for (const auto& p : points_)
    if (p.dim() != dim_) throw std::invalid_argument("configuration dimension mismatch");
}

Covector type_of(const TropPoint& x, const PointConfig& v) {
  if (x.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = v.size();
  if (n > 64) throw std::invalid_argument("covector supports up to 64 generators");
  std::vector<std::uint64_t> entries(static_cast<std::size_t>(x.dim()) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const TropPoint& p = v[static_cast<std::size_t>(i)];
    Rational mn = p[0] - x[0];
    for (std::size_t k = 1; k < p.coords().size(); ++k) mn = std::min(mn, p[k] - x[k]);
    for (std::size_t k = 0; k < p.coords().size(); ++k)
      if (p[k] - x[k] == mn) entries[k] |= (std::uint64_t{1} << i);
  }
  return Covector(n, std::move(entries));
}

bool hull_contains(const TropPoint& x, const PointConfig& v) {
  return type_of(x, v).all_nonempty();
}

PointConfig tropical_vertices(const PointConfig& v) {
  // Drop duplicate points first, keeping first occurrences.
  std::vector<TropPoint> distinct;
  for (const auto& p : v.points()) {
    bool seen = false;
    for (const auto& q : distinct)
      if (p == q) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(p);
  }
  if (distinct.size() == 1) return PointConfig(v.dim(), std::move(distinct));

  std::vector<TropPoint> kept;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    std::vector<TropPoint> rest;
    rest.reserve(distinct.size() - 1);
    for (std::size_t j = 0; j < distinct.size(); ++j)
      if (j != i) rest.push_back(distinct[j]);
    if (!hull_contains(distinct[i], PointConfig(v.dim(), std::move(rest)))) kept.push_back(distinct[i]);
  }
  return PointConfig(v.dim(), std::move(kept));
}

TropPoint corner(const PointConfig& v, int k) {
  if (k < 0 || k > v.dim()) throw std::invalid_argument("corner index out of range");
  std::vector<Rational> acc = v[0].normalized_at(k).coords();
  for (int i = 1; i < v.size(); ++i) {
    const TropPoint t = v[static_cast<std::size_t>(i)].normalized_at(k);
    for (std::size_t l = 0; l < acc.size(); ++l) acc[l] = std::min(acc[l], t[l]);
  }
  return TropPoint(std::move(acc));
}

std::vector<TropPoint> corners(const PointConfig& v) {
  std::vector<TropPoint> out;
  out.reserve(static_cast<std::size_t>(v.dim()) + 1);
  for (int k = 0; k <= v.dim(); ++k) out.push_back(corner(v, k));
  return out;
}

std::vector<TropHalfspace> cornered_halfspaces(const PointConfig& v) {
  const auto cs = corners(v);
  std::vector<std::vector<TropScalar>> m(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (const auto& c : cs[k].coords()) m[k].emplace_back(c);
  if (tdet(m).singular)
    throw NotFullDimensionalError("tconv(V) is not full-dimensional: corner matrix is tropically singular");
  std::vector<TropHalfspace> out;
  out.reserve(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k)
    out.emplace_back(cs[k], std::uint32_t{1} << k);
  return out;
}

WeightMatrix cornered_hull(const PointConfig& v) {
  const auto cs = corners(v);
  const int d = v.dim();
  WeightMatrix w(d);
  // z in c_k + S_k reads z_k - z_i <= c_{kk} - c_{ki} for all i.
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= d; ++i)
      if (i != k)
        w.set(k, i, TropScalar(cs[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                               cs[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]));
  return w;
}

bool is_polytrope(const PointConfig& v) {
  const auto status = kleene_closure(cornered_hull(v));
  if (!is_closed(status))
    throw std::logic_error("cornered hull of a nonempty configuration must be closed");
  const Polytrope hull(std::get<ClosedWeightMatrix>(status));
  for (const auto& pv : pseudo_vertices(hull))
    if (!hull_contains(pv, v)) return false;
  return true;
}

std::vector<TropPoint> corners_via_negative_transpose(const PointConfig& v) {
  const int d = v.dim();
  if (v.size() != d + 1) throw std::invalid_argument("negative transpose needs n = d+1 points");
  for (int i = 0; i <= d; ++i)
    if (v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
      throw std::invalid_argument("negative transpose needs a zero-diagonal vertex matrix");
  std::vector<TropPoint> out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) row.push_back(-v[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    out.emplace_back(std::move(row));
  }
  return out;
}

}  // namespace polytrope
