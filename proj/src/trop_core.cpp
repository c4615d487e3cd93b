#include "polytrope/trop_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polytrope {

const Rational& TropScalar::value() const {
  if (!finite_) throw std::logic_error("value() on tropical +inf");
  return value_;
}

TropScalar trop_add(const TropScalar& a, const TropScalar& b) {
  return (b < a) ? b : a;
}

TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
  if (a.is_infinite() || b.is_infinite()) return TropScalar::infinity();
  return TropScalar(a.value() + b.value());
}

TropPoint::TropPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("TropPoint needs >= 1 coordinate");
}

TropPoint TropPoint::zero(int dim) {
  return TropPoint(std::vector<Rational>(static_cast<std::size_t>(dim) + 1, Rational(0)));
}

TropPoint TropPoint::homogenize(const std::vector<Rational>& affine) {
  std::vector<Rational> c;
  c.reserve(affine.size() + 1);
  c.emplace_back(0);
  c.insert(c.end(), affine.begin(), affine.end());
  return TropPoint(std::move(c));
}

std::vector<Rational> TropPoint::canonical_coords() const {
  Rational m = coords_[0];
  for (const auto& c : coords_) m = std::min(m, c);
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c - m);
  return out;
}

std::vector<Rational> TropPoint::dehomogenized() const {
  std::vector<Rational> out;
  out.reserve(coords_.size() - 1);
  for (std::size_t k = 1; k < coords_.size(); ++k) out.push_back(coords_[k] - coords_[0]);
  return out;
}

TropPoint TropPoint::normalized_at(int k) const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  const Rational& pivot = coords_[static_cast<std::size_t>(k)];
  for (const auto& c : coords_) out.push_back(c - pivot);
  return TropPoint(std::move(out));
}

bool operator==(const TropPoint& a, const TropPoint& b) {
  if (a.coords_.size() != b.coords_.size()) return false;
  const Rational shift = a.coords_[0] - b.coords_[0];
  for (std::size_t k = 1; k < a.coords_.size(); ++k)
    if (a.coords_[k] - b.coords_[k] != shift) return false;
  return true;
}

bool operator<(const TropPoint& a, const TropPoint& b) {
  return a.canonical_coords() < b.canonical_coords();
}

TropPoint trop_combine(const Rational& lambda, const TropPoint& x,
                       const Rational& mu, const TropPoint& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<Rational> out;
  out.reserve(x.coords().size());
  for (std::size_t k = 0; k < x.coords().size(); ++k)
    out.push_back(std::min(lambda + x[k], mu + y[k]));
  return TropPoint(std::move(out));
}

std::vector<TropPoint> trop_segment(const TropPoint& x, const TropPoint& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  std::set<Rational> lambdas;
  for (std::size_t k = 0; k < x.coords().size(); ++k) lambdas.insert(y[k] - x[k]);
  // min(lambda + x, y) walks from x (lambda minimal) to y (lambda maximal).
  std::vector<TropPoint> out;
  for (const Rational& l : lambdas) out.push_back(trop_combine(l, x, Rational(0), y));
  return out;
}

namespace {

void for_each_permutation(int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

TropDet tdet(const std::vector<std::vector<TropScalar>>& m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) throw std::invalid_argument("tdet of empty matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("tdet needs a square matrix");

  TropScalar best = TropScalar::infinity();
  int attained = 0;
  for_each_permutation(k, [&](const std::vector<int>& perm) {
    TropScalar sum(Rational(0));
    for (int i = 0; i < k; ++i)
      sum = trop_mul(sum, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    if (sum.is_infinite()) return;
    if (best.is_infinite() || sum.value() < best.value()) {
      best = sum;
      attained = 1;
    } else if (sum.value() == best.value()) {
      ++attained;
    }
  });
  return TropDet{best, best.is_infinite() || attained >= 2};
}

namespace {

// All k-subsets of {0, ..., n-1}, lexicographic.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

bool is_general_position(const std::vector<TropPoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty configuration");
  const int d = pts[0].dim();
  for (const auto& p : pts)
    if (p.dim() != d) throw std::invalid_argument("dimension mismatch");
  const int n = static_cast<int>(pts.size());
  const int kmax = std::min(n, d + 1);
  bool ok = true;
  for (int k = 2; k <= kmax && ok; ++k) {
    for_each_subset(n, k, [&](const std::vector<int>& rows) {
      if (!ok) return;
      for_each_subset(d + 1, k, [&](const std::vector<int>& cols) {
        if (!ok) return;
        std::vector<std::vector<TropScalar>> sub(static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a) {
          sub[static_cast<std::size_t>(a)].reserve(static_cast<std::size_t>(k));
          for (int b = 0; b < k; ++b)
            sub[static_cast<std::size_t>(a)].emplace_back(
                pts[static_cast<std::size_t>(rows[static_cast<std::size_t>(a)])][static_cast<std::size_t>(cols[static_cast<std::size_t>(b)])]);
        }
        if (tdet(sub).singular) ok = false;
      });
    });
  }
  return ok;
}

bool in_closed_sector(const TropPoint& x, const TropPoint& apex, int k) {
  if (x.dim() != apex.dim()) throw std::invalid_argument("dimension mismatch");
  if (k < 0 || k > x.dim()) throw std::invalid_argument("sector index out of range");
  Rational mn = x[0] - apex[0];
  for (std::size_t i = 1; i < x.coords().size(); ++i) mn = std::min(mn, x[i] - apex[i]);
  return x[static_cast<std::size_t>(k)] - apex[static_cast<std::size_t>(k)] == mn;
}

TropHyperplane TropHyperplane::from_linear_form(const std::vector<Rational>& a) {
  std::vector<Rational> apex;
  apex.reserve(a.size());
  for (const auto& c : a) apex.push_back(-c);
  return TropHyperplane(TropPoint(std::move(apex)));
}

std::vector<Rational> TropHyperplane::linear_form() const {
  std::vector<Rational> a;
  a.reserve(apex_.coords().size());
  for (const auto& c : apex_.coords()) a.push_back(-c);
  return a;
}

bool TropHyperplane::contains(const TropPoint& x) const {
  return on_hyperplane(linear_form(), x);
}

bool on_hyperplane(const std::vector<Rational>& a, const TropPoint& x) {
  if (a.size() != x.coords().size()) throw std::invalid_argument("dimension mismatch");
  Rational mn = a[0] + x[0];
  for (std::size_t k = 1; k < a.size(); ++k) mn = std::min(mn, a[k] + x[k]);
  int attained = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] + x[k] == mn) ++attained;
  return attained >= 2;
}

TropHalfspace::TropHalfspace(TropPoint apex, std::uint32_t sector_mask)
    : apex_(std::move(apex)), sectors_(sector_mask) {
  const int d = apex_.dim();
  if (d + 1 > 31) throw std::invalid_argument("dimension too large for sector mask");
  const std::uint32_t all = (1u << (d + 1)) - 1u;
  if (sectors_ == 0 || (sectors_ & ~all) != 0 || sectors_ == all)
    throw std::invalid_argument("sector set must be a nonempty proper subset of {0..d}");
}

std::vector<int> TropHalfspace::sectors() const {
  std::vector<int> out;
  for (int k = 0; k <= apex_.dim(); ++k)
    if (sectors_ & (1u << k)) out.push_back(k);
  return out;
}

bool TropHalfspace::contains(const TropPoint& x) const {
  for (int k = 0; k <= apex_.dim(); ++k)
    if ((sectors_ & (1u << k)) && in_closed_sector(x, apex_, k)) return true;
  return false;
}

bool halfspace_contains(const TropHalfspace& h, const TropPoint& x) { return h.contains(x); }

}  // namespace polytrope
