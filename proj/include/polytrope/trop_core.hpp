#pragma once

#include "polytrope/rational.hpp"

#include <cstdint>
#include <vector>

namespace polytrope {

// Element of the min-plus semiring (R u {+inf}, min, +).  +inf is the
// additive identity; it absorbs under tropical multiplication.
class TropScalar {
 public:
  TropScalar() : finite_(false) {}  // +inf
  TropScalar(Rational v) : finite_(true), value_(std::move(v)) {}
  TropScalar(long long v) : finite_(true), value_(v) {}

  static TropScalar infinity() { return TropScalar(); }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  // Only valid on finite scalars.
  const Rational& value() const;

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  // Order with +inf as the top element.
  friend bool operator<(const TropScalar& a, const TropScalar& b) {
    if (!b.finite_) return a.finite_;
    if (!a.finite_) return false;
    return a.value_ < b.value_;
  }

 private:
  bool finite_;
  Rational value_;
};

// x (+) y = min(x, y)
TropScalar trop_add(const TropScalar& a, const TropScalar& b);
// x (*) y = x + y
TropScalar trop_mul(const TropScalar& a, const TropScalar& b);

// A point of TA^d: d+1 finite homogeneous coordinates, identified up to
// adding a constant to all entries.  operator== compares points, not
// representatives.
class TropPoint {
 public:
  explicit TropPoint(std::vector<Rational> coords);

  static TropPoint zero(int dim);
  // Prepends a zero coordinate to a vector of d affine coordinates.
  static TropPoint homogenize(const std::vector<Rational>& affine);

  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  const Rational& operator[](std::size_t k) const { return coords_[k]; }
  const std::vector<Rational>& coords() const { return coords_; }

  // Representative with all entries >= 0 and at least one zero.
  std::vector<Rational> canonical_coords() const;
  // (x_1 - x_0, ..., x_d - x_0); the inverse of homogenize.
  std::vector<Rational> dehomogenized() const;
  // Representative with coordinate k equal to zero.
  TropPoint normalized_at(int k) const;

  friend bool operator==(const TropPoint& a, const TropPoint& b);
  friend bool operator!=(const TropPoint& a, const TropPoint& b) { return !(a == b); }
  // Lexicographic order on canonical coordinates; a total order on points.
  friend bool operator<(const TropPoint& a, const TropPoint& b);

 private:
  std::vector<Rational> coords_;
};

// (lambda (*) x) (+) (mu (*) y), componentwise.
TropPoint trop_combine(const Rational& lambda, const TropPoint& x,
                       const Rational& mu, const TropPoint& y);

// Breakpoints of the tropical segment [x, y], as a polyline from x to y.
// At most d interior breakpoints; first element represents x, last y.
std::vector<TropPoint> trop_segment(const TropPoint& x, const TropPoint& y);

struct TropDet {
  TropScalar value;
  bool singular;  // minimum attained by >= 2 permutations, or value = +inf
};

// Min-plus permanent over all k! permutations; k <= 1 is allowed.
TropDet tdet(const std::vector<std::vector<TropScalar>>& m);

// No k x k submatrix of the coordinate matrix is tropically singular,
// for 2 <= k <= min(n, d+1).
bool is_general_position(const std::vector<TropPoint>& pts);

// Coordinate k of x - apex attains the minimum.
bool in_closed_sector(const TropPoint& x, const TropPoint& apex, int k);

// Min-plus hyperplane; the apex is -a for the defining linear form a.
class TropHyperplane {
 public:
  explicit TropHyperplane(TropPoint apex) : apex_(std::move(apex)) {}
  static TropHyperplane from_linear_form(const std::vector<Rational>& a);

  const TropPoint& apex() const { return apex_; }
  std::vector<Rational> linear_form() const;
  bool contains(const TropPoint& x) const;

 private:
  TropPoint apex_;
};

// min_k (a_k + x_k) is attained at least twice.
bool on_hyperplane(const std::vector<Rational>& a, const TropPoint& x);

// Union of closed sectors -a + S_I for a nonempty proper subset I.
class TropHalfspace {
 public:
  TropHalfspace(TropPoint apex, std::uint32_t sector_mask);

  const TropPoint& apex() const { return apex_; }
  std::uint32_t sector_mask() const { return sectors_; }
  std::vector<int> sectors() const;
  bool contains(const TropPoint& x) const;

 private:
  TropPoint apex_;
  std::uint32_t sectors_;
};

bool halfspace_contains(const TropHalfspace& h, const TropPoint& x);

}  // namespace polytrope
