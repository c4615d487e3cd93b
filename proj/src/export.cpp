#include "polytrope/export.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polytrope {

namespace {

// Exact decimal with at most `places` fractional digits (truncated), used
// only for figure coordinates.
std::string decimal_string(const Rational& r, int places) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  Integer ip = num / den;
  Integer rem = num % den;
  std::string out = sign + ip.str();
  if (rem != 0) {
    std::string frac;
    for (int t = 0; t < places && rem != 0; ++t) {
      rem *= 10;
      frac += (rem / den).str();
      rem %= den;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return out;
}

struct Vec2 {
  Rational x, y;
};

Rational cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Counterclockwise angular order around a center, exact.
void angular_sort(std::vector<std::size_t>& idx, const std::vector<Vec2>& pts, const Vec2& center) {
  const auto half = [&](std::size_t t) {
    const Rational dx = pts[t].x - center.x;
    const Rational dy = pts[t].y - center.y;
    return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const Vec2 va{pts[a].x - center.x, pts[a].y - center.y};
    const Vec2 vb{pts[b].x - center.x, pts[b].y - center.y};
    const Rational cr = cross2(va, vb);
    if (cr != 0) return cr > 0;
    return a < b;
  });
}

}  // namespace

std::string export_svg(const Polytrope& p) {
  if (p.dim() != 2) throw std::invalid_argument("svg export needs d = 2");
  const auto pvs = pseudo_vertices(p);

  std::vector<Vec2> pts;
  pts.reserve(pvs.size());
  for (const auto& pv : pvs) {
    const auto deh = pv.dehomogenized();
    pts.push_back(Vec2{deh[0], deh[1]});
  }
  Rational minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (const auto& q : pts) {
    minx = std::min(minx, q.x);
    maxx = std::max(maxx, q.x);
    miny = std::min(miny, q.y);
    maxy = std::max(maxy, q.y);
  }
  Rational extent = std::max(maxx - minx, maxy - miny);
  if (extent <= 0) extent = 1;
  const Rational scale = Rational(360) / extent;
  const Rational margin(30);
  const auto sx = [&](const Rational& x) { return margin + (x - minx) * scale; };
  const auto sy = [&](const Rational& y) { return margin + (maxy - y) * scale; };

  Vec2 center{Rational(0), Rational(0)};
  for (const auto& q : pts) {
    center.x += q.x;
    center.y += q.y;
  }
  center.x /= static_cast<int>(pts.size());
  center.y /= static_cast<int>(pts.size());
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (pts.size() > 2) angular_sort(order, pts, center);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"420\" viewBox=\"0 0 420 420\">\n";
  svg += "  <polygon points=\"";
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t) svg += ' ';
    svg += decimal_string(sx(pts[order[t]].x), 4) + "," + decimal_string(sy(pts[order[t]].y), 4);
  }
  svg += "\" fill=\"#e8ecf8\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
  for (const auto& q : pts)
    svg += "  <circle class=\"pseudo-vertex\" cx=\"" + decimal_string(sx(q.x), 4) + "\" cy=\"" +
           decimal_string(sy(q.y), 4) + "\" r=\"4\" fill=\"#888888\"/>\n";
  for (const auto& v : p.vertices()) {
    const auto deh = v.dehomogenized();
    svg += "  <circle class=\"tropical-vertex\" cx=\"" + decimal_string(sx(deh[0]), 4) + "\" cy=\"" +
           decimal_string(sy(deh[1]), 4) + "\" r=\"6\" fill=\"#000000\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string export_off(const Polytrope& p) {
  if (p.dim() != 3) throw std::invalid_argument("off export needs d = 3");
  const auto pvs = pseudo_vertices(p);
  const auto facets = ordinary_facets(p, pvs);
  const auto f = f_vector(p);

  Integer scale = 1;
  for (const auto& pv : pvs)
    for (const auto& c : pv.dehomogenized()) scale = boost::multiprecision::lcm(scale, denominator(c));

  std::string off;
  if (scale != 1) off += "# coordinates scaled by " + scale.str() + "\n";
  off += "OFF\n";
  off += std::to_string(pvs.size()) + " " + std::to_string(facets.size()) + " " + std::to_string(f[1]) + "\n";
  for (const auto& pv : pvs) {
    const auto deh = pv.dehomogenized();
    for (std::size_t k = 0; k < deh.size(); ++k) {
      if (k) off += ' ';
      off += numerator(deh[k] * Rational(scale)).str();
    }
    off += '\n';
  }

  const auto& c = p.matrix();
  for (const auto& fc : facets) {
    std::vector<std::size_t> tight;
    for (std::size_t t = 0; t < pvs.size(); ++t)
      if (pvs[t][static_cast<std::size_t>(fc.i)] - pvs[t][static_cast<std::size_t>(fc.j)] == c.at(fc.i, fc.j))
        tight.push_back(t);

    // Orthogonal frame (b1, n x b1) inside the facet plane; counterclockwise
    // order in it is counterclockwise seen from the outer normal side.
    std::vector<Rational> nrm(3, Rational(0));
    if (fc.i > 0) nrm[static_cast<std::size_t>(fc.i - 1)] += 1;
    if (fc.j > 0) nrm[static_cast<std::size_t>(fc.j - 1)] -= 1;
    const auto base = pvs[tight[0]].dehomogenized();
    std::vector<Rational> b1;
    for (std::size_t t = 1; t < tight.size() && b1.empty(); ++t) {
      auto diff = pvs[tight[t]].dehomogenized();
      for (std::size_t k = 0; k < 3; ++k) diff[k] -= base[k];
      if (diff[0] != 0 || diff[1] != 0 || diff[2] != 0) b1 = std::move(diff);
    }
    if (b1.empty()) throw std::logic_error("degenerate facet in off export");
    const std::vector<Rational> b2{nrm[1] * b1[2] - nrm[2] * b1[1], nrm[2] * b1[0] - nrm[0] * b1[2],
                                   nrm[0] * b1[1] - nrm[1] * b1[0]};
    std::vector<Vec2> plane;
    plane.reserve(tight.size());
    for (const std::size_t t : tight) {
      auto diff = pvs[t].dehomogenized();
      for (std::size_t k = 0; k < 3; ++k) diff[k] -= base[k];
      Vec2 q{Rational(0), Rational(0)};
      for (std::size_t k = 0; k < 3; ++k) {
        q.x += diff[k] * b1[k];
        q.y += diff[k] * b2[k];
      }
      plane.push_back(q);
    }
    Vec2 center{Rational(0), Rational(0)};
    for (const auto& q : plane) {
      center.x += q.x;
      center.y += q.y;
    }
    center.x /= static_cast<int>(plane.size());
    center.y /= static_cast<int>(plane.size());
    std::vector<std::size_t> order(plane.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    angular_sort(order, plane, center);

    off += std::to_string(tight.size());
    for (const std::size_t t : order) off += " " + std::to_string(tight[t]);
    off += '\n';
  }
  return off;
}

}  // namespace polytrope
