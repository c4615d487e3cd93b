#include "polytrope/classify.hpp"

#include "polytrope/detail/spanning_trees.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace polytrope {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

ValidRegion::ValidRegion(PointConfig config, int vertex_index, std::vector<Covector> open_cells)
    : config_(std::move(config)), vertex_index_(vertex_index), open_cells_(std::move(open_cells)) {}

bool ValidRegion::contains(const TropPoint& x) const {
  if (!in_closed_sector(x, config_[static_cast<std::size_t>(vertex_index_)], vertex_index_))
    return false;
  const Covector cv = type_of(x, config_);
  for (const auto& cell : open_cells_)
    if (cv.superset_of(cell)) return true;
  return false;
}

std::vector<ValidRegion> valid_regions(const PointConfig& v) {
  const int d = v.dim();
  ClosedWeightMatrix c = matrix_from_vertices(v);  // rejects non-basic-position input
  (void)c;
  if (!is_polytrope(v)) throw std::invalid_argument("valid regions need the vertices of a polytrope");

  std::vector<Covector> types;
  types.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) types.push_back(type_of(v[static_cast<std::size_t>(i)], v));

  std::vector<ValidRegion> out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    std::vector<Covector> cells;
    cells.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      // Cell type of X_{i,j}: entry i empties out, the kept vertex v_i shows
      // up in entry j only, all other memberships of type(v_i) persist.
      std::vector<std::uint64_t> entries(static_cast<std::size_t>(d) + 1, 0);
      for (int k = 0; k <= d; ++k) {
        if (k == i)
          entries[static_cast<std::size_t>(k)] = 0;
        else if (k == j)
          entries[static_cast<std::size_t>(k)] = types[static_cast<std::size_t>(i)].entry(k);
        else
          entries[static_cast<std::size_t>(k)] =
              types[static_cast<std::size_t>(i)].entry(k) & ~(std::uint64_t{1} << i);
      }
      cells.emplace_back(v.size(), std::move(entries));
    }
    out.emplace_back(v, i, std::move(cells));
  }
  return out;
}

std::vector<TropPoint> region_representatives(const ValidRegion& r, long long bound) {
  const PointConfig& v = r.config();
  const int d = v.dim();
  Rational maxabs(0);
  for (const auto& p : v.points())
    for (const auto& c : p.dehomogenized()) maxabs = std::max(maxabs, abs(c));
  if (Rational(bound) < maxabs + d + 1)
    throw std::invalid_argument("scan bound must be at least max |coordinate| + d + 1");

  std::map<Covector, TropPoint> interior;
  std::vector<Covector> order;
  std::set<Covector> shell_only;

  std::vector<long long> x(static_cast<std::size_t>(d), -bound);
  while (true) {
    std::vector<Rational> deh(x.begin(), x.end());
    const TropPoint p = TropPoint::homogenize(deh);
    if (r.contains(p)) {
      const Covector cv = type_of(p, v);
      bool shell = false;
      for (const long long c : x)
        if (c == bound || c == -bound) shell = true;
      if (shell) {
        shell_only.insert(cv);
      } else if (interior.find(cv) == interior.end()) {
        interior.emplace(cv, p);
        order.push_back(cv);
      }
    }
    int pos = d - 1;
    while (pos >= 0 && x[static_cast<std::size_t>(pos)] == bound) {
      x[static_cast<std::size_t>(pos)] = -bound;
      --pos;
    }
    if (pos < 0) break;
    ++x[static_cast<std::size_t>(pos)];
  }

  for (const auto& cv : shell_only)
    if (interior.find(cv) == interior.end())
      throw std::logic_error("region cell first appears on the scan boundary; increase the bound");

  std::vector<TropPoint> out;
  out.reserve(order.size());
  for (const auto& cv : order) out.push_back(interior.at(cv));
  return out;
}

std::string TropicalForm::to_string() const {
  std::string s;
  for (std::size_t t = 0; t < covectors.size(); ++t) {
    if (t) s += ';';
    s += covectors[t].to_string();
  }
  return s;
}

TropicalForm tropical_canonical_form(const Polytrope& p) {
  const int n = p.dim() + 1;
  const PointConfig vc = p.vertex_config();
  std::vector<Covector> covs;
  for (const auto& pv : pseudo_vertices(p)) covs.push_back(type_of(pv, vc));

  const auto perms = all_permutations(n);
  std::optional<std::vector<Covector>> best;
  std::vector<Covector> cand;
  for (const auto& sigma : perms) {
    for (const auto& tau : perms) {
      cand.clear();
      for (const auto& cv : covs) cand.push_back(cv.transformed(sigma, tau));
      std::sort(cand.begin(), cand.end());
      if (!best || cand < *best) best = cand;
    }
  }
  return TropicalForm{p.dim(), std::move(*best)};
}

namespace {

// Canonical labeling of a bipartite incidence structure by iterated
// partition refinement, branching on the first non-singleton class.
class BipartiteCanonicalizer {
 public:
  BipartiteCanonicalizer(int rows, int cols, const std::vector<std::uint32_t>& row_masks)
      : rows_(rows), cols_(cols), row_masks_(row_masks), col_masks_(static_cast<std::size_t>(cols), 0) {
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if ((row_masks_[static_cast<std::size_t>(r)] >> c) & 1u)
          col_masks_[static_cast<std::size_t>(c)] |= (std::uint32_t{1} << r);
  }

  std::vector<std::uint32_t> canonical() {
    std::vector<int> colors(static_cast<std::size_t>(rows_ + cols_), 0);
    for (int c = 0; c < cols_; ++c) colors[static_cast<std::size_t>(rows_ + c)] = 1;
    search(std::move(colors));
    return best_.value_or(std::vector<std::uint32_t>());
  }

 private:
  int rows_, cols_;
  const std::vector<std::uint32_t>& row_masks_;
  std::vector<std::uint32_t> col_masks_;
  std::optional<std::vector<std::uint32_t>> best_;

  void neighbors(int u, std::vector<int>& out) const {
    out.clear();
    if (u < rows_) {
      const std::uint32_t m = row_masks_[static_cast<std::size_t>(u)];
      for (int c = 0; c < cols_; ++c)
        if ((m >> c) & 1u) out.push_back(rows_ + c);
    } else {
      const std::uint32_t m = col_masks_[static_cast<std::size_t>(u - rows_)];
      for (int r = 0; r < rows_; ++r)
        if ((m >> r) & 1u) out.push_back(r);
    }
  }

  void refine(std::vector<int>& colors) const {
    const int total = rows_ + cols_;
    int classes = count_classes(colors);
    std::vector<int> nb;
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sigs;
      sigs.reserve(static_cast<std::size_t>(total));
      for (int u = 0; u < total; ++u) {
        std::vector<int> sig{colors[static_cast<std::size_t>(u)]};
        neighbors(u, nb);
        for (const int w : nb) sig.push_back(colors[static_cast<std::size_t>(w)]);
        std::sort(sig.begin() + 1, sig.end());
        sigs.emplace_back(std::move(sig), u);
      }
      std::sort(sigs.begin(), sigs.end());
      int next = 0;
      for (std::size_t t = 0; t < sigs.size(); ++t) {
        if (t && sigs[t].first != sigs[t - 1].first) ++next;
        colors[static_cast<std::size_t>(sigs[t].second)] = next;
      }
      const int now = next + 1;
      if (now == classes) return;
      classes = now;
    }
  }

  static int count_classes(const std::vector<int>& colors) {
    std::set<int> s(colors.begin(), colors.end());
    return static_cast<int>(s.size());
  }

  void search(std::vector<int> colors) {
    refine(colors);
    const int total = rows_ + cols_;
    // first non-singleton color class, by color value
    std::map<int, std::vector<int>> by_color;
    for (int u = 0; u < total; ++u) by_color[colors[static_cast<std::size_t>(u)]].push_back(u);
    const std::vector<int>* cell = nullptr;
    for (const auto& [col, members] : by_color)
      if (members.size() > 1) {
        cell = &members;
        break;
      }
    if (!cell) {
      emit(colors);
      return;
    }
    for (const int u : *cell) {
      std::vector<int> next(colors.size());
      for (int v = 0; v < total; ++v)
        next[static_cast<std::size_t>(v)] = colors[static_cast<std::size_t>(v)] * 2 + (v == u ? 0 : 1);
      search(std::move(next));
    }
  }

  void emit(const std::vector<int>& colors) {
    std::vector<int> row_order(static_cast<std::size_t>(rows_));
    std::iota(row_order.begin(), row_order.end(), 0);
    std::sort(row_order.begin(), row_order.end(), [&](int a, int b) {
      return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)];
    });
    std::vector<int> col_order(static_cast<std::size_t>(cols_));
    std::iota(col_order.begin(), col_order.end(), 0);
    std::sort(col_order.begin(), col_order.end(), [&](int a, int b) {
      return colors[static_cast<std::size_t>(rows_ + a)] < colors[static_cast<std::size_t>(rows_ + b)];
    });
    std::vector<int> col_pos(static_cast<std::size_t>(cols_));
    for (int t = 0; t < cols_; ++t) col_pos[static_cast<std::size_t>(col_order[static_cast<std::size_t>(t)])] = t;

    std::vector<std::uint32_t> cand;
    cand.reserve(static_cast<std::size_t>(rows_));
    for (const int r : row_order) {
      std::uint32_t mask = 0;
      const std::uint32_t src = row_masks_[static_cast<std::size_t>(r)];
      for (int c = 0; c < cols_; ++c)
        if ((src >> c) & 1u) mask |= (std::uint32_t{1} << col_pos[static_cast<std::size_t>(c)]);
      cand.push_back(mask);
    }
    if (!best_ || cand < *best_) best_ = std::move(cand);
  }
};

}  // namespace

std::string OrdinaryForm::to_string() const {
  std::string s = std::to_string(rows) + "x" + std::to_string(cols) + ":";
  for (int r = 0; r < rows; ++r) {
    if (r) s += ';';
    for (int c = 0; c < cols; ++c)
      s += ((row_masks[static_cast<std::size_t>(r)] >> c) & 1u) ? '1' : '0';
  }
  return s;
}

OrdinaryForm ordinary_canonical_form(const Polytrope& p) {
  if (p.dim() > 3) throw std::invalid_argument("ordinary_canonical_form supports d <= 3 only");
  const auto pvs = pseudo_vertices(p);
  const auto facets = ordinary_facets(p, pvs);
  if (facets.size() > 32) throw std::logic_error("facet count exceeds incidence mask width");
  std::vector<std::uint32_t> incidence(pvs.size(), 0);
  for (std::size_t t = 0; t < pvs.size(); ++t)
    for (std::size_t f = 0; f < facets.size(); ++f) {
      const auto& fc = facets[f];
      if (pvs[t][static_cast<std::size_t>(fc.i)] - pvs[t][static_cast<std::size_t>(fc.j)] == fc.offset)
        incidence[t] |= (std::uint32_t{1} << f);
    }
  BipartiteCanonicalizer canon(static_cast<int>(pvs.size()), static_cast<int>(facets.size()), incidence);
  return OrdinaryForm{static_cast<int>(pvs.size()), static_cast<int>(facets.size()), canon.canonical()};
}

// ---------------------------------------------------------------------------
// Enumeration.  The tuple loop runs on plain 64-bit integers: all candidate
// coordinates live in [-B, B] and every derived quantity is a short sum of
// such values.  Records are rebuilt through the public exact path from each
// class representative afterwards.

namespace {

constexpr int kMaxN = 4;    // classification dimensions are d <= 3
constexpr int kMaxPV = 20;  // binom(2d, d) at d = 3

struct RawKey {
  std::uint8_t m = 0;
  std::array<std::uint16_t, kMaxPV> cov{};

  friend bool operator==(const RawKey& a, const RawKey& b) { return a.m == b.m && a.cov == b.cov; }
  friend bool operator<(const RawKey& a, const RawKey& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.cov < b.cov;
  }
};

struct RawKeyHash {
  std::size_t operator()(const RawKey& k) const {
    std::size_t h = 1469598103934665603ull;
    const auto mix = [&h](std::size_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(k.m);
    for (const auto c : k.cov) mix(c);
    return h;
  }
};

using Matrix16 = std::array<long long, kMaxN * kMaxN>;
using Point3 = std::array<long long, kMaxN - 1>;

struct KernelContext {
  int d = 0;
  int n = 0;
  long long bound = 0;
  const detail::SpanningData* span = nullptr;
  std::vector<std::array<int, kMaxN>> perms;
  std::vector<std::array<std::uint16_t, 16>> mask_lut;  // per perm: generator-mask remap
  long long start_rows[kMaxN][kMaxN] = {};              // zero-diagonal vertex matrix
  std::vector<std::vector<std::uint16_t>> region_cells; // open-cell masks per region

  int shift(int k) const { return 4 * (d - k); }        // entry 0 in the top nibble

  std::uint16_t covector_of(const long long* xhom) const {
    std::uint16_t cw = 0;
    for (int g = 0; g < n; ++g) {
      long long mn = LLONG_MAX;
      for (int k = 0; k < n; ++k) mn = std::min(mn, start_rows[g][k] - xhom[k]);
      for (int k = 0; k < n; ++k)
        if (start_rows[g][k] - xhom[k] == mn)
          cw |= static_cast<std::uint16_t>((1u << g) << shift(k));
    }
    return cw;
  }

  bool in_sector(const long long* xhom, int i) const {
    long long mn = LLONG_MAX;
    for (int k = 0; k < n; ++k) mn = std::min(mn, xhom[k] - start_rows[i][k]);
    return xhom[i] - start_rows[i][i] == mn;
  }

  RawKey transform(const RawKey& raw, const std::array<std::uint16_t, 16>& sigma_lut,
                   const std::array<int, kMaxN>& tau) const {
    RawKey out;
    out.m = raw.m;
    for (int t = 0; t < raw.m; ++t) {
      const std::uint16_t cv = raw.cov[static_cast<std::size_t>(t)];
      std::uint16_t res = 0;
      for (int k = 0; k < n; ++k) {
        const int nib = (cv >> shift(tau[static_cast<std::size_t>(k)])) & 0xF;
        res |= static_cast<std::uint16_t>(sigma_lut[static_cast<std::size_t>(nib)] << shift(k));
      }
      out.cov[static_cast<std::size_t>(t)] = res;
    }
    std::sort(out.cov.begin(), out.cov.begin() + raw.m);
    return out;
  }
};

struct RegionScan {
  std::vector<Point3> reps;                       // dehomogenized integral representatives
  std::vector<std::uint16_t> covs;                // covector per representative
  std::unordered_map<std::uint16_t, int> cov2idx;
};

RegionScan scan_region(const KernelContext& ctx, int region) {
  RegionScan out;
  std::set<std::uint16_t> shell_only;
  const long long b = ctx.bound;
  Point3 x{};
  for (int k = 0; k < ctx.d; ++k) x[static_cast<std::size_t>(k)] = -b;
  while (true) {
    long long xhom[kMaxN] = {};
    for (int k = 0; k < ctx.d; ++k) xhom[k + 1] = x[static_cast<std::size_t>(k)];
    if (ctx.in_sector(xhom, region)) {
      const std::uint16_t cw = ctx.covector_of(xhom);
      bool member = false;
      for (const std::uint16_t cell : ctx.region_cells[static_cast<std::size_t>(region)])
        if ((cw & cell) == cell) {
          member = true;
          break;
        }
      if (member) {
        bool shell = false;
        for (int k = 0; k < ctx.d; ++k)
          if (x[static_cast<std::size_t>(k)] == b || x[static_cast<std::size_t>(k)] == -b) shell = true;
        if (shell) {
          shell_only.insert(cw);
        } else if (out.cov2idx.find(cw) == out.cov2idx.end()) {
          out.cov2idx.emplace(cw, static_cast<int>(out.reps.size()));
          out.reps.push_back(x);
          out.covs.push_back(cw);
        }
      }
    }
    int pos = ctx.d - 1;
    while (pos >= 0 && x[static_cast<std::size_t>(pos)] == b) {
      x[static_cast<std::size_t>(pos)] = -b;
      --pos;
    }
    if (pos < 0) break;
    ++x[static_cast<std::size_t>(pos)];
  }
  for (const std::uint16_t cw : shell_only)
    if (out.cov2idx.find(cw) == out.cov2idx.end())
      throw std::logic_error("region cell first appears on the scan boundary; increase the bound");
  return out;
}

struct ClassAccum {
  RawKey canon;
  Matrix16 min_matrix;
  int m = 0;
};

struct Worker {
  const KernelContext* ctx = nullptr;
  const std::vector<RegionScan>* regions = nullptr;
  const std::vector<std::array<int, kMaxN>>* stabilizer = nullptr;

  std::unordered_map<RawKey, int, RawKeyHash> raw2class;
  std::unordered_map<RawKey, int, RawKeyHash> canon2class;
  std::vector<ClassAccum> classes;

  void run(unsigned long long begin, unsigned long long end) {
    const int n = ctx->n;
    std::array<int, kMaxN> idx{};
    for (unsigned long long t = begin; t < end; ++t) {
      unsigned long long rest = t;
      for (int i = n - 1; i >= 0; --i) {
        const auto size = (*regions)[static_cast<std::size_t>(i)].reps.size();
        idx[static_cast<std::size_t>(i)] = static_cast<int>(rest % size);
        rest /= size;
      }
      if (stabilizer->size() > 1 && !orbit_minimal(idx)) continue;
      process(idx);
    }
  }

  bool orbit_minimal(const std::array<int, kMaxN>& idx) const {
    const int n = ctx->n;
    for (const auto& g : *stabilizer) {
      bool identity = true;
      for (int i = 0; i < n; ++i)
        if (g[static_cast<std::size_t>(i)] != i) identity = false;
      if (identity) continue;
      std::array<int, kMaxN> ginv{};
      for (int i = 0; i < n; ++i) ginv[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = i;
      std::array<int, kMaxN> mapped{};
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const Point3& p = (*regions)[static_cast<std::size_t>(i)].reps[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        long long phom[kMaxN] = {};
        for (int k = 0; k < ctx->d; ++k) phom[k + 1] = p[static_cast<std::size_t>(k)];
        long long qhom[kMaxN];
        for (int k = 0; k < n; ++k) qhom[k] = phom[ginv[static_cast<std::size_t>(k)]];
        const std::uint16_t cw = ctx->covector_of(qhom);
        const auto& target = (*regions)[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
        const auto it = target.cov2idx.find(cw);
        if (it == target.cov2idx.end()) {
          ok = false;  // mapped cell has no interior representative; do not prune
        } else {
          mapped[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = it->second;
        }
      }
      if (!ok) continue;
      for (int i = 0; i < n; ++i) {
        if (mapped[static_cast<std::size_t>(i)] < idx[static_cast<std::size_t>(i)]) return false;
        if (mapped[static_cast<std::size_t>(i)] > idx[static_cast<std::size_t>(i)]) break;
      }
    }
    return true;
  }

  void process(const std::array<int, kMaxN>& idx) {
    const int n = ctx->n;
    const int d = ctx->d;

    long long rows[kMaxN][kMaxN];
    for (int i = 0; i < n; ++i) {
      const Point3& p = (*regions)[static_cast<std::size_t>(i)].reps[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      long long hom[kMaxN] = {};
      for (int k = 0; k < d; ++k) hom[k + 1] = p[static_cast<std::size_t>(k)];
      const long long base = hom[i];
      for (int k = 0; k < n; ++k) rows[i][k] = hom[k] - base;
    }
    long long c[kMaxN][kMaxN];
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) c[k][i] = rows[i][k];
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          if (c[i][j] > c[i][k] + c[k][j])
            throw std::logic_error("candidate tuple is not a closed weight matrix");

    // pseudo-vertices: one exact solve per spanning tree of tight pairs
    long long pv[kMaxPV][kMaxN];
    int m = 0;
    const auto& span = *ctx->span;
    for (const auto& tree : span.trees) {
      long long x[kMaxN] = {};
      for (const auto& step : tree) {
        const auto& [i, j] = span.pairs[static_cast<std::size_t>(step.pair_index)];
        x[step.node] = step.forward ? x[step.parent] + c[i][j] : x[step.parent] - c[i][j];
      }
      bool feasible = true;
      for (std::size_t q = 0; q < span.pairs.size() && feasible; ++q) {
        const auto& [i, j] = span.pairs[q];
        if (x[i] - x[j] > c[i][j]) feasible = false;
      }
      if (!feasible) continue;
      const long long base = x[0];
      bool fresh = true;
      for (int t = 0; t < m && fresh; ++t) {
        bool same = true;
        for (int k = 0; k < n; ++k)
          if (pv[t][k] != x[k] - base) same = false;
        if (same) fresh = false;
      }
      if (!fresh) continue;
      if (m == kMaxPV) throw std::logic_error("pseudo-vertex bound exceeded");
      for (int k = 0; k < n; ++k) pv[m][k] = x[k] - base;
      ++m;
    }

    RawKey raw;
    raw.m = static_cast<std::uint8_t>(m);
    for (int t = 0; t < m; ++t) {
      std::uint16_t cw = 0;
      for (int g = 0; g < n; ++g) {
        long long mn = LLONG_MAX;
        for (int k = 0; k < n; ++k) mn = std::min(mn, rows[g][k] - pv[t][k]);
        for (int k = 0; k < n; ++k)
          if (rows[g][k] - pv[t][k] == mn) cw |= static_cast<std::uint16_t>((1u << g) << ctx->shift(k));
      }
      raw.cov[static_cast<std::size_t>(t)] = cw;
    }
    std::sort(raw.cov.begin(), raw.cov.begin() + m);

    int slot;
    const auto hit = raw2class.find(raw);
    if (hit != raw2class.end()) {
      slot = hit->second;
    } else {
      std::set<RawKey> orbit;
      for (const auto& sigma : ctx->perms) {
        const auto& lut = ctx->mask_lut[orbit_index(sigma)];
        for (const auto& tau : ctx->perms) orbit.insert(ctx->transform(raw, lut, tau));
      }
      const RawKey& canon = *orbit.begin();
      const auto known = canon2class.find(canon);
      if (known != canon2class.end()) {
        slot = known->second;
      } else {
        slot = static_cast<int>(classes.size());
        ClassAccum acc;
        acc.canon = canon;
        acc.m = m;
        acc.min_matrix.fill(0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) acc.min_matrix[static_cast<std::size_t>(i * n + j)] = c[i][j];
        classes.push_back(acc);
        canon2class.emplace(canon, slot);
      }
      for (const auto& key : orbit) raw2class.emplace(key, slot);
    }

    ClassAccum& acc = classes[static_cast<std::size_t>(slot)];
    if (acc.m != m) throw std::logic_error("inconsistent pseudo-vertex count within a class");
    Matrix16 flat;
    flat.fill(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i * n + j)] = c[i][j];
    if (flat < acc.min_matrix) acc.min_matrix = flat;
  }

  // index of a permutation inside ctx->perms (they are sorted)
  std::size_t orbit_index(const std::array<int, kMaxN>& sigma) const {
    const auto it = std::lower_bound(ctx->perms.begin(), ctx->perms.end(), sigma);
    return static_cast<std::size_t>(it - ctx->perms.begin());
  }
};

}  // namespace

std::vector<CatalogRecord> enumerate_classes(int d, const EnumerateOptions& opts) {
  if (d < 1 || d > 3) throw std::invalid_argument("enumerate_classes supports d in {1, 2, 3}");
  const int n = d + 1;

  const Polytrope start(small_simplex(d).matrix().scaled(d));
  const PointConfig vc = start.vertex_config();

  KernelContext ctx;
  ctx.d = d;
  ctx.n = n;
  ctx.span = &detail::spanning_data(d);
  long long maxabs = 0;
  for (int i = 0; i < n; ++i) {
    const TropPoint row = start.vertices()[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) {
      const Rational& c = row[static_cast<std::size_t>(k)];
      if (!is_integer(c)) throw std::logic_error("start simplex must be integral");
      ctx.start_rows[i][k] = static_cast<long long>(numerator(c));
      if (k > 0) maxabs = std::max(maxabs, std::abs(ctx.start_rows[i][k] - ctx.start_rows[i][0]));
    }
  }
  ctx.bound = opts.bound.value_or(maxabs + d + 1);
  if (ctx.bound < maxabs + d + 1)
    throw std::invalid_argument("scan bound must be at least max |coordinate| + d + 1");

  for (const auto& perm : all_permutations(n)) {
    std::array<int, kMaxN> p{};
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i)];
    ctx.perms.push_back(p);
    std::array<std::uint16_t, 16> lut{};
    for (int mask = 0; mask < 16; ++mask) {
      std::uint16_t out = 0;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) out |= static_cast<std::uint16_t>(1u << p[static_cast<std::size_t>(i)]);
      lut[static_cast<std::size_t>(mask)] = out;
    }
    ctx.mask_lut.push_back(lut);
  }

  // open-cell covectors per region, encoded as nibble masks
  const auto regions_pub = valid_regions(vc);
  ctx.region_cells.resize(static_cast<std::size_t>(n));
  for (const auto& r : regions_pub) {
    for (const auto& cell : r.open_cells()) {
      std::uint16_t mask = 0;
      for (int k = 0; k < n; ++k)
        mask |= static_cast<std::uint16_t>((cell.entry(k) & 0xFull) << ctx.shift(k));
      ctx.region_cells[static_cast<std::size_t>(r.vertex_index())].push_back(mask);
    }
  }

  std::vector<RegionScan> regions;
  regions.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) regions.push_back(scan_region(ctx, i));

  // stabilizer of the start matrix inside Sym({0..d})
  std::vector<std::array<int, kMaxN>> stabilizer;
  for (const auto& g : ctx.perms) {
    bool fixes = true;
    for (int i = 0; i < n && fixes; ++i)
      for (int j = 0; j < n && fixes; ++j) {
        const long long lhs = ctx.start_rows[j][i] ;  // c[i][j] = rows[j][i]
        const long long rhs = ctx.start_rows[g[static_cast<std::size_t>(j)]][g[static_cast<std::size_t>(i)]];
        if (lhs != rhs) fixes = false;
      }
    if (fixes) stabilizer.push_back(g);
  }

  unsigned long long total = 1;
  for (const auto& r : regions) total *= static_cast<unsigned long long>(r.reps.size());

  const int jobs = std::max(1, std::min(opts.jobs, 64));
  std::vector<Worker> workers(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers[static_cast<std::size_t>(w)].ctx = &ctx;
    workers[static_cast<std::size_t>(w)].regions = &regions;
    workers[static_cast<std::size_t>(w)].stabilizer = &stabilizer;
  }
  if (jobs == 1) {
    workers[0].run(0, total);
  } else {
    for (int w = 0; w < jobs; ++w) {
      const unsigned long long begin = total * static_cast<unsigned long long>(w) / static_cast<unsigned long long>(jobs);
      const unsigned long long end = total * static_cast<unsigned long long>(w + 1) / static_cast<unsigned long long>(jobs);
      threads.emplace_back([&, w, begin, end] {
        try {
          workers[static_cast<std::size_t>(w)].run(begin, end);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // deterministic merge: canonical key -> lexicographically smallest matrix
  std::map<RawKey, ClassAccum> merged;
  for (const auto& w : workers) {
    for (const auto& acc : w.classes) {
      const auto it = merged.find(acc.canon);
      if (it == merged.end()) {
        merged.emplace(acc.canon, acc);
      } else {
        if (it->second.m != acc.m) throw std::logic_error("worker merge: class invariants disagree");
        if (acc.min_matrix < it->second.min_matrix) it->second.min_matrix = acc.min_matrix;
      }
    }
  }

  std::vector<CatalogRecord> records;
  records.reserve(merged.size());
  for (const auto& [key, acc] : merged) {
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        entries.emplace_back(acc.min_matrix[static_cast<std::size_t>(i * n + j)]);
    Polytrope p{ClosedWeightMatrix(d, std::move(entries))};
    const auto pvs = pseudo_vertices(p);
    if (static_cast<int>(pvs.size()) != acc.m)
      throw std::logic_error("representative pseudo-vertex count disagrees with the kernel");
    const auto facets = ordinary_facets(p, pvs);
    if (static_cast<long long>(pvs.size()) > binom(2 * d, d) ||
        static_cast<long long>(facets.size()) > static_cast<long long>(d) * (d + 1))
      throw std::logic_error("catalog entry violates the face-count bounds");
    if (tropical_vertices(p.vertex_config()).size() != static_cast<std::size_t>(n))
      throw std::logic_error("catalog entry is not a tropical simplex");
    records.push_back(CatalogRecord{tropical_canonical_form(p), ordinary_canonical_form(p),
                                    static_cast<int>(pvs.size()), f_vector(p), p.matrix()});
  }

  std::sort(records.begin(), records.end(), [](const CatalogRecord& a, const CatalogRecord& b) {
    if (a.pseudo_vertex_count != b.pseudo_vertex_count)
      return a.pseudo_vertex_count < b.pseudo_vertex_count;
    return a.tropical_form < b.tropical_form;
  });
  return records;
}

std::vector<ClassTableRow> class_table(const std::vector<CatalogRecord>& catalog) {
  std::map<int, std::pair<int, std::set<OrdinaryForm>>> agg;
  for (const auto& rec : catalog) {
    auto& cell = agg[rec.pseudo_vertex_count];
    cell.first += 1;
    cell.second.insert(rec.ordinary_form);
  }
  std::vector<ClassTableRow> rows;
  rows.reserve(agg.size());
  for (const auto& [m, cell] : agg)
    rows.push_back(ClassTableRow{m, cell.first, static_cast<int>(cell.second.size())});
  return rows;
}

}  // namespace polytrope
