#include "medianlab/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

#include "medianlab/errors.hpp"

namespace medianlab {

namespace {

std::size_t idx3(std::size_t n, Point x, Point y, Point z) {
  return (static_cast<std::size_t>(x) * n + y) * n + z;
}

PointSet majority(const PointSet& a, const PointSet& b, const PointSet& c) {
  return (a & b) | (a & c) | (b & c);
}

std::string tuple_text(const std::vector<Point>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

}  // namespace

std::string ValidationReport::describe() const {
  if (ok()) return "valid median algebra on " + std::to_string(n) + " points";
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) os << "; ";
    os << "axiom " << failures[i].axiom << " fails at "
       << tuple_text(failures[i].witness);
  }
  if (sampled) os << " (axiom 3 sampled)";
  return os.str();
}

ValidationReport check_axioms(std::size_t n, std::span<const Point> t,
                              std::size_t samples, std::uint64_t seed) {
  ValidationReport report;
  report.n = n;
  auto at = [&](Point x, Point y, Point z) { return t[idx3(n, x, y, z)]; };

  [&] {
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        for (Point z = 0; z < n; ++z) {
          Point v = at(x, y, z);
          if (v != at(x, z, y) || v != at(y, x, z)) {
            report.failures.push_back({1, {x, y, z}});
            return;
          }
        }
  }();
  [&] {
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        if (at(x, x, y) != x) {
          report.failures.push_back({2, {x, x, y}});
          return;
        }
  }();

  auto assoc_ok = [&](Point x, Point y, Point z, Point u, Point v) {
    return at(at(x, y, z), u, v) == at(x, at(y, u, v), at(z, u, v));
  };
  if (n <= MedianAlgebra::kMaxTablePoints) {
    [&] {
      for (Point x = 0; x < n; ++x)
        for (Point y = 0; y < n; ++y)
          for (Point z = 0; z < n; ++z) {
            Point m = at(x, y, z);
            for (Point u = 0; u < n; ++u)
              for (Point v = 0; v < n; ++v) {
                if (at(m, u, v) != at(x, at(y, u, v), at(z, u, v))) {
                  report.failures.push_back({3, {x, y, z, u, v}});
                  return;
                }
              }
          }
    }();
  } else {
    report.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(n - 1));
    for (std::size_t i = 0; i < samples; ++i) {
      Point x = pick(rng), y = pick(rng), z = pick(rng), u = pick(rng),
            v = pick(rng);
      if (!assoc_ok(x, y, z, u, v)) {
        report.failures.push_back({3, {x, y, z, u, v}});
        break;
      }
    }
  }
  return report;
}

struct MedianAlgebra::Data {
  std::size_t n = 0;
  std::vector<std::uint8_t> table;  // n^3, present iff n <= kMaxTablePoints
  std::vector<PointSet> coords;     // hypercube embedding, may be empty
  std::unordered_map<PointSet, Point, PointSetHash> index;
  std::vector<PointSet> intervals;  // n*n, present iff n <= kMaxIntervalCache

  Point med(Point x, Point y, Point z) const {
    if (!table.empty()) return table[idx3(n, x, y, z)];
    return index.at(majority(coords[x], coords[y], coords[z]));
  }

  bool in_interval(Point z, Point x, Point y) const {
    if (!intervals.empty()) return intervals[x * n + y].test(z);
    if (!coords.empty()) {
      return ((coords[z] ^ coords[x]) & ~(coords[x] ^ coords[y])).none();
    }
    return med(x, y, z) == z;
  }

  void build_intervals() {
    if (n > kMaxIntervalCache) return;
    std::vector<PointSet> cache(n * n, PointSet(n));
    for (Point x = 0; x < n; ++x) {
      for (Point y = x; y < n; ++y) {
        PointSet s(n);
        for (Point z = 0; z < n; ++z) {
          if (in_interval(z, x, y)) s.set(z);
        }
        cache[x * n + y] = s;
        cache[y * n + x] = std::move(s);
      }
    }
    intervals = std::move(cache);
  }
};

MedianAlgebra::MedianAlgebra(std::shared_ptr<const Data> data)
    : d_(std::move(data)) {}

MedianAlgebra MedianAlgebra::from_table(std::size_t n, std::vector<Point> table) {
  if (n == 0) throw MedianError(ErrorCode::InvalidInput, "empty carrier");
  if (n > kMaxTablePoints) {
    throw MedianError(ErrorCode::TooLarge,
                      "median tables are limited to " +
                          std::to_string(kMaxTablePoints) +
                          " points; supply an embedding instead");
  }
  if (table.size() != n * n * n) {
    throw MedianError(ErrorCode::InvalidInput,
                      "median table must have n^3 = " + std::to_string(n * n * n) +
                          " entries, got " + std::to_string(table.size()));
  }
  for (Point v : table) {
    if (v >= n) {
      throw MedianError(ErrorCode::InvalidInput,
                        "median table value " + std::to_string(v) + " out of range");
    }
  }
  ValidationReport report = check_axioms(n, table);
  if (!report.ok()) throw MedianError(ErrorCode::AxiomViolation, report.describe());

  auto d = std::make_shared<Data>();
  d->n = n;
  d->table.assign(table.begin(), table.end());
  d->build_intervals();
  return MedianAlgebra(std::move(d));
}

MedianAlgebra MedianAlgebra::from_embedding(std::vector<PointSet> coords) {
  if (coords.empty()) throw MedianError(ErrorCode::InvalidInput, "empty carrier");
  const std::size_t k = coords.front().size();
  auto d = std::make_shared<Data>();
  d->n = coords.size();
  for (Point i = 0; i < coords.size(); ++i) {
    if (coords[i].size() != k) {
      throw MedianError(ErrorCode::InvalidInput,
                        "embedding bit-strings must share one length");
    }
    if (!d->index.emplace(coords[i], i).second) {
      throw MedianError(ErrorCode::InvalidInput,
                        "duplicate embedding vector for point " + std::to_string(i));
    }
  }
  d->coords = std::move(coords);
  const std::size_t n = d->n;
  auto not_closed = [&](Point x, Point y, Point z) {
    return MedianError(ErrorCode::InvalidInput,
                       "embedding not closed under majority at (" +
                           std::to_string(x) + "," + std::to_string(y) + "," +
                           std::to_string(z) + ")");
  };
  if (n <= kMaxTablePoints) {
    std::vector<std::uint8_t> table(n * n * n);
    for (Point x = 0; x < n; ++x)
      for (Point y = x; y < n; ++y)
        for (Point z = y; z < n; ++z) {
          auto it = d->index.find(majority(d->coords[x], d->coords[y], d->coords[z]));
          if (it == d->index.end()) throw not_closed(x, y, z);
          const auto v = static_cast<std::uint8_t>(it->second);
          for (auto [a, b, c] : {std::array{x, y, z}, std::array{x, z, y},
                                 std::array{y, x, z}, std::array{y, z, x},
                                 std::array{z, x, y}, std::array{z, y, x}}) {
            table[idx3(n, a, b, c)] = v;
          }
        }
    d->table = std::move(table);
  } else {
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(n - 1));
    for (int i = 0; i < 1'000'000; ++i) {
      Point x = pick(rng), y = pick(rng), z = pick(rng);
      if (!d->index.contains(majority(d->coords[x], d->coords[y], d->coords[z]))) {
        throw not_closed(x, y, z);
      }
    }
  }
  d->build_intervals();
  return MedianAlgebra(std::move(d));
}

MedianAlgebra MedianAlgebra::cube(unsigned dim) {
  if (dim > 20) throw MedianError(ErrorCode::TooLarge, "cube dimension above 20");
  std::vector<PointSet> coords;
  const std::size_t n = std::size_t{1} << dim;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coords.emplace_back(dim, i);
  return from_embedding(std::move(coords));
}

MedianAlgebra MedianAlgebra::product(const MedianAlgebra& left,
                                     const MedianAlgebra& right) {
  const std::size_t nl = left.size(), nr = right.size();
  if (left.has_embedding() && right.has_embedding()) {
    const std::size_t kl = left.embedding_dim(), kr = right.embedding_dim();
    std::vector<PointSet> coords;
    coords.reserve(nl * nr);
    for (Point a = 0; a < nl; ++a) {
      for (Point b = 0; b < nr; ++b) {
        PointSet c(kl + kr);
        for (std::size_t i = 0; i < kl; ++i) c[i] = left.coordinates(a)[i];
        for (std::size_t i = 0; i < kr; ++i) c[kl + i] = right.coordinates(b)[i];
        coords.push_back(std::move(c));
      }
    }
    return from_embedding(std::move(coords));
  }
  const std::size_t n = nl * nr;
  if (n > kMaxTablePoints) {
    throw MedianError(ErrorCode::TooLarge, "product too large without embeddings");
  }
  std::vector<Point> table(n * n * n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z) {
        Point a = left.median(x / nr, y / nr, z / nr);
        Point b = right.median(x % nr, y % nr, z % nr);
        table[idx3(n, x, y, z)] = static_cast<Point>(a * nr + b);
      }
  return from_table(n, std::move(table));
}

std::size_t MedianAlgebra::size() const { return d_->n; }

Point MedianAlgebra::median(Point x, Point y, Point z) const {
  return d_->med(x, y, z);
}

bool MedianAlgebra::in_interval(Point z, Point x, Point y) const {
  return d_->in_interval(z, x, y);
}

PointSet MedianAlgebra::interval_set(Point x, Point y) const {
  if (!d_->intervals.empty()) return d_->intervals[x * d_->n + y];
  PointSet s(d_->n);
  for (Point z = 0; z < d_->n; ++z) {
    if (d_->in_interval(z, x, y)) s.set(z);
  }
  return s;
}

bool MedianAlgebra::has_table() const { return !d_->table.empty(); }
bool MedianAlgebra::has_embedding() const { return !d_->coords.empty(); }

std::size_t MedianAlgebra::embedding_dim() const {
  return d_->coords.empty() ? 0 : d_->coords.front().size();
}

const PointSet& MedianAlgebra::coordinates(Point x) const { return d_->coords.at(x); }

std::optional<Point> MedianAlgebra::find_coordinates(const PointSet& c) const {
  auto it = d_->index.find(c);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::vector<Point> MedianAlgebra::table() const {
  const std::size_t n = d_->n;
  if (n > 1024) throw MedianError(ErrorCode::TooLarge, "table would exceed 1024^3 entries");
  if (!d_->table.empty()) return {d_->table.begin(), d_->table.end()};
  std::vector<Point> t(n * n * n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z) t[idx3(n, x, y, z)] = d_->med(x, y, z);
  return t;
}

MedianAlgebra MedianAlgebra::restrict_to(const PointSet& subset,
                                         std::vector<Point>* index_map) const {
  if (subset.none()) throw MedianError(ErrorCode::InvalidInput, "empty subset");
  if (!is_subalgebra(*this, subset)) {
    throw MedianError(ErrorCode::NotSubalgebra,
                      "subset " + to_bitstring(subset) + " is not median-closed");
  }
  std::vector<Point> pts = members(subset);
  if (index_map) *index_map = pts;
  if (has_embedding()) {
    std::vector<PointSet> coords;
    coords.reserve(pts.size());
    for (Point p : pts) coords.push_back(d_->coords[p]);
    return from_embedding(std::move(coords));
  }
  const std::size_t m = pts.size();
  std::vector<Point> inverse(d_->n, 0);
  for (Point i = 0; i < m; ++i) inverse[pts[i]] = i;
  std::vector<Point> t(m * m * m);
  for (Point x = 0; x < m; ++x)
    for (Point y = 0; y < m; ++y)
      for (Point z = 0; z < m; ++z)
        t[idx3(m, x, y, z)] = inverse[d_->med(pts[x], pts[y], pts[z])];
  return from_table(m, std::move(t));
}

MedianAlgebra MedianAlgebra::relabel(const std::vector<Point>& perm) const {
  const std::size_t n = d_->n;
  if (perm.size() != n) throw MedianError(ErrorCode::InvalidInput, "relabel size mismatch");
  if (has_embedding()) {
    std::vector<PointSet> coords(n);
    for (Point x = 0; x < n; ++x) coords[perm[x]] = d_->coords[x];
    return from_embedding(std::move(coords));
  }
  std::vector<Point> t(n * n * n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z)
        t[idx3(n, perm[x], perm[y], perm[z])] = perm[d_->med(x, y, z)];
  return from_table(n, std::move(t));
}

bool MedianAlgebra::operator==(const MedianAlgebra& other) const {
  if (d_ == other.d_) return true;
  if (size() != other.size()) return false;
  if (has_embedding() && other.has_embedding()) return d_->coords == other.d_->coords;
  return table() == other.table();
}

// --- ConvexSet and primitive operations ------------------------------------

ConvexSet ConvexSet::checked(const MedianAlgebra& m, PointSet s) {
  if (s.size() != m.size()) throw MedianError(ErrorCode::InvalidInput, "universe mismatch");
  if (!is_convex(m, s)) {
    throw MedianError(ErrorCode::NotConvex, "set " + to_bitstring(s) + " is not convex");
  }
  return ConvexSet(std::move(s), {});
}

Point median(const MedianAlgebra& m, Point x, Point y, Point z) {
  return m.median(x, y, z);
}

ConvexSet interval(const MedianAlgebra& m, Point x, Point y) {
  return ConvexSet(m.interval_set(x, y), {x, y});
}

PointSet join(const MedianAlgebra& m, const PointSet& a, const PointSet& b) {
  PointSet out = m.empty_set();
  for_each_member(a, [&](Point x) {
    for_each_member(b, [&](Point y) { out |= m.interval_set(x, y); });
  });
  return out;
}

ConvexSet convex_hull(const MedianAlgebra& m, const PointSet& s) {
  if (s.none()) throw MedianError(ErrorCode::InvalidInput, "convex hull of empty set");
  std::vector<Point> gens = members(s);
  PointSet hull = singleton(m.size(), gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (hull.test(gens[i])) continue;
    hull = join(m, hull, singleton(m.size(), gens[i]));
  }
  return ConvexSet(std::move(hull), std::move(gens));
}

Point gate(const MedianAlgebra& m, Point x, const ConvexSet& c) {
  const PointSet& s = c.members();
  auto first = s.find_first();
  if (first == PointSet::npos) throw MedianError(ErrorCode::InvalidInput, "gate into empty set");
  // Each step lands in [x, c] for the current c, and [x, g] shrinks monotonically.
  Point g = static_cast<Point>(first);
  for_each_member(s, [&](Point z) { g = m.median(x, g, z); });
  return g;
}

Point gate(const MedianAlgebra& m, Point x, const PointSet& c) {
  return gate(m, x, ConvexSet::checked(m, c));
}

std::vector<Point> gate_projection(const MedianAlgebra& m, const ConvexSet& c) {
  std::vector<Point> out(m.size());
  for (Point x = 0; x < m.size(); ++x) out[x] = gate(m, x, c);
  return out;
}

bool is_convex(const MedianAlgebra& m, const PointSet& s) {
  const std::vector<Point> pts = members(s);
  const bool cached = m.size() <= MedianAlgebra::kMaxIntervalCache;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (cached) {
        if (!m.interval_set(pts[i], pts[j]).is_subset_of(s)) return false;
      } else {
        for (Point z = 0; z < m.size(); ++z) {
          if (!s.test(z) && m.in_interval(z, pts[i], pts[j])) return false;
        }
      }
    }
  }
  return true;
}

bool is_subalgebra(const MedianAlgebra& m, const PointSet& s) {
  const std::vector<Point> pts = members(s);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (!s.test(m.median(pts[i], pts[j], pts[k]))) return false;
  return true;
}

PointSet median_closure(const MedianAlgebra& m, const PointSet& s) {
  PointSet closed = s;
  std::vector<Point> pts = members(s);
  // Every new point is combined with all pairs seen so far, so the final set
  // is closed once the worklist drains.
  for (std::size_t next = 0; next < pts.size(); ++next) {
    const Point p = pts[next];
    for (std::size_t i = 0; i <= next; ++i) {
      for (std::size_t j = i; j <= next; ++j) {
        Point q = m.median(p, pts[i], pts[j]);
        if (!closed.test(q)) {
          closed.set(q);
          pts.push_back(q);
        }
      }
    }
  }
  return closed;
}

SubsetFlags classify_subset(const MedianAlgebra& m, const PointSet& s) {
  SubsetFlags flags;
  flags.convex = is_convex(m, s);
  flags.subalgebra = is_subalgebra(m, s);
  const std::vector<Point> pts = members(s);
  flags.gate_convex = !pts.empty();
  for (Point x = 0; x < m.size() && flags.gate_convex; ++x) {
    bool found = false;
    for (Point y : pts) {
      bool on_all = true;
      for (Point z : pts) {
        if (!m.in_interval(y, x, z)) {
          on_all = false;
          break;
        }
      }
      if (on_all) {
        found = true;
        break;
      }
    }
    flags.gate_convex = found;
  }
  return flags;
}

// --- Morphism --------------------------------------------------------------

std::optional<std::array<Point, 3>> morphism_violation(const MedianAlgebra& src,
                                                       const MedianAlgebra& tgt,
                                                       std::span<const Point> f,
                                                       std::uint64_t seed) {
  const std::size_t n = src.size();
  auto bad = [&](Point x, Point y, Point z) {
    return f[src.median(x, y, z)] != tgt.median(f[x], f[y], f[z]);
  };
  if (n <= MedianAlgebra::kMaxTablePoints) {
    for (Point x = 0; x < n; ++x)
      for (Point y = x; y < n; ++y)
        for (Point z = y; z < n; ++z)
          if (bad(x, y, z)) return std::array{x, y, z};
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Point> pick(0, static_cast<Point>(n - 1));
  for (int i = 0; i < 1'000'000; ++i) {
    Point x = pick(rng), y = pick(rng), z = pick(rng);
    if (bad(x, y, z)) return std::array{x, y, z};
  }
  return std::nullopt;
}

Morphism Morphism::checked(MedianAlgebra source, MedianAlgebra target,
                           std::vector<Point> map) {
  if (map.size() != source.size()) {
    throw MedianError(ErrorCode::InvalidInput, "morphism table size mismatch");
  }
  for (Point v : map) {
    if (v >= target.size()) throw MedianError(ErrorCode::InvalidInput, "morphism value out of range");
  }
  if (auto w = morphism_violation(source, target, map)) {
    throw MedianError(ErrorCode::NotMorphism,
                      "map does not commute with the median at (" +
                          std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) +
                          "," + std::to_string((*w)[2]) + ")");
  }
  return Morphism(std::move(source), std::move(target), std::move(map));
}

bool Morphism::is_surjective() const {
  PointSet hit = target_.empty_set();
  for (Point v : map_) hit.set(v);
  return hit.all();
}

bool Morphism::is_injective() const {
  PointSet hit = target_.empty_set();
  for (Point v : map_) {
    if (hit.test(v)) return false;
    hit.set(v);
  }
  return true;
}

}  // namespace medianlab
