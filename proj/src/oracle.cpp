#include "medianlab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "medianlab/cubes.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/measures.hpp"
#include "medianlab/walls.hpp"

namespace medianlab::oracle {

namespace {

using Mask = std::uint32_t;

std::uint32_t majority(std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  return (x & y) | (y & z) | (x & z);
}

bool majority_closed(std::uint64_t mask, unsigned k) {
  const unsigned verts = 1u << k;
  for (unsigned x = 0; x < verts; ++x) {
    if (!(mask >> x & 1)) continue;
    for (unsigned y = x + 1; y < verts; ++y) {
      if (!(mask >> y & 1)) continue;
      for (unsigned z = y + 1; z < verts; ++z) {
        if ((mask >> z & 1) && !(mask >> majority(x, y, z) & 1)) return false;
      }
    }
  }
  return true;
}

// Vertex maps of the hyperoctahedral group: coordinate permutation, then flip.
std::vector<std::vector<unsigned>> cube_symmetries(unsigned k) {
  std::vector<unsigned> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<unsigned>> out;
  do {
    for (unsigned flip = 0; flip < (1u << k); ++flip) {
      std::vector<unsigned> image(1u << k);
      for (unsigned v = 0; v < image.size(); ++v) {
        unsigned w = 0;
        for (unsigned j = 0; j < k; ++j) w |= ((v >> j) & 1u) << perm[j];
        image[v] = w ^ flip;
      }
      out.push_back(std::move(image));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Mask to_mask(const PointSet& s) {
  Mask out = 0;
  for_each_member(s, [&](Point x) { out |= Mask{1} << x; });
  return out;
}

PointSet from_mask(std::size_t n, Mask mask) {
  PointSet s(n);
  for (std::size_t x = 0; x < n; ++x) s[x] = (mask >> x) & 1;
  return s;
}

// intervals[x * n + y] as a bit mask over the carrier.
std::vector<Mask> interval_masks(const MedianAlgebra& m) {
  const std::size_t n = m.size();
  std::vector<Mask> iv(n * n, 0);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      for (Point z = 0; z < n; ++z) {
        if (m.median(x, y, z) == z) iv[x * n + y] |= Mask{1} << z;
      }
    }
  }
  return iv;
}

bool convex_mask(const std::vector<Mask>& iv, std::size_t n, Mask s) {
  for (Mask a = s; a; a &= a - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(a));
    for (Mask b = a; b; b &= b - 1) {
      const auto y = static_cast<std::size_t>(std::countr_zero(b));
      if (iv[x * n + y] & ~s) return false;
    }
  }
  return true;
}

bool closed_mask(const MedianAlgebra& m, Mask s) {
  const std::vector<Point> pts = members(from_mask(m.size(), s));
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        if (!((s >> m.median(pts[a], pts[b], pts[c])) & 1)) return false;
      }
    }
  }
  return true;
}

// Backtracking search for maps f: points -> target points with
// f(m(x, y, z)) = m'(f x, f y, f z). Source points are assigned in the order
// given; a triple is checked once it and its median are all assigned.
template <typename Visit>
void search_maps(const MedianAlgebra& src, const std::vector<Point>& order,
                 const MedianAlgebra& tgt, bool injective,
                 const std::vector<std::vector<Point>>& allowed, Visit&& visit) {
  const std::size_t n = order.size();
  std::vector<long> position(src.size(), -1);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<long>(i);
  std::vector<Point> image(n, 0);
  std::vector<bool> used(tgt.size(), false);

  auto consistent = [&](std::size_t i) {
    for (std::size_t a = 0; a <= i; ++a) {
      for (std::size_t b = a; b <= i; ++b) {
        for (std::size_t c = b; c <= i; ++c) {
          const long md = position[src.median(order[a], order[b], order[c])];
          if (md < 0) continue;
          const auto top = std::max<std::size_t>(c, static_cast<std::size_t>(md));
          if (top != i) continue;
          if (image[static_cast<std::size_t>(md)] != tgt.median(image[a], image[b], image[c])) {
            return false;
          }
        }
      }
    }
    return true;
  };

  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == n) {
      stop = !visit(image);
      return;
    }
    for (Point v : allowed[i]) {
      if (injective && used[v]) continue;
      image[i] = v;
      if (!consistent(i)) continue;
      used[v] = true;
      self(self, i + 1);
      used[v] = false;
      if (stop) return;
    }
  };
  rec(rec, 0);
}

void diff(RecheckReport& r, const std::string& component, const std::string& witness) {
  r.diffs.push_back(component + ": " + witness);
}

}  // namespace

Corpus enumerate_hypercube_subalgebras(unsigned k) {
  if (k > 4) throw MedianError(ErrorCode::TooLarge, "corpus dimension above 4");
  const unsigned verts = 1u << k;
  const auto syms = cube_symmetries(k);
  std::set<std::pair<unsigned, std::uint64_t>> classes;  // (size, canonical mask)
  const std::uint64_t limit = std::uint64_t{1} << verts;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (!majority_closed(mask, k)) continue;
    std::uint64_t best = mask;
    for (const auto& g : syms) {
      std::uint64_t img = 0;
      for (unsigned v = 0; v < verts; ++v) {
        if (mask >> v & 1) img |= std::uint64_t{1} << g[v];
      }
      best = std::min(best, img);
    }
    classes.emplace(static_cast<unsigned>(std::popcount(mask)), best);
  }

  Corpus corpus{.dim = k, .entries = {}};
  for (const auto& [size, mask] : classes) {
    std::vector<PointSet> coords;
    for (unsigned v = 0; v < verts; ++v) {
      if (!(mask >> v & 1)) continue;
      PointSet c(k);
      for (unsigned j = 0; j < k; ++j) c[j] = (v >> j) & 1;
      coords.push_back(std::move(c));
    }
    const std::string label = "subalgebra #" + std::to_string(corpus.entries.size()) +
                              " of {0,1}^" + std::to_string(k) + " (" +
                              std::to_string(size) + " points)";
    corpus.entries.push_back({label, MedianAlgebra::from_embedding(std::move(coords)), mask});
  }
  return corpus;
}

std::vector<PointSet> brute_walls(const MedianAlgebra& m) {
  const std::size_t n = m.size();
  if (n > 16) throw MedianError(ErrorCode::TooLarge, "brute wall scan above 16 points");
  const auto iv = interval_masks(m);
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<PointSet> out;
  for (Mask s = 1; s < all; s += 2) {  // odd masks contain point 0
    if (convex_mask(iv, n, s) && convex_mask(iv, n, all & ~s)) out.push_back(from_mask(n, s));
  }
  std::sort(out.begin(), out.end(), member_less);
  return out;
}

std::vector<std::uint64_t> find_cube_isomorphism(const MedianAlgebra& m, const PointSet& s) {
  const std::vector<Point> pts = members(s);
  const std::size_t size = pts.size();
  if (size == 0 || !std::has_single_bit(size)) return {};
  const auto k = static_cast<unsigned>(std::countr_zero(size));
  const MedianAlgebra cube = MedianAlgebra::cube(k);
  std::vector<std::vector<Point>> allowed(size);
  allowed[0] = {0};  // vertex transitivity of the cube
  for (std::size_t i = 1; i < size; ++i) {
    allowed[i].resize(size);
    std::iota(allowed[i].begin(), allowed[i].end(), Point{0});
  }
  std::vector<std::uint64_t> found;
  search_maps(m, pts, cube, true, allowed, [&](const std::vector<Point>& image) {
    found.assign(image.begin(), image.end());
    return false;
  });
  return found;
}

std::vector<PointSet> brute_cubes(const MedianAlgebra& m) {
  const std::size_t n = m.size();
  if (n > 16) throw MedianError(ErrorCode::TooLarge, "brute cube scan above 16 points");
  std::vector<PointSet> out;
  for (std::size_t size = 1; size <= n; size *= 2) {
    // Gosper's hack over all masks with `size` bits.
    Mask s = (Mask{1} << size) - 1;
    const Mask limit = Mask{1} << n;
    while (s < limit) {
      if (closed_mask(m, s)) {
        const PointSet set = from_mask(n, s);
        if (!find_cube_isomorphism(m, set).empty()) out.push_back(set);
      }
      const Mask c = s & -s;
      const Mask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return member_less(a, b);
  });
  return out;
}

PointSet brute_hull(const MedianAlgebra& m, const PointSet& s) {
  PointSet cur = s;
  for (;;) {
    PointSet next = cur;
    for_each_member(cur, [&](Point x) {
      for_each_member(cur, [&](Point y) {
        for (Point z = 0; z < m.size(); ++z) {
          if (m.median(x, y, z) == z) next.set(z);
        }
      });
    });
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

long brute_gate(const MedianAlgebra& m, Point x, const PointSet& c) {
  long found = -1;
  for_each_member(c, [&](Point g) {
    bool on_all = true;
    for_each_member(c, [&](Point y) { on_all = on_all && m.median(x, y, g) == g; });
    if (!on_all) return;
    found = found < 0 ? static_cast<long>(g) : -2;
  });
  return found < 0 ? -1 : found;
}

std::vector<PointSet> brute_uniform_fixed(const MedianAlgebra& m) {
  const std::size_t n = m.size();
  if (n > 16) throw MedianError(ErrorCode::TooLarge, "uniform fixed-point scan above 16 points");
  std::vector<PointSet> out;
  std::vector<std::size_t> hits(n);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const std::vector<Point> pts = members(from_mask(n, s));
    std::fill(hits.begin(), hits.end(), 0);
    for (Point x : pts) {
      for (Point y : pts) {
        for (Point z : pts) ++hits[m.median(x, y, z)];
      }
    }
    const std::size_t want = pts.size() * pts.size();
    bool fixed = true;
    for (Point z = 0; z < n && fixed; ++z) fixed = hits[z] == ((s >> z & 1) ? want : 0);
    if (fixed) out.push_back(from_mask(n, s));
  }
  std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return member_less(a, b);
  });
  return out;
}

RecheckReport brute_recheck(const MedianAlgebra& m, std::uint64_t seed) {
  const std::size_t n = m.size();
  if (n > 16) throw MedianError(ErrorCode::TooLarge, "brute recheck above 16 points");
  RecheckReport r;
  r.n = n;

  // walls
  const std::vector<PointSet> bw = brute_walls(m);
  std::vector<PointSet> ow;
  for (const Wall& w : enumerate_walls(m)) ow.push_back(w.canonical_side());
  r.walls = bw.size();
  for (const PointSet& s : bw) {
    if (std::find(ow.begin(), ow.end(), s) == ow.end()) diff(r, "walls", "missing " + to_bitstring(s));
  }
  for (const PointSet& s : ow) {
    if (std::find(bw.begin(), bw.end(), s) == bw.end()) diff(r, "walls", "spurious " + to_bitstring(s));
  }

  // cubes
  const std::vector<PointSet> bc = brute_cubes(m);
  std::vector<PointSet> oc;
  const std::vector<Cube> cubes = enumerate_cubes(m);
  for (const Cube& c : cubes) oc.push_back(c.members);
  r.cubes = bc.size();
  if (bc != oc) {
    for (const PointSet& s : bc) {
      if (std::find(oc.begin(), oc.end(), s) == oc.end()) diff(r, "cubes", "missing " + to_bitstring(s));
    }
    for (const PointSet& s : oc) {
      if (std::find(bc.begin(), bc.end(), s) == bc.end()) diff(r, "cubes", "spurious " + to_bitstring(s));
    }
    if (r.diffs.empty()) diff(r, "cubes", "order differs");
  }

  // hulls, collecting the convex sets they produce
  std::vector<PointSet> subsets;
  if (n <= 12) {
    for (Mask s = 1; s < (Mask{1} << n); ++s) subsets.push_back(from_mask(n, s));
  } else {
    for (Point x = 0; x < n; ++x) {
      for (Point y = x; y < n; ++y) {
        for (Point z = y; z < n; ++z) subsets.push_back(make_set(n, {x, y, z}));
      }
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 512; ++i) {
      const Mask s = static_cast<Mask>(rng() % ((Mask{1} << n) - 1)) + 1;
      subsets.push_back(from_mask(n, s));
    }
  }
  std::set<Mask> convex_sets;
  for (const PointSet& s : subsets) {
    const PointSet brute = brute_hull(m, s);
    const PointSet fast = convex_hull(m, s).members();
    ++r.hulls_checked;
    if (brute != fast) {
      diff(r, "hull", to_bitstring(s) + " -> " + to_bitstring(fast) + ", expected " + to_bitstring(brute));
    }
    convex_sets.insert(to_mask(brute));
  }

  // gates on every convex set met above
  for (Mask cm : convex_sets) {
    const PointSet c = from_mask(n, cm);
    const ConvexSet cs = ConvexSet::checked(m, c);
    for (Point x = 0; x < n; ++x) {
      const long brute = brute_gate(m, x, c);
      const Point fast = gate(m, x, cs);
      ++r.gates_checked;
      if (brute != static_cast<long>(fast)) {
        diff(r, "gate", "x=" + std::to_string(x) + " C=" + to_bitstring(c) + " -> " +
                            std::to_string(fast) + ", expected " + std::to_string(brute));
      }
    }
  }

  // uniform Phi-fixed sets are exactly the cubes, and every cubical measure is fixed
  const std::vector<PointSet> fixed = brute_uniform_fixed(m);
  r.fixed_measures = fixed.size();
  if (fixed != bc) {
    for (const PointSet& s : fixed) {
      if (std::find(bc.begin(), bc.end(), s) == bc.end()) diff(r, "phi-fixed", "non-cube " + to_bitstring(s));
    }
    for (const PointSet& s : bc) {
      if (std::find(fixed.begin(), fixed.end(), s) == fixed.end()) diff(r, "phi-fixed", "cube not fixed " + to_bitstring(s));
    }
  }
  for (const Cube& c : cubes) {
    if (!is_balanced(m, cubical_measure(c))) diff(r, "phi-fixed", "cubical measure moved " + to_bitstring(c.members));
  }
  return r;
}

void require_clean(const RecheckReport& report) {
  if (!report.ok()) throw MedianError(ErrorCode::Mismatch, report.diffs.front());
}

std::vector<Permutation> automorphisms(const MedianAlgebra& m) {
  std::vector<Point> order(m.size());
  std::iota(order.begin(), order.end(), Point{0});
  const std::vector<std::vector<Point>> allowed(m.size(), order);
  std::vector<Permutation> out;
  search_maps(m, order, m, true, allowed, [&](const std::vector<Point>& image) {
    out.push_back(image);
    return true;
  });
  return out;
}

std::vector<std::vector<Point>> surjective_cube_morphisms(const MedianAlgebra& m, unsigned k) {
  const MedianAlgebra cube = MedianAlgebra::cube(k);
  std::vector<Point> order(m.size());
  std::iota(order.begin(), order.end(), Point{0});
  std::vector<Point> targets(cube.size());
  std::iota(targets.begin(), targets.end(), Point{0});
  const std::vector<std::vector<Point>> allowed(m.size(), targets);
  std::vector<std::vector<Point>> out;
  search_maps(m, order, cube, false, allowed, [&](const std::vector<Point>& image) {
    std::vector<bool> hit(cube.size(), false);
    for (Point v : image) hit[v] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) out.push_back(image);
    return true;
  });
  return out;
}

}  // namespace medianlab::oracle
