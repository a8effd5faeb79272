#include "medianlab/measures.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "medianlab/errors.hpp"

namespace medianlab {

// --- Measure ---------------------------------------------------------------

Measure Measure::checked(std::vector<Rational> weights) {
  if (weights.empty()) throw MedianError(ErrorCode::InvalidInput, "measure on empty carrier");
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw MedianError(ErrorCode::InvalidInput, "negative weight " + format_rational(w));
    total += w;
  }
  if (total != 1) {
    throw MedianError(ErrorCode::InvalidInput, "weights sum to " + format_rational(total));
  }
  return Measure(std::move(weights));
}

Measure Measure::dirac(std::size_t n, Point x) {
  std::vector<Rational> w(n, Rational(0));
  w.at(x) = 1;
  return Measure(std::move(w));
}

Measure Measure::uniform_on(const PointSet& support) {
  const auto k = support.count();
  if (k == 0) throw MedianError(ErrorCode::InvalidInput, "uniform measure on empty set");
  std::vector<Rational> w(support.size(), Rational(0));
  for_each_member(support, [&](Point x) { w[x] = Rational(1, static_cast<unsigned long>(k)); });
  return Measure(std::move(w));
}

PointSet Measure::support() const {
  PointSet s(weights_.size());
  for (Point x = 0; x < weights_.size(); ++x) {
    if (weights_[x] > 0) s.set(x);
  }
  return s;
}

Rational Measure::mass(const PointSet& s) const {
  Rational total = 0;
  for_each_member(s, [&](Point x) { total += weights_[x]; });
  return total;
}

std::vector<double> Measure::to_double() const {
  std::vector<double> out;
  out.reserve(weights_.size());
  for (const Rational& w : weights_) out.push_back(w.get_d());
  return out;
}

Measure Measure::pushforward(std::span<const Point> map, std::size_t target_size) const {
  std::vector<Rational> w(target_size, Rational(0));
  for (Point x = 0; x < weights_.size(); ++x) w.at(map[x]) += weights_[x];
  return Measure(std::move(w));
}

// --- Self-median operator --------------------------------------------------

Measure phi(const MedianAlgebra& m, const Measure& eta) {
  const std::vector<Point> supp = members(eta.support());
  std::vector<Rational> out(m.size(), Rational(0));
  Rational pair;
  for (Point x : supp) {
    for (Point y : supp) {
      pair = eta[x] * eta[y];
      for (Point z : supp) out[m.median(x, y, z)] += pair * eta[z];
    }
  }
  return Measure::checked(std::move(out));
}

std::vector<double> phi(const MedianAlgebra& m, std::span<const double> eta) {
  std::vector<Point> supp;
  for (Point x = 0; x < eta.size(); ++x) {
    if (eta[x] > 0) supp.push_back(x);
  }
  std::vector<double> out(m.size(), 0.0);
  for (Point x : supp) {
    for (Point y : supp) {
      const double pair = eta[x] * eta[y];
      for (Point z : supp) out[m.median(x, y, z)] += pair * eta[z];
    }
  }
  return out;
}

bool is_balanced(const MedianAlgebra& m, const Measure& eta) { return phi(m, eta) == eta; }

Measure cubical_measure(const Cube& cube) { return Measure::uniform_on(cube.members); }

Measure cubical_measure(const MedianAlgebra& m, const PointSet& cube_members) {
  if (!recognize_cube(m, cube_members)) {
    throw MedianError(ErrorCode::NotCube, "set " + to_bitstring(cube_members) + " is not a cube");
  }
  return Measure::uniform_on(cube_members);
}

Measure random_measure(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<mpz_class> raw(n);
  mpz_class total = 0;
  for (auto& r : raw) {
    r = static_cast<unsigned long>(rng() % 1000 + 1);
    total += r;
  }
  std::vector<Rational> w;
  w.reserve(n);
  for (const auto& r : raw) {
    Rational q(r, total);
    q.canonicalize();
    w.push_back(q);
  }
  return Measure::checked(std::move(w));
}

std::size_t FixedPointSearch::within_tol_count() const {
  return static_cast<std::size_t>(
      std::count_if(runs.begin(), runs.end(), [](const FixedPointRun& r) { return r.within_tol; }));
}

FixedPointSearch find_phi_fixed_points(const MedianAlgebra& m, std::size_t starts,
                                       std::size_t iters, double tol, std::uint64_t seed) {
  if (!(tol > 0)) throw MedianError(ErrorCode::InvalidInput, "tolerance must be positive");
  FixedPointSearch search;
  search.cubes = enumerate_cubes(m);
  std::vector<std::vector<double>> cubical;
  for (const Cube& c : search.cubes) {
    const Measure lambda = cubical_measure(c);
    search.cube_is_fixed.push_back(is_balanced(m, lambda));
    cubical.push_back(lambda.to_double());
  }

  for (std::size_t i = 0; i < starts; ++i) {
    FixedPointRun run{.start = random_measure(m.size(), derive_seed(seed, i)), .terminal = {}};
    std::vector<double> x = run.start.to_double();
    for (std::size_t it = 0; it < iters; ++it) {
      std::vector<double> y = phi(m, x);
      // Phi preserves total mass 1 exactly; in double the excess triples per step
      const double total = std::accumulate(y.begin(), y.end(), 0.0);
      for (double& v : y) v /= total;
      run.last_step = total_variation(x, y);
      x = std::move(y);
    }
    run.distance = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < cubical.size(); ++c) {
      const double d = total_variation(x, cubical[c]);
      if (d < run.distance) {
        run.distance = d;
        run.nearest_cube = c;
      }
    }
    run.within_tol = run.distance < tol;
    run.terminal = std::move(x);
    search.runs.push_back(std::move(run));
  }
  return search;
}

// --- Half-space mass spectrum ----------------------------------------------

std::vector<MassEntry> halfspace_mass(const MedianAlgebra& m, const Measure& eta,
                                      const std::vector<Wall>& walls, std::size_t max_family) {
  if (!is_balanced(m, eta)) {
    throw MedianError(ErrorCode::InvalidInput, "mass spectrum needs a balanced measure");
  }
  std::vector<MassEntry> out;
  std::vector<std::size_t> family;
  auto visit = [&](auto&& self, std::size_t from, const PointSet& inter) -> void {
    if (!family.empty()) {
      Rational mass = eta.mass(inter);
      if (!is_dyadic_mass(mass, static_cast<unsigned>(family.size()))) {
        std::string ids;
        for (auto f : family) ids += (ids.empty() ? "" : ",") + std::to_string(f);
        throw MedianError(ErrorCode::SpectrumViolation,
                          "walls {" + ids + "} intersect in mass " + format_rational(mass));
      }
      out.push_back({family, std::move(mass)});
    }
    if (family.size() == max_family) return;
    for (std::size_t i = from; i < walls.size(); ++i) {
      family.push_back(i);
      self(self, i + 1, inter & walls[i].canonical_side());
      family.pop_back();
    }
  };
  visit(visit, 0, m.universe());
  return out;
}

// --- Group measures and convolution ----------------------------------------

namespace {

std::string invert_word(const std::string& word) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : word) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  std::string out;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    std::string t = *it;
    if (t == "e" || t == "id" || t == "1") {
    } else if (t.size() > 3 && t.ends_with("^-1")) {
      t.resize(t.size() - 3);
    } else if (t.size() > 1 && t.back() == '\'') {
      t.pop_back();
    } else {
      t += "^-1";
    }
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out.empty() ? "e" : out;
}

}  // namespace

GroupMeasure GroupMeasure::from_words(const GroupAction& action,
                                      const std::vector<std::pair<std::string, Rational>>& entries) {
  GroupMeasure mu;
  Rational total = 0;
  for (const auto& [word, weight] : entries) {
    if (weight < 0) throw MedianError(ErrorCode::InvalidInput, "negative weight on '" + word + "'");
    total += weight;
    mu.words_.push_back(word);
    mu.weights_.push_back(weight);
    mu.elements_.push_back(action.evaluate(word));
  }
  if (total != 1) {
    throw MedianError(ErrorCode::InvalidInput,
                      "group measure weights sum to " + format_rational(total));
  }
  return mu;
}

GroupMeasure GroupMeasure::uniform_on_group(const GroupAction& action) {
  // Breadth-first enumeration keeps a shortest word for each element.
  std::map<Permutation, std::string> seen;
  std::vector<Permutation> order{identity_permutation(action.algebra().size())};
  seen.emplace(order.front(), "e");
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::string base = seen.at(order[i]);
    for (std::size_t g = 0; g < action.generator_count(); ++g) {
      Permutation p = compose(order[i], action.generator(g));
      if (seen.contains(p)) continue;
      seen.emplace(p, base == "e" ? action.name(g) : base + " " + action.name(g));
      order.push_back(std::move(p));
      if (order.size() > 1'000'000) throw MedianError(ErrorCode::TooLarge, "group too large");
    }
  }
  GroupMeasure mu;
  const Rational w(1, static_cast<unsigned long>(order.size()));
  for (const Permutation& p : order) {
    mu.words_.push_back(seen.at(p));
    mu.weights_.push_back(w);
    mu.elements_.push_back(p);
  }
  return mu;
}

GroupMeasure GroupMeasure::inverted() const {
  GroupMeasure out;
  out.weights_ = weights_;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_.push_back(invert_word(words_[i]));
    out.elements_.push_back(inverse(elements_[i]));
  }
  return out;
}

bool is_generating(const GroupAction& action, const GroupMeasure& mu) {
  std::vector<Permutation> support;
  for (std::size_t i = 0; i < mu.elements().size(); ++i) {
    if (mu.weights()[i] > 0) support.push_back(mu.elements()[i]);
  }
  if (support.empty()) return false;
  const std::vector<Permutation> closure = generated_semigroup(support);
  for (const Permutation& g : action.generators()) {
    if (!std::binary_search(closure.begin(), closure.end(), g)) return false;
  }
  return true;
}

Measure convolve(const GroupMeasure& mu, const Measure& nu) {
  std::vector<Rational> out(nu.size(), Rational(0));
  for (std::size_t i = 0; i < mu.elements().size(); ++i) {
    const Rational& w = mu.weights()[i];
    if (w == 0) continue;
    const Permutation& g = mu.elements()[i];
    if (g.size() != nu.size()) throw MedianError(ErrorCode::InvalidInput, "measure size mismatch");
    for (Point x = 0; x < nu.size(); ++x) {
      if (nu[x] != 0) out[g[x]] += w * nu[x];
    }
  }
  return Measure::checked(std::move(out));
}

std::vector<std::vector<Rational>> transition_matrix(std::size_t n, const GroupMeasure& mu) {
  std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < mu.elements().size(); ++i) {
    const Permutation& g = mu.elements()[i];
    for (Point x = 0; x < n; ++x) p[x][g[x]] += mu.weights()[i];
  }
  return p;
}

// --- Exact linear algebra and the stationary polytope ----------------------

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Unique solution of an overdetermined but consistent system [A | b].
std::vector<Rational> solve_unique(std::vector<std::vector<Rational>> aug, std::size_t unknowns) {
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < unknowns; ++c) {
    std::size_t p = row;
    while (p < aug.size() && aug[p][c] == 0) ++p;
    if (p == aug.size()) {
      throw MedianError(ErrorCode::InternalInconsistency, "stationary system is singular");
    }
    std::swap(aug[row], aug[p]);
    const Rational lead = aug[row][c];
    for (auto& v : aug[row]) v /= lead;
    for (std::size_t r = 0; r < aug.size(); ++r) {
      if (r == row || aug[r][c] == 0) continue;
      const Rational f = aug[r][c];
      for (std::size_t k = c; k <= unknowns; ++k) aug[r][k] -= f * aug[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < aug.size(); ++r) {
    if (aug[r][unknowns] != 0) {
      throw MedianError(ErrorCode::InternalInconsistency, "stationary system is inconsistent");
    }
  }
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) x[i] = aug[i][unknowns];
  return x;
}

}  // namespace

std::vector<Measure> stationary_polytope(const GroupAction& action, const GroupMeasure& mu) {
  if (!is_generating(action, mu)) {
    throw MedianError(ErrorCode::NotGenerating,
                      "support of mu does not generate the acting group");
  }
  const std::size_t n = action.algebra().size();
  const auto p = transition_matrix(n, mu);

  std::vector<PointSet> reach(n, PointSet(n));
  for (Point x = 0; x < n; ++x) {
    std::vector<Point> stack{x};
    reach[x].set(x);
    while (!stack.empty()) {
      const Point u = stack.back();
      stack.pop_back();
      for (Point v = 0; v < n; ++v) {
        if (p[u][v] > 0 && !reach[x].test(v)) {
          reach[x].set(v);
          stack.push_back(v);
        }
      }
    }
  }

  std::vector<Measure> vertices;
  PointSet done(n);
  for (Point x = 0; x < n; ++x) {
    if (done.test(x)) continue;
    PointSet cls(n);
    for_each_member(reach[x], [&](Point y) {
      if (reach[y].test(x)) cls.set(y);
    });
    done |= cls;
    if (cls != reach[x]) continue;  // not closed
    const std::vector<Point> k = members(cls);
    const std::size_t m = k.size();
    // nu P = nu on the class, plus normalization.
    std::vector<std::vector<Rational>> aug(m + 1, std::vector<Rational>(m + 1, Rational(0)));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < m; ++i) aug[j][i] = p[k[i]][k[j]];
      aug[j][j] -= 1;
    }
    for (std::size_t i = 0; i < m; ++i) aug[m][i] = 1;
    aug[m][m] = 1;
    const std::vector<Rational> sol = solve_unique(std::move(aug), m);
    std::vector<Rational> w(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) w[k[i]] = sol[i];
    vertices.push_back(Measure::checked(std::move(w)));
  }

  // Independent route: dimension of the solution space of (P^T - I) nu = 0.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) a[y][x] = p[x][y];
    a[y][y] -= 1;
  }
  const std::size_t nullity = n - rational_rank(std::move(a));
  if (nullity != vertices.size()) {
    throw MedianError(ErrorCode::InternalInconsistency,
                      "closed classes (" + std::to_string(vertices.size()) +
                          ") disagree with the stationary nullity (" + std::to_string(nullity) + ")");
  }
  for (const Measure& v : vertices) {
    if (convolve(mu, v) != v) {
      throw MedianError(ErrorCode::InternalInconsistency, "vertex is not stationary");
    }
  }
  return vertices;
}

std::optional<std::vector<Rational>> hull_coefficients(const std::vector<Measure>& vertices,
                                                       const Measure& nu) {
  std::vector<Rational> coeff;
  std::vector<Rational> rebuilt(nu.size(), Rational(0));
  for (const Measure& v : vertices) {
    coeff.push_back(nu.mass(v.support()));
    for (Point x = 0; x < nu.size(); ++x) rebuilt[x] += coeff.back() * v[x];
  }
  if (rebuilt != nu.weights()) return std::nullopt;
  return coeff;
}

}  // namespace medianlab
