#include "medianlab/action.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "medianlab/errors.hpp"

namespace medianlab {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (Point x = 0; x < p.size(); ++x) out[p[x]] = x;
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (Point x = 0; x < n; ++x) p[x] = x;
  return p;
}

PointSet apply(const Permutation& p, const PointSet& s) {
  PointSet out(s.size());
  for_each_member(s, [&](Point x) { out.set(p[x]); });
  return out;
}

GroupAction::GroupAction(MedianAlgebra a, std::vector<std::string> names,
                         std::vector<Permutation> gens)
    : algebra_(std::move(a)), names_(std::move(names)), generators_(std::move(gens)) {
  inverses_.reserve(generators_.size());
  for (const auto& g : generators_) inverses_.push_back(inverse(g));
}

GroupAction GroupAction::validated(MedianAlgebra algebra, std::vector<std::string> names,
                                   std::vector<Permutation> generators) {
  const std::size_t n = algebra.size();
  if (names.size() != generators.size()) {
    throw MedianError(ErrorCode::InvalidInput, "generator names and permutations differ in count");
  }
  std::set<std::string> unique_names;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (names[i].empty() || !unique_names.insert(names[i]).second) {
      throw MedianError(ErrorCode::InvalidInput, "generator names must be distinct and nonempty");
    }
    const Permutation& g = generators[i];
    std::vector<bool> hit(n, false);
    if (g.size() != n) {
      throw MedianError(ErrorCode::InvalidInput,
                        "generator '" + names[i] + "' has " + std::to_string(g.size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (Point v : g) {
      if (v >= n || hit[v]) {
        throw MedianError(ErrorCode::InvalidInput,
                          "generator '" + names[i] + "' is not a permutation");
      }
      hit[v] = true;
    }
    if (auto w = morphism_violation(algebra, algebra, g)) {
      throw MedianError(ErrorCode::NotAutomorphism,
                        "generator '" + names[i] + "' breaks the median at (" +
                            std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                            std::to_string((*w)[2]) + ")");
    }
  }
  return GroupAction(std::move(algebra), std::move(names), std::move(generators));
}

GroupAction GroupAction::trivial(MedianAlgebra algebra) {
  return GroupAction(std::move(algebra), {}, {});
}

std::optional<std::size_t> GroupAction::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Permutation GroupAction::evaluate(std::string_view word) const {
  Permutation result = identity_permutation(algebra_.size());
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

  for (const std::string& token : tokens) {
    if (auto i = find(token)) {
      result = compose(result, generators_[*i]);
      continue;
    }
    if (token == "e" || token == "id" || token == "1") continue;
    std::string base = token;
    bool inv = false;
    if (base.size() > 3 && base.ends_with("^-1")) {
      base.resize(base.size() - 3);
      inv = true;
    } else if (base.size() > 1 && base.back() == '\'') {
      base.pop_back();
      inv = true;
    }
    auto i = find(base);
    if (!i || !inv) {
      throw MedianError(ErrorCode::InvalidInput, "unknown generator '" + token + "' in word '" +
                                                     std::string(word) + "'");
    }
    result = compose(result, inverses_[*i]);
  }
  return result;
}

std::vector<Point> GroupAction::neighbours(Point x) const {
  std::vector<Point> out;
  out.reserve(2 * generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    out.push_back(generators_[i][x]);
    out.push_back(inverses_[i][x]);
  }
  return out;
}

std::vector<Permutation> generated_semigroup(const std::vector<Permutation>& seeds,
                                             std::size_t limit) {
  std::set<Permutation> seen(seeds.begin(), seeds.end());
  std::vector<Permutation> elements(seen.begin(), seen.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation& s : seeds) {
      Permutation p = compose(s, elements[i]);
      if (seen.insert(p).second) {
        elements.push_back(std::move(p));
        if (elements.size() > limit) {
          throw MedianError(ErrorCode::TooLarge, "generated group exceeds " +
                                                     std::to_string(limit) + " elements");
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace medianlab
