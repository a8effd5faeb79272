#include "medianlab/tree_model.hpp"

#include "medianlab/errors.hpp"

namespace medianlab {

namespace {

constexpr char kLetters[4] = {'a', 'A', 'b', 'B'};

char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

}  // namespace

TreeModel tree_model(unsigned depth, bool with_sign) {
  if (depth > 5) throw MedianError(ErrorCode::TooLarge, "tree depth above 5");

  std::vector<std::string> words{""};
  std::vector<std::size_t> parent{0};
  for (std::size_t level_start = 0, level = 0; level < depth; ++level) {
    const std::size_t level_end = words.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (char c : kLetters) {
        if (!words[i].empty() && words[i].back() == inverse_letter(c)) continue;
        words.push_back(words[i] + c);
        parent.push_back(i);
      }
    }
    level_start = level_end;
  }

  const std::size_t t = words.size();
  const std::size_t edges = t - 1;
  const std::size_t layers = with_sign ? 2 : 1;
  const std::size_t k = edges + (with_sign ? 1 : 0);

  // Ancestor chains give the edge coordinates: bit (v - 1) is set on every
  // point whose word extends the word of v.
  std::vector<PointSet> tree_coords(t, PointSet(k));
  for (std::size_t i = 1; i < t; ++i) {
    tree_coords[i] = tree_coords[parent[i]];
    tree_coords[i].set(i - 1);
  }

  std::vector<std::string> labels;
  std::vector<PointSet> coords;
  coords.reserve(t * layers);
  for (std::size_t s = 0; s < layers; ++s) {
    for (std::size_t i = 0; i < t; ++i) {
      PointSet c = tree_coords[i];
      if (s == 1) c.set(k - 1);
      coords.push_back(std::move(c));
      std::string label = words[i].empty() ? "e" : words[i];
      if (with_sign) label += s == 0 ? "+" : "-";
      labels.push_back(std::move(label));
    }
  }
  return TreeModel{MedianAlgebra::from_embedding(std::move(coords)), std::move(labels), t};
}

}  // namespace medianlab
