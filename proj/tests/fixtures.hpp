#pragma once

#include <string>
#include <vector>

#include "medianlab/algebra.hpp"
#include "medianlab/oracle.hpp"

namespace medianlab::testing {

inline MedianAlgebra from_rows(const std::vector<std::string>& rows) {
  std::vector<PointSet> coords;
  for (const auto& r : rows) coords.push_back(from_bitstring(r));
  return MedianAlgebra::from_embedding(std::move(coords));
}

// 0 - 1 - 2
inline MedianAlgebra p3() { return from_rows({"00", "10", "11"}); }
// (0,0) (1,0) (0,1) (1,1); first character is the first coordinate
inline MedianAlgebra square() { return from_rows({"00", "10", "01", "11"}); }
inline MedianAlgebra point() { return from_rows({"0"}); }
// (a, s) has index 2a + s
inline MedianAlgebra p3_times_edge() {
  return from_rows({"000", "001", "100", "101", "110", "111"});
}

inline const oracle::Corpus& corpus3() {
  static const oracle::Corpus c = oracle::enumerate_hypercube_subalgebras(3);
  return c;
}

inline std::vector<Point> median_table_p3() {
  std::vector<Point> t;
  for (Point x = 0; x < 3; ++x)
    for (Point y = 0; y < 3; ++y)
      for (Point z = 0; z < 3; ++z) {
        Point a = x, b = y, c = z;
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        t.push_back(b);
      }
  return t;
}

}  // namespace medianlab::testing
