#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/oracle.hpp"

namespace medianlab {
namespace {

TEST(Corpus, SizesByDimension) {
  // counted independently by tests/oracle/derive_values.py
  EXPECT_EQ(oracle::enumerate_hypercube_subalgebras(1).entries.size(), 2u);
  EXPECT_EQ(oracle::enumerate_hypercube_subalgebras(2).entries.size(), 5u);
  EXPECT_EQ(oracle::enumerate_hypercube_subalgebras(3).entries.size(), 13u);
  EXPECT_THROW(oracle::enumerate_hypercube_subalgebras(5), MedianError);
}

TEST(Corpus, SquareClassesPresent) {
  const auto c = oracle::enumerate_hypercube_subalgebras(2);
  std::vector<std::size_t> sizes;
  for (const auto& e : c.entries) sizes.push_back(e.algebra.size());
  // point, edge, diagonal, P3, square
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 2, 3, 4}));
}

TEST(Corpus, LabelsAreDistinct) {
  const auto& c = testing::corpus3();
  for (std::size_t i = 0; i < c.entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(c.entries[i].label, c.entries[j].label);
}

TEST(BruteRecheck, PathAndSquareClean) {
  const auto p = oracle::brute_recheck(testing::p3());
  EXPECT_TRUE(p.ok());
  EXPECT_EQ(p.walls, 2u);
  EXPECT_EQ(p.cubes, 6u);
  const auto s = oracle::brute_recheck(testing::square());
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.walls, 2u);
  EXPECT_EQ(s.cubes, 11u);
}

TEST(BruteRecheck, CorpusClean) {
  for (const auto& e : testing::corpus3().entries) {
    const auto r = oracle::brute_recheck(e.algebra);
    EXPECT_TRUE(r.ok()) << e.label << ": " << (r.ok() ? "" : r.diffs.front());
  }
}

TEST(BruteRecheck, LargerAlgebras) {
  // 16 points: the 4-cube and P3 x P3 x edge (18 points is over the cap)
  EXPECT_TRUE(oracle::brute_recheck(MedianAlgebra::cube(4)).ok());
  const auto pp = MedianAlgebra::product(testing::p3(), testing::p3());
  EXPECT_TRUE(oracle::brute_recheck(pp).ok());
  EXPECT_THROW(oracle::brute_recheck(MedianAlgebra::product(pp, MedianAlgebra::cube(1))), MedianError);
}

TEST(BruteRecheck, RequireCleanThrowsMismatch) {
  oracle::RecheckReport r;
  r.diffs.push_back("walls: missing 100");
  try {
    oracle::require_clean(r);
    FAIL();
  } catch (const MedianError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Mismatch);
    EXPECT_TRUE(e.is_internal());
  }
}

TEST(Automorphisms, Counts) {
  EXPECT_EQ(oracle::automorphisms(testing::p3()).size(), 2u);
  EXPECT_EQ(oracle::automorphisms(testing::square()).size(), 8u);
  EXPECT_EQ(oracle::automorphisms(MedianAlgebra::cube(3)).size(), 48u);
}

TEST(CubeMorphisms, PathOntoEdge) {
  // two walls, two orientations each
  EXPECT_EQ(oracle::surjective_cube_morphisms(testing::p3(), 1).size(), 4u);
  EXPECT_TRUE(oracle::surjective_cube_morphisms(testing::p3(), 2).empty());
  EXPECT_EQ(oracle::surjective_cube_morphisms(testing::square(), 2).size(), 8u);
}

TEST(CubeIsomorphism, Witness) {
  const auto iso = oracle::find_cube_isomorphism(testing::square(), full_set(4));
  ASSERT_EQ(iso.size(), 4u);
  EXPECT_EQ(iso[0], 0u);
  EXPECT_TRUE(oracle::find_cube_isomorphism(testing::p3(), full_set(3)).empty());
  EXPECT_EQ(oracle::brute_gate(testing::p3(), 0, make_set(3, {1, 2})), 1);
  EXPECT_EQ(oracle::brute_hull(testing::p3(), make_set(3, {0, 2})), full_set(3));
}

}  // namespace
}  // namespace medianlab
