#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace medianlab {

/// Points of a finite median algebra are dense indices 0..n-1.
using Point = std::uint32_t;

/// Subsets of the carrier are bit-vectors over 0..n-1.
using PointSet = boost::dynamic_bitset<std::uint64_t>;

PointSet make_set(std::size_t n, std::initializer_list<Point> members);
PointSet make_set(std::size_t n, const std::vector<Point>& members);
PointSet singleton(std::size_t n, Point p);
PointSet full_set(std::size_t n);

std::vector<Point> members(const PointSet& s);

/// Character i is '1' iff point i is a member.
std::string to_bitstring(const PointSet& s);
PointSet from_bitstring(const std::string& bits);

/// Total order on sets of equal universe: lexicographic on sorted member lists.
bool member_less(const PointSet& a, const PointSet& b);

template <typename F>
void for_each_member(const PointSet& s, F&& f) {
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) {
    f(static_cast<Point>(i));
  }
}

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept;
};

}  // namespace medianlab
