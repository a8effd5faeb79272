#include "medianlab/point_set.hpp"

#include <iterator>

#include <boost/container_hash/hash.hpp>

namespace medianlab {

PointSet make_set(std::size_t n, std::initializer_list<Point> pts) {
  PointSet s(n);
  for (Point p : pts) s.set(p);
  return s;
}

PointSet make_set(std::size_t n, const std::vector<Point>& pts) {
  PointSet s(n);
  for (Point p : pts) s.set(p);
  return s;
}

PointSet singleton(std::size_t n, Point p) {
  PointSet s(n);
  s.set(p);
  return s;
}

PointSet full_set(std::size_t n) {
  PointSet s(n);
  s.set();
  return s;
}

std::vector<Point> members(const PointSet& s) {
  std::vector<Point> out;
  out.reserve(s.count());
  for_each_member(s, [&](Point p) { out.push_back(p); });
  return out;
}

std::string to_bitstring(const PointSet& s) {
  std::string out(s.size(), '0');
  for_each_member(s, [&](Point p) { out[p] = '1'; });
  return out;
}

PointSet from_bitstring(const std::string& bits) {
  PointSet s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') s.set(i);
  }
  return s;
}

bool member_less(const PointSet& a, const PointSet& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != PointSet::npos && j != PointSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == PointSet::npos && j != PointSet::npos;
}

std::size_t PointSetHash::operator()(const PointSet& s) const noexcept {
  std::vector<PointSet::block_type> blocks;
  blocks.reserve(s.num_blocks());
  boost::to_block_range(s, std::back_inserter(blocks));
  std::size_t seed = s.size();
  boost::hash_combine(seed, boost::hash_range(blocks.begin(), blocks.end()));
  return seed;
}

}  // namespace medianlab
