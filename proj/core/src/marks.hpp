#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "effdom/graph.hpp"

namespace effdom::detail {

// Generation-stamped membership flags; clear() is O(1).
class Marks {
 public:
  explicit Marks(std::size_t n) : stamp_(n, 0) {}

  void clear() {
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
  }
  void set(Vertex v) { stamp_[v] = generation_; }
  void set_all(std::span<const Vertex> vs) {
    for (Vertex v : vs) stamp_[v] = generation_;
  }
  void reset(Vertex v) { stamp_[v] = 0; }
  bool test(Vertex v) const { return stamp_[v] == generation_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 1;
};

inline VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace effdom::detail
