#pragma once

#include <ostream>
#include <vector>

namespace streamcert {

/// A set of vertices whose removal increases the number of connected
/// components of the graph it was extracted from. Ids are kept sorted.
struct SeparatorSet {
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const SeparatorSet& a, const SeparatorSet& b) {
    return a.vertices == b.vertices;
  }
  friend bool operator<(const SeparatorSet& a, const SeparatorSet& b) {
    return a.vertices < b.vertices;
  }

  friend std::ostream& operator<<(std::ostream& os, const SeparatorSet& s) {
    os << "{";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      if (i > 0) os << ",";
      os << s.vertices[i];
    }
    return os << "}";
  }
};

}  // namespace streamcert
