#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pathideal/error.hpp"
#include "pathideal/graph.hpp"
#include "pathideal/rng.hpp"

namespace support {

// All trees with min..max vertices, one per isomorphism class.
inline std::vector<pathideal::Tree> tree_corpus(std::size_t min_vertices, std::size_t max_vertices) {
  std::vector<pathideal::Tree> out;
  for (std::size_t v = min_vertices; v <= max_vertices; ++v) {
    for (auto& t : pathideal::all_unlabeled_trees(v)) out.push_back(std::move(t));
  }
  return out;
}

// Caterpillar with diameter d (d >= 3); l_1, l_{d-1} >= 1, the listed
// 1-based positions get no leaves, the rest get 0..max_leaves.
inline pathideal::Tree random_caterpillar(pathideal::SplitMix64& rng, std::size_t d,
                                          const std::vector<std::size_t>& empty_positions,
                                          std::size_t max_leaves = 3) {
  std::vector<std::size_t> leaves(d - 1);
  for (std::size_t i = 1; i <= d - 1; ++i) {
    std::size_t& l = leaves[i - 1];
    if (std::find(empty_positions.begin(), empty_positions.end(), i) != empty_positions.end()) {
      l = 0;
    } else if (i == 1 || i == d - 1) {
      l = 1 + rng.below(max_leaves);
    } else {
      l = rng.below(max_leaves + 1);
    }
  }
  return pathideal::make_caterpillar(leaves);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class F>
pathideal::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const pathideal::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an error");
}

}  // namespace support
