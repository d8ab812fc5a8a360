#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pathideal/ideal.hpp"

namespace pathideal {

/// Finite simplicial complex on vertices 0..num_vertices-1, faces stored as
/// bitmasks grouped by cardinality.
///
/// The void complex has no faces at all; the empty complex has only the
/// empty face. They differ in reduced homology: the empty complex has
/// H~_{-1} of rank 1, the void complex has none.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(std::size_t num_vertices);
  static SimplicialComplex from_facets(std::size_t num_vertices,
                                       const std::vector<std::uint64_t>& facets);
  /// `faces` must be closed under taking subsets (checked).
  static SimplicialComplex from_faces(std::size_t num_vertices, std::vector<std::uint64_t> faces);

  std::size_t num_vertices() const { return num_vertices_; }
  bool is_void() const { return faces_by_size_.empty(); }
  /// Highest face dimension; -1 for the empty complex and the void complex.
  int dimension() const { return static_cast<int>(faces_by_size_.size()) - 2; }
  /// Sorted faces of the given cardinality.
  const std::vector<std::uint64_t>& faces_of_size(std::size_t size) const;
  std::size_t num_faces() const;
  std::vector<std::uint64_t> facets() const;

 private:
  SimplicialComplex(std::size_t num_vertices, std::vector<std::uint64_t> faces);

  std::size_t num_vertices_ = 0;
  std::vector<std::vector<std::uint64_t>> faces_by_size_;
};

/// Reduced homology ranks over Q indexed from dimension -1.
struct HomologyRanks {
  std::vector<std::size_t> ranks;  // ranks[d + 1] = rank H~_d

  std::size_t operator()(int dimension) const;
  bool acyclic() const;
  friend bool operator==(const HomologyRanks&, const HomologyRanks&) = default;
};

inline constexpr std::size_t kDefaultHomologyVertexCap = 20;
inline constexpr std::size_t kDefaultBettiGeneratorCap = 12;

HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex,
                                     std::size_t vertex_cap = kDefaultHomologyVertexCap);

/// Graded Betti numbers beta_{i,j} of an ideal over a field of
/// characteristic 0. Only nonzero entries are stored.
struct BettiTable {
  static constexpr int kFieldCharacteristic = 0;

  std::map<std::pair<int, int>, std::size_t> entries;

  std::size_t operator()(int i, int j) const;
  /// max j - i over nonzero entries; throws ZeroIdeal when empty.
  int regularity() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// beta_{i,m}(I) is the rank of H~_{i-1} of the complex of generator subsets
/// whose lcm strictly divides m; m ranges over lcms of generator subsets.
BettiTable betti_table(const MonomialIdeal& ideal,
                       std::size_t generator_cap = kDefaultBettiGeneratorCap);
int regularity(const MonomialIdeal& ideal, std::size_t generator_cap = kDefaultBettiGeneratorCap);
bool has_linear_resolution(const MonomialIdeal& ideal,
                           std::size_t generator_cap = kDefaultBettiGeneratorCap);

/// reg of (m1, m2) for an antichain pair: deg lcm(m1, m2) - 1.
std::size_t reg_two_gens(SquarefreeMonomial m1, SquarefreeMonomial m2);
/// reg of (m1, m2, m3) for an antichain with m3 | lcm(m1, m2):
/// max(deg lcm(m1, m3), deg lcm(m2, m3)) - 1.
std::size_t reg_three_gens(SquarefreeMonomial m1, SquarefreeMonomial m2, SquarefreeMonomial m3);

}  // namespace pathideal
