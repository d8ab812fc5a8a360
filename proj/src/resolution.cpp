#include "pathideal/resolution.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "pathideal/error.hpp"
#include "pathideal/exact_rank.hpp"

namespace pathideal {

namespace {

std::size_t face_size(std::uint64_t f) { return static_cast<std::size_t>(std::popcount(f)); }

// Boundary map from faces of size k to faces of size k-1, one sparse row per
// k-face, with the usual alternating signs.
std::size_t boundary_rank(const std::vector<std::uint64_t>& faces,
                          const std::vector<std::uint64_t>& lower) {
  if (faces.empty() || lower.empty()) return 0;
  std::vector<SparseRow> rows;
  rows.reserve(faces.size());
  for (std::uint64_t f : faces) {
    SparseRow row;
    std::int64_t sign = 1;
    for (std::uint64_t b = f; b != 0; b &= b - 1) {
      const std::uint64_t facet = f & ~(b & -b);
      const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      row.emplace_back(static_cast<std::size_t>(it - lower.begin()), sign);
      sign = -sign;
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return exact_rank(rows);
}

std::uint64_t compress(std::uint64_t subset, std::uint64_t mask) {
  std::uint64_t out = 0;
  std::size_t pos = 0;
  for (std::uint64_t b = mask; b != 0; b &= b - 1, ++pos) {
    if (subset & (b & -b)) out |= std::uint64_t{1} << pos;
  }
  return out;
}

}  // namespace

// ------------------------------------------------------- SimplicialComplex

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<std::uint64_t> faces)
    : num_vertices_(num_vertices) {
  if (num_vertices > 64) throw Error(ErrorCode::TooLarge, "complexes support at most 64 vertices");
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (std::uint64_t f : faces) {
    if (num_vertices < 64 && (f >> num_vertices) != 0) {
      throw Error(ErrorCode::InvalidArgument, "face uses a vertex outside the complex");
    }
    const std::size_t k = face_size(f);
    if (faces_by_size_.size() <= k) faces_by_size_.resize(k + 1);
    faces_by_size_[k].push_back(f);
  }
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t num_vertices) {
  return SimplicialComplex(num_vertices, {});
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t num_vertices,
                                                 const std::vector<std::uint64_t>& facets) {
  std::unordered_set<std::uint64_t> faces;
  for (std::uint64_t facet : facets) {
    // Walk all submasks of the facet, including the empty face.
    for (std::uint64_t s = facet;; s = (s - 1) & facet) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  return SimplicialComplex(num_vertices, {faces.begin(), faces.end()});
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t num_vertices,
                                                std::vector<std::uint64_t> faces) {
  SimplicialComplex out(num_vertices, std::move(faces));
  for (std::size_t k = 1; k < out.faces_by_size_.size(); ++k) {
    const auto& lower = out.faces_by_size_[k - 1];
    for (std::uint64_t f : out.faces_by_size_[k]) {
      for (std::uint64_t b = f; b != 0; b &= b - 1) {
        if (!std::binary_search(lower.begin(), lower.end(), f & ~(b & -b))) {
          throw Error(ErrorCode::InvalidArgument, "face list is not closed under subsets");
        }
      }
    }
  }
  return out;
}

const std::vector<std::uint64_t>& SimplicialComplex::faces_of_size(std::size_t size) const {
  static const std::vector<std::uint64_t> kNone;
  return size < faces_by_size_.size() ? faces_by_size_[size] : kNone;
}

std::size_t SimplicialComplex::num_faces() const {
  std::size_t total = 0;
  for (const auto& layer : faces_by_size_) total += layer.size();
  return total;
}

std::vector<std::uint64_t> SimplicialComplex::facets() const {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < faces_by_size_.size(); ++k) {
    const auto& upper = faces_of_size(k + 1);
    for (std::uint64_t f : faces_by_size_[k]) {
      const bool covered =
          std::any_of(upper.begin(), upper.end(), [&](std::uint64_t g) { return (f & ~g) == 0; });
      if (!covered) out.push_back(f);
    }
  }
  return out;
}

// ------------------------------------------------------------- homology

std::size_t HomologyRanks::operator()(int dimension) const {
  const auto idx = static_cast<std::size_t>(dimension + 1);
  return dimension >= -1 && idx < ranks.size() ? ranks[idx] : 0;
}

bool HomologyRanks::acyclic() const {
  return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, std::size_t vertex_cap) {
  if (complex.num_vertices() > vertex_cap) {
    throw Error(ErrorCode::TooLarge, "complex has " + std::to_string(complex.num_vertices()) +
                                         " vertices; cap is " + std::to_string(vertex_cap));
  }
  HomologyRanks out;
  if (complex.is_void()) return out;
  // Chain group of size k holds the (k-1)-dimensional faces; size 0 is the
  // augmentation (the empty face).
  const std::size_t top = static_cast<std::size_t>(complex.dimension() + 2);
  std::vector<std::size_t> rank_into(top + 1, 0);  // rank of boundary out of size k
  for (std::size_t k = 1; k < top; ++k) {
    rank_into[k] = boundary_rank(complex.faces_of_size(k), complex.faces_of_size(k - 1));
  }
  out.ranks.resize(top);
  for (std::size_t k = 0; k < top; ++k) {
    out.ranks[k] = complex.faces_of_size(k).size() - rank_into[k] - rank_into[k + 1];
  }
  while (!out.ranks.empty() && out.ranks.back() == 0) out.ranks.pop_back();
  return out;
}

// ------------------------------------------------------------------ Betti

std::size_t BettiTable::operator()(int i, int j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  if (entries.empty()) throw Error(ErrorCode::ZeroIdeal, "regularity of the zero ideal");
  int reg = entries.begin()->first.second - entries.begin()->first.first;
  for (const auto& [ij, count] : entries) reg = std::max(reg, ij.second - ij.first);
  return reg;
}

BettiTable betti_table(const MonomialIdeal& ideal, std::size_t generator_cap) {
  const auto& gens = ideal.generators();
  const std::size_t q = gens.size();
  if (q > generator_cap || q > 20) {
    throw Error(ErrorCode::TooManyGenerators, std::to_string(q) + " generators; cap is " +
                                                  std::to_string(generator_cap));
  }
  BettiTable table;
  if (q == 0) return table;

  const std::uint64_t subsets = std::uint64_t{1} << q;
  std::vector<std::uint64_t> lcm_of(subsets, 0);
  for (std::uint64_t s = 1; s < subsets; ++s) {
    const std::uint64_t low = s & -s;
    lcm_of[s] = lcm_of[s ^ low] | gens[static_cast<std::size_t>(std::countr_zero(low))].bits();
  }
  std::vector<std::uint64_t> candidates(lcm_of.begin() + 1, lcm_of.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (std::uint64_t m : candidates) {
    std::uint64_t divisors = 0;  // generators dividing m, as a subset mask
    for (std::size_t g = 0; g < q; ++g) {
      if ((gens[g].bits() & ~m) == 0) divisors |= std::uint64_t{1} << g;
    }
    std::vector<std::uint64_t> faces;
    for (std::uint64_t t = 0;; t = (t - divisors) & divisors) {
      if (lcm_of[t] != m) faces.push_back(t);
      if (t == divisors) break;
    }
    // Cone over some generator: acyclic, skip the rank computation.
    bool cone = false;
    for (std::uint64_t b = divisors; b != 0 && !cone; b &= b - 1) {
      const std::uint64_t g = b & -b;
      cone = std::all_of(faces.begin(), faces.end(),
                         [&](std::uint64_t t) { return lcm_of[t | g] != m; });
    }
    if (cone) continue;
    for (auto& f : faces) f = compress(f, divisors);
    const auto complex = SimplicialComplex::from_faces(
        static_cast<std::size_t>(std::popcount(divisors)), std::move(faces));
    const auto homology = reduced_homology_ranks(complex);
    const int j = std::popcount(m);
    for (std::size_t idx = 0; idx < homology.ranks.size(); ++idx) {
      if (homology.ranks[idx] != 0) {
        // ranks[idx] is H~_{idx-1}, which contributes to beta_{idx, m}.
        table.entries[{static_cast<int>(idx), j}] += homology.ranks[idx];
      }
    }
  }
  return table;
}

int regularity(const MonomialIdeal& ideal, std::size_t generator_cap) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "regularity of the zero ideal");
  return betti_table(ideal, generator_cap).regularity();
}

bool has_linear_resolution(const MonomialIdeal& ideal, std::size_t generator_cap) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "linear resolution of the zero ideal");
  const auto degree = ideal.degree();
  if (!degree) throw Error(ErrorCode::NotEquigenerated, "ideal is not equigenerated");
  return regularity(ideal, generator_cap) == static_cast<int>(*degree);
}

std::size_t reg_two_gens(SquarefreeMonomial m1, SquarefreeMonomial m2) {
  if (m1.divides(m2) || m2.divides(m1)) {
    throw Error(ErrorCode::NotAnAntichain, "generators divide each other");
  }
  return lcm(m1, m2).degree() - 1;
}

std::size_t reg_three_gens(SquarefreeMonomial m1, SquarefreeMonomial m2, SquarefreeMonomial m3) {
  const SquarefreeMonomial gens[] = {m1, m2, m3};
  if (!is_antichain(gens)) throw Error(ErrorCode::NotAnAntichain, "generators divide each other");
  if (!m3.divides(lcm(m1, m2))) {
    throw Error(ErrorCode::DivisibilityHypothesisFails, "m3 does not divide lcm(m1, m2)");
  }
  return std::max(lcm(m1, m3).degree(), lcm(m2, m3).degree()) - 1;
}

}  // namespace pathideal
