#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pathideal/graph.hpp"
#include "pathideal/linquot.hpp"
#include "pathideal/resolution.hpp"

namespace pathideal {

/// A vertex set of G inducing P_n + P_n or L_{n,k}, together with the
/// isomorphism from the canonical family graph (labels as in make_family).
struct ForbiddenWitness {
  enum class Kind { TwoPaths, Lnk };
  Kind kind = Kind::TwoPaths;
  std::size_t n = 0;  // family parameter: P_n + P_n or L_{n,k}
  std::size_t k = 0;  // 0 for TwoPaths
  std::vector<Vertex> vertices;                          // ascending
  std::vector<std::pair<std::string, Vertex>> mapping;  // family label -> vertex of G

  FamilySpec family() const;
  friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

/// Re-checks the stored map as an isomorphism onto the induced subgraph.
bool verify_witness(const SimpleGraph& graph, const ForbiddenWitness& witness);

std::optional<ForbiddenWitness> find_induced_two_paths(const Tree& tree, std::size_t n);

/// Searches k = k_min, k_min + 1, ..., k_max and returns the first hit.
/// Throws BadRange unless n >= 5 and 3 <= k_min <= k_max <= n - 2.
std::optional<ForbiddenWitness> find_induced_Lnk(const Tree& tree, std::size_t n,
                                                 std::size_t k_min, std::size_t k_max);

enum class LnkRange {
  Full,     // k in [3, n-2]
  Reduced,  // k in [3, (n+1)/2]; L_{n,k} and L_{n,n-k+1} are isomorphic
};

struct FnReport {
  std::size_t n = 0;
  std::size_t diameter = 0;
  bool in_range = false;  // d in [n-1, 2n-1]
  std::optional<ForbiddenWitness> hit;

  bool holds() const { return in_range && !hit; }
};

/// (F_n) for n >= 4. The forbidden list is P_4+P_4 and L_{5,3} for n = 4,
/// P_n+P_n and L_{n,k} otherwise, searched in that order.
FnReport check_Fn(const Tree& tree, std::size_t n, LnkRange range = LnkRange::Full);

enum class Verdict { LinearQuotients, NotLinearQuotients, ZeroIdeal };

std::string_view verdict_name(Verdict v);

/// Witness for the zero ideal: no path on n vertices fits.
struct DiameterBound {
  std::size_t diameter = 0;
  std::size_t n = 0;
  friend bool operator==(const DiameterBound&, const DiameterBound&) = default;
};

using ClassificationWitness = std::variant<QuotientOrder, ForbiddenWitness, DiameterBound>;

struct Classification {
  std::size_t n = 0;
  Verdict verdict = Verdict::ZeroIdeal;
  std::string criterion_clause;
  std::size_t diameter = 0;
  ClassificationWitness witness;
  std::vector<Vertex> trimmed_vertices;  // only for LinearQuotients
  bool experimental = false;             // legacy n in {2, 3}

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Combinatorial classification for n >= 4. Never touches homology. Any
/// internal check that fails raises InternalContradiction.
Classification classify(const Tree& tree, std::size_t n);

/// Experimental n in {2, 3}: only the P_n + P_n clause. A positive verdict
/// carries an order from the exhaustive search (capped).
Classification classify_legacy_n23(const Tree& tree, std::size_t n,
                                   std::size_t lq_cap = kDefaultLinearQuotientsCap);

/// Re-checks a witness against the tree: orders via verify_order on J_n,
/// forbidden sets via verify_witness, diameter bounds via the diameter.
bool verify_classification(const Tree& tree, const Classification& c);

struct VerifiedClassification {
  Classification classification;
  bool lq_oracle = false;                    // an order exists
  std::optional<bool> linear_resolution;     // when within the homology cap
};

/// classify (or the legacy path when allowed) followed by the exhaustive
/// order search and, within `hom_cap`, the Betti-number test. Throws
/// TooManyGenerators beyond `lq_cap` and OracleDisagreement on mismatch.
VerifiedClassification classify_verified(const Tree& tree, std::size_t n,
                                         std::size_t lq_cap = kDefaultLinearQuotientsCap,
                                         std::size_t hom_cap = kDefaultBettiGeneratorCap,
                                         bool legacy_n23 = false);

}  // namespace pathideal
