#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathideal/graph.hpp"

namespace pathideal {

/// Squarefree monomial over at most 64 variables, stored as its support.
/// Bit v set means variable v divides the monomial.
class SquarefreeMonomial {
 public:
  static constexpr std::size_t kMaxVariables = 64;

  constexpr SquarefreeMonomial() = default;
  constexpr explicit SquarefreeMonomial(std::uint64_t bits) : bits_(bits) {}

  static SquarefreeMonomial from_vertices(std::span<const Vertex> vertices);
  static SquarefreeMonomial variable(Vertex v);
  /// Product of all variables 0..n-1.
  static SquarefreeMonomial all(std::size_t n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t degree() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_one() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
  constexpr bool divides(SquarefreeMonomial other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<Vertex> vertices() const;

  friend constexpr bool operator==(SquarefreeMonomial, SquarefreeMonomial) = default;
  friend constexpr auto operator<=>(SquarefreeMonomial, SquarefreeMonomial) = default;

 private:
  std::uint64_t bits_ = 0;
};

constexpr SquarefreeMonomial lcm(SquarefreeMonomial a, SquarefreeMonomial b) {
  return SquarefreeMonomial(a.bits() | b.bits());
}
constexpr SquarefreeMonomial gcd(SquarefreeMonomial a, SquarefreeMonomial b) {
  return SquarefreeMonomial(a.bits() & b.bits());
}
/// a / gcd(a, b): the generator of (a) : b.
constexpr SquarefreeMonomial colon_part(SquarefreeMonomial a, SquarefreeMonomial b) {
  return SquarefreeMonomial(a.bits() & ~b.bits());
}

/// Removes duplicates and non-minimal elements; result sorted by support.
std::vector<SquarefreeMonomial> minimalize(std::vector<SquarefreeMonomial> monomials);
bool is_antichain(std::span<const SquarefreeMonomial> monomials);

/// Squarefree monomial ideal given by its minimal generators.
///
/// The constructor reduces the input to an antichain. Generators are kept in
/// canonical order: supports compared as unsigned integers, ascending.
/// The empty generator set is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<std::string> variables, std::vector<SquarefreeMonomial> generators);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<SquarefreeMonomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  bool is_equigenerated() const;
  /// Common generator degree; empty for the zero ideal or mixed degrees.
  std::optional<std::size_t> degree() const;
  /// Ideal membership of a monomial.
  bool contains(SquarefreeMonomial m) const;

  /// Monomial rendered as concatenated labels, e.g. "x1x2x3".
  std::string format(SquarefreeMonomial m) const;
  std::vector<std::string> labels_of(SquarefreeMonomial m) const;
  SquarefreeMonomial monomial_of(std::span<const std::string> labels) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<SquarefreeMonomial> generators_;
};

struct ColonResult {
  std::vector<SquarefreeMonomial> generators;  // minimal, canonical order
  bool is_variable_generated = false;
  /// Union of the generators when variable-generated.
  SquarefreeMonomial variables() const;
};

/// (gens) : m for an arbitrary list of generators (order-insensitive).
ColonResult colon(std::span<const SquarefreeMonomial> generators, SquarefreeMonomial m);
ColonResult colon(const MonomialIdeal& ideal, SquarefreeMonomial m);

/// I^{<= m}: the minimal generators of I dividing m.
MonomialIdeal restrict(const MonomialIdeal& ideal, SquarefreeMonomial m);

/// Re-expresses an ideal in another variable universe by label.
MonomialIdeal relabel(const MonomialIdeal& ideal, std::vector<std::string> variables);
SquarefreeMonomial relabel(SquarefreeMonomial m, const std::vector<std::string>& from,
                           const SimpleGraph& to);

/// The n-path ideal: one generator per path on n vertices.
MonomialIdeal path_ideal(const SimpleGraph& graph, std::size_t n);
inline MonomialIdeal path_ideal(const Tree& tree, std::size_t n) {
  return path_ideal(tree.graph(), n);
}

/// Generators of J_n for a caterpillar, listed by the closed form
/// y x_i ... x_{i+n-3} z with y in LN(x_i) + {x_{i-1}} and
/// z in LN(x_{i+n-3}) + {x_{i+n-2}}.
MonomialIdeal caterpillar_generators(const Tree& tree, const CaterpillarDecomposition& decomposition,
                                     std::size_t n);

}  // namespace pathideal
