#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "pathideal/graph.hpp"
#include "pathideal/ideal.hpp"

namespace pathideal {

/// A linear-quotients order with its certificate: certificates[k] is the set
/// of variables generating (order[0..k-1]) : order[k]; certificates[0] is 1.
struct QuotientOrder {
  std::vector<SquarefreeMonomial> order;
  std::vector<SquarefreeMonomial> certificates;

  friend bool operator==(const QuotientOrder&, const QuotientOrder&) = default;
};

/// First step at which the colon ideal is not generated by variables.
struct OrderFailure {
  std::size_t position = 0;             // 1-based position of the generator
  SquarefreeMonomial offending;         // a colon generator of degree != 1
  std::vector<SquarefreeMonomial> colon;  // the full minimal colon generators

  friend bool operator==(const OrderFailure&, const OrderFailure&) = default;
};

using OrderCheck = std::variant<QuotientOrder, OrderFailure>;

/// Checks `order` (a permutation of mingens(I)) step by step; throws
/// NotAPermutation otherwise.
OrderCheck verify_order(const MonomialIdeal& ideal, const std::vector<SquarefreeMonomial>& order);

inline constexpr std::size_t kDefaultLinearQuotientsCap = 22;

/// Exhaustive search for a linear-quotients order. Whether a generator may
/// be appended depends only on the set of generators already placed, so the
/// search runs over subsets (with memoised dead ends) rather than over
/// permutations.
std::optional<QuotientOrder> find_linear_quotients_order(
    const MonomialIdeal& ideal, std::size_t generator_cap = kDefaultLinearQuotientsCap);

/// Total order on the variables, strongest first.
class VariableOrder {
 public:
  VariableOrder() = default;
  VariableOrder(std::size_t num_variables, std::vector<Vertex> descending);

  const std::vector<Vertex>& descending() const { return descending_; }
  /// 0 for the largest variable.
  std::size_t rank(Vertex v) const { return rank_.at(v); }
  bool greater(Vertex a, Vertex b) const { return rank(a) < rank(b); }
  /// Lex comparison of equal-degree monomials: true iff a >_lex b.
  bool lex_greater(SquarefreeMonomial a, SquarefreeMonomial b) const;

  friend bool operator==(const VariableOrder&, const VariableOrder&) = default;

 private:
  std::vector<Vertex> descending_;
  std::vector<std::size_t> rank_;
};

/// x_1 > LN(x_1) > x_2 > LN(x_2) > ... > x_{d-1} > LN(x_{d-1}).
VariableOrder lex_variable_order(const Tree& tree, const CaterpillarDecomposition& decomposition);

/// mingens(I) sorted strictly descending in the lex order induced by `order`.
std::vector<SquarefreeMonomial> lex_generator_order(const MonomialIdeal& ideal,
                                                    const VariableOrder& order);

/// Which constructive case covers a caterpillar for a given n.
enum class CaterpillarCase {
  DiameterAtMost2nMinus3,
  Diameter2nMinus2,
  Diameter2nMinus1,
};

struct CaterpillarQuotients {
  CaterpillarCase which;
  bool reversed = false;  // central path was flipped to meet the hypothesis
  CaterpillarDecomposition decomposition;
  QuotientOrder order;
};

/// Builds and verifies the lex linear-quotients order of J_n for a
/// caterpillar with d <= 2n-3, or d = 2n-2 with l_{n-2} = 0 (or l_n = 0 after
/// reversal), or d = 2n-1 with l_{n-2} = l_{n+1} = 0. Throws
/// PreconditionViolated otherwise, InternalContradiction if the order fails.
CaterpillarQuotients caterpillar_linear_quotients(const Tree& tree, std::size_t n);

}  // namespace pathideal
