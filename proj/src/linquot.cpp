#include "pathideal/linquot.hpp"

#include <algorithm>
#include <bit>

#include "pathideal/error.hpp"

namespace pathideal {

OrderCheck verify_order(const MonomialIdeal& ideal, const std::vector<SquarefreeMonomial>& order) {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ideal.generators()) {
    throw Error(ErrorCode::NotAPermutation, "order is not a permutation of the minimal generators");
  }
  QuotientOrder out;
  out.order = order;
  out.certificates.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0) {
      out.certificates.emplace_back();
      continue;
    }
    auto result = colon(std::span(order).first(k), order[k]);
    if (!result.is_variable_generated) {
      OrderFailure failure;
      failure.position = k + 1;
      failure.offending = *std::find_if(result.generators.begin(), result.generators.end(),
                                        [](auto g) { return g.degree() != 1; });
      failure.colon = std::move(result.generators);
      return failure;
    }
    out.certificates.push_back(result.variables());
  }
  return out;
}

std::optional<QuotientOrder> find_linear_quotients_order(const MonomialIdeal& ideal,
                                                         std::size_t generator_cap) {
  const auto& gens = ideal.generators();
  const std::size_t q = gens.size();
  if (q > generator_cap || q > 30) {
    throw Error(ErrorCode::TooManyGenerators, std::to_string(q) + " generators; cap is " +
                                                  std::to_string(generator_cap));
  }
  if (q == 0) return QuotientOrder{};

  // diff[g][h] generates (h) : g. Appending g to a placed set S is admissible
  // iff every diff[g][h], h in S, contains a variable that is itself some
  // diff[g][h'] of degree one with h' in S.
  std::vector<std::vector<std::uint64_t>> diff(q, std::vector<std::uint64_t>(q));
  std::vector<std::uint32_t> single(q, 0);
  for (std::size_t g = 0; g < q; ++g) {
    for (std::size_t h = 0; h < q; ++h) {
      diff[g][h] = gens[h].bits() & ~gens[g].bits();
      if (h != g && std::popcount(diff[g][h]) == 1) single[g] |= std::uint32_t{1} << h;
    }
  }
  auto admissible = [&](std::uint32_t placed, std::size_t g) {
    std::uint64_t vars = 0;
    for (std::uint32_t b = placed & single[g]; b != 0; b &= b - 1) {
      vars |= diff[g][static_cast<std::size_t>(std::countr_zero(b))];
    }
    for (std::uint32_t b = placed; b != 0; b &= b - 1) {
      if ((diff[g][static_cast<std::size_t>(std::countr_zero(b))] & vars) == 0) return false;
    }
    return true;
  };

  const std::uint32_t full = q == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << q) - 1;
  std::vector<std::uint8_t> dead(std::size_t{1} << q, 0);
  std::vector<std::size_t> path;
  auto search = [&](auto&& self, std::uint32_t placed) -> bool {
    if (placed == full) return true;
    if (dead[placed]) return false;
    for (std::size_t g = 0; g < q; ++g) {
      if ((placed >> g) & 1U) continue;
      if (!admissible(placed, g)) continue;
      path.push_back(g);
      if (self(self, placed | (std::uint32_t{1} << g))) return true;
      path.pop_back();
    }
    dead[placed] = 1;
    return false;
  };
  for (std::size_t first = 0; first < q; ++first) {
    path.assign(1, first);
    if (search(search, std::uint32_t{1} << first)) {
      std::vector<SquarefreeMonomial> order;
      for (std::size_t g : path) order.push_back(gens[g]);
      auto checked = verify_order(ideal, order);
      if (auto* ok = std::get_if<QuotientOrder>(&checked)) return std::move(*ok);
      throw Error(ErrorCode::InternalContradiction,
                  "subset search produced an order that fails verification");
    }
  }
  return std::nullopt;
}

// -------------------------------------------------------------- lex orders

VariableOrder::VariableOrder(std::size_t num_variables, std::vector<Vertex> descending)
    : descending_(std::move(descending)), rank_(num_variables, num_variables) {
  if (descending_.size() != num_variables) {
    throw Error(ErrorCode::InvalidArgument, "variable order must list every variable once");
  }
  for (std::size_t r = 0; r < descending_.size(); ++r) {
    const Vertex v = descending_[r];
    if (v >= num_variables || rank_[v] != num_variables) {
      throw Error(ErrorCode::InvalidArgument, "variable order must list every variable once");
    }
    rank_[v] = r;
  }
}

bool VariableOrder::lex_greater(SquarefreeMonomial a, SquarefreeMonomial b) const {
  auto sequence = [&](SquarefreeMonomial m) {
    auto vs = m.vertices();
    std::sort(vs.begin(), vs.end(), [&](Vertex x, Vertex y) { return rank(x) < rank(y); });
    return vs;
  };
  const auto sa = sequence(a);
  const auto sb = sequence(b);
  for (std::size_t i = 0; i < sa.size() && i < sb.size(); ++i) {
    if (sa[i] != sb[i]) return rank(sa[i]) < rank(sb[i]);
  }
  return sa.size() > sb.size();
}

VariableOrder lex_variable_order(const Tree& tree, const CaterpillarDecomposition& dec) {
  std::vector<Vertex> descending;
  for (std::size_t i = 0; i < dec.central_path.size(); ++i) {
    descending.push_back(dec.central_path[i]);
    for (Vertex leaf : dec.leaf_neighbors[i]) descending.push_back(leaf);
  }
  if (dec.central_path.empty()) {
    for (Vertex v = 0; v < tree.num_vertices(); ++v) descending.push_back(v);
  }
  return VariableOrder(tree.num_vertices(), std::move(descending));
}

std::vector<SquarefreeMonomial> lex_generator_order(const MonomialIdeal& ideal,
                                                    const VariableOrder& order) {
  if (!ideal.is_zero() && !ideal.is_equigenerated()) {
    throw Error(ErrorCode::NotEquigenerated, "lex generator order needs an equigenerated ideal");
  }
  auto sorted = ideal.generators();
  std::sort(sorted.begin(), sorted.end(),
            [&](auto a, auto b) { return order.lex_greater(a, b); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!order.lex_greater(sorted[i - 1], sorted[i])) {
      throw Error(ErrorCode::InternalContradiction, "lex order has a tie between generators");
    }
  }
  return sorted;
}

CaterpillarQuotients caterpillar_linear_quotients(const Tree& tree, std::size_t n) {
  if (n < 4) throw Error(ErrorCode::PreconditionViolated, "the lex construction needs n >= 4");
  auto dec = caterpillar_decomposition(tree);
  if (!dec) throw Error(ErrorCode::PreconditionViolated, "tree is not a caterpillar");

  CaterpillarQuotients out;
  const std::size_t d = dec->diameter;
  if (d <= 2 * n - 3) {
    out.which = CaterpillarCase::DiameterAtMost2nMinus3;
  } else if (d == 2 * n - 2) {
    out.which = CaterpillarCase::Diameter2nMinus2;
    if (dec->leaf_count(n - 2) != 0) {
      if (dec->leaf_count(n) != 0) {
        throw Error(ErrorCode::PreconditionViolated,
                    "diameter 2n-2 needs LN(x_{n-2}) or LN(x_n) empty");
      }
      dec = dec->reversed();
      out.reversed = true;
    }
  } else if (d == 2 * n - 1) {
    out.which = CaterpillarCase::Diameter2nMinus1;
    if (dec->leaf_count(n - 2) != 0 || dec->leaf_count(n + 1) != 0) {
      throw Error(ErrorCode::PreconditionViolated,
                  "diameter 2n-1 needs LN(x_{n-2}) and LN(x_{n+1}) empty");
    }
  } else {
    throw Error(ErrorCode::PreconditionViolated, "diameter exceeds 2n-1");
  }

  const auto ideal = path_ideal(tree, n);
  const auto order = lex_generator_order(ideal, lex_variable_order(tree, *dec));
  auto checked = verify_order(ideal, order);
  if (auto* failure = std::get_if<OrderFailure>(&checked)) {
    throw Error(ErrorCode::InternalContradiction,
                "lex order fails at position " + std::to_string(failure->position) +
                    " with colon generator " + ideal.format(failure->offending));
  }
  out.decomposition = std::move(*dec);
  out.order = std::get<QuotientOrder>(std::move(checked));
  return out;
}

}  // namespace pathideal
