#include "pathideal/ideal.hpp"

#include <algorithm>

#include "pathideal/error.hpp"

namespace pathideal {

SquarefreeMonomial SquarefreeMonomial::from_vertices(std::span<const Vertex> vertices) {
  std::uint64_t bits = 0;
  for (Vertex v : vertices) bits |= variable(v).bits();
  return SquarefreeMonomial(bits);
}

SquarefreeMonomial SquarefreeMonomial::variable(Vertex v) {
  if (v >= kMaxVariables) {
    throw Error(ErrorCode::TooLarge, "variable index " + std::to_string(v) + " exceeds 64");
  }
  return SquarefreeMonomial(std::uint64_t{1} << v);
}

SquarefreeMonomial SquarefreeMonomial::all(std::size_t n) {
  if (n > kMaxVariables) throw Error(ErrorCode::TooLarge, "more than 64 variables");
  return SquarefreeMonomial(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<Vertex> SquarefreeMonomial::vertices() const {
  std::vector<Vertex> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(b)));
  }
  return out;
}

std::vector<SquarefreeMonomial> minimalize(std::vector<SquarefreeMonomial> monomials) {
  // Sorting by degree first means a divisor is always seen before its multiples.
  std::sort(monomials.begin(), monomials.end(), [](auto a, auto b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  std::vector<SquarefreeMonomial> kept;
  for (auto m : monomials) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](auto g) { return g.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool is_antichain(std::span<const SquarefreeMonomial> monomials) {
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      if (i != j && monomials[i].divides(monomials[j])) return false;
    }
  }
  return true;
}

// ----------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables,
                             std::vector<SquarefreeMonomial> generators)
    : variables_(std::move(variables)) {
  if (variables_.size() > SquarefreeMonomial::kMaxVariables) {
    throw Error(ErrorCode::TooLarge, std::to_string(variables_.size()) +
                                         " variables; monomials support at most 64");
  }
  const auto universe = SquarefreeMonomial::all(variables_.size());
  for (auto g : generators) {
    if (!g.divides(universe)) {
      throw Error(ErrorCode::InvalidArgument, "generator uses a variable outside the universe");
    }
    if (g.is_one()) throw Error(ErrorCode::InvalidArgument, "generators must have degree >= 1");
  }
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_equigenerated() const { return degree().has_value(); }

std::optional<std::size_t> MonomialIdeal::degree() const {
  if (generators_.empty()) return std::nullopt;
  const std::size_t d = generators_.front().degree();
  for (auto g : generators_) {
    if (g.degree() != d) return std::nullopt;
  }
  return d;
}

bool MonomialIdeal::contains(SquarefreeMonomial m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](auto g) { return g.divides(m); });
}

std::string MonomialIdeal::format(SquarefreeMonomial m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (Vertex v : m.vertices()) out += variables_.at(v);
  return out;
}

std::vector<std::string> MonomialIdeal::labels_of(SquarefreeMonomial m) const {
  std::vector<std::string> out;
  for (Vertex v : m.vertices()) out.push_back(variables_.at(v));
  return out;
}

SquarefreeMonomial MonomialIdeal::monomial_of(std::span<const std::string> labels) const {
  std::uint64_t bits = 0;
  for (const auto& label : labels) {
    const auto it = std::find(variables_.begin(), variables_.end(), label);
    if (it == variables_.end()) {
      throw Error(ErrorCode::InvalidVertex, "unknown variable '" + label + "'");
    }
    bits |= SquarefreeMonomial::variable(static_cast<Vertex>(it - variables_.begin())).bits();
  }
  return SquarefreeMonomial(bits);
}

// ------------------------------------------------------------- operations

SquarefreeMonomial ColonResult::variables() const {
  std::uint64_t bits = 0;
  for (auto g : generators) bits |= g.bits();
  return SquarefreeMonomial(bits);
}

ColonResult colon(std::span<const SquarefreeMonomial> generators, SquarefreeMonomial m) {
  std::vector<SquarefreeMonomial> parts;
  parts.reserve(generators.size());
  for (auto g : generators) parts.push_back(colon_part(g, m));
  ColonResult out;
  out.generators = minimalize(std::move(parts));
  out.is_variable_generated = !out.generators.empty() &&
                              std::all_of(out.generators.begin(), out.generators.end(),
                                          [](auto g) { return g.degree() == 1; });
  return out;
}

ColonResult colon(const MonomialIdeal& ideal, SquarefreeMonomial m) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "colon of the zero ideal");
  return colon(ideal.generators(), m);
}

MonomialIdeal restrict(const MonomialIdeal& ideal, SquarefreeMonomial m) {
  std::vector<SquarefreeMonomial> kept;
  for (auto g : ideal.generators()) {
    if (g.divides(m)) kept.push_back(g);
  }
  return MonomialIdeal(ideal.variables(), std::move(kept));
}

MonomialIdeal relabel(const MonomialIdeal& ideal, std::vector<std::string> variables) {
  MonomialIdeal target(std::move(variables), {});
  std::vector<SquarefreeMonomial> gens;
  for (auto g : ideal.generators()) gens.push_back(target.monomial_of(ideal.labels_of(g)));
  return MonomialIdeal(target.variables(), std::move(gens));
}

SquarefreeMonomial relabel(SquarefreeMonomial m, const std::vector<std::string>& from,
                           const SimpleGraph& to) {
  std::uint64_t bits = 0;
  for (Vertex v : m.vertices()) bits |= SquarefreeMonomial::variable(to.require(from.at(v))).bits();
  return SquarefreeMonomial(bits);
}

MonomialIdeal path_ideal(const SimpleGraph& graph, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "path ideals need n >= 2");
  if (graph.num_vertices() > SquarefreeMonomial::kMaxVariables) {
    throw Error(ErrorCode::TooLarge, "path ideals support graphs with at most 64 vertices");
  }
  std::vector<SquarefreeMonomial> gens;
  for (const auto& path : enumerate_paths(graph, n)) {
    gens.push_back(SquarefreeMonomial::from_vertices(path.vertices));
  }
  const std::size_t count = gens.size();
  MonomialIdeal ideal(graph.labels(), std::move(gens));
  // Distinct n-paths of a tree have distinct vertex sets, so nothing may
  // collapse; in a general graph a cycle could make two paths share a support.
  if (ideal.size() != count && graph.num_edges() + 1 == graph.num_vertices()) {
    throw Error(ErrorCode::InternalContradiction,
                "two distinct " + std::to_string(n) + "-paths share a vertex set");
  }
  return ideal;
}

MonomialIdeal caterpillar_generators(const Tree& tree, const CaterpillarDecomposition& dec,
                                     std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "path ideals need n >= 2");
  const auto& x = dec.central_path;
  const std::size_t c = x.size();  // = d - 1
  std::vector<SquarefreeMonomial> gens;
  auto var = [](Vertex v) { return SquarefreeMonomial::variable(v); };

  if (c == 0) {
    // P_1 or P_2.
    if (n == 2 && tree.num_vertices() == 2) gens.push_back(lcm(var(0), var(1)));
    return MonomialIdeal(tree.labels(), std::move(gens));
  }
  if (n == 2) {
    // The closed form needs a nonempty middle segment; for n = 2 the
    // generators are simply the edges.
    for (std::size_t i = 0; i < c; ++i) {
      if (i + 1 < c) gens.push_back(lcm(var(x[i]), var(x[i + 1])));
      for (Vertex leaf : dec.leaf_neighbors[i]) gens.push_back(lcm(var(x[i]), var(leaf)));
    }
    return MonomialIdeal(tree.labels(), std::move(gens));
  }
  // 1-based central index i in [1, d-n+2] = [1, c-n+3].
  for (std::size_t i = 1; i + n <= c + 3; ++i) {
    SquarefreeMonomial middle;
    for (std::size_t j = i; j <= i + n - 3; ++j) middle = lcm(middle, var(x[j - 1]));
    std::vector<Vertex> ys = dec.leaf_neighbors[i - 1];
    if (i >= 2) ys.push_back(x[i - 2]);
    const std::size_t last = i + n - 3;
    std::vector<Vertex> zs = dec.leaf_neighbors[last - 1];
    if (last + 1 <= c) zs.push_back(x[last]);
    for (Vertex y : ys) {
      for (Vertex z : zs) {
        if (y != z) gens.push_back(lcm(middle, lcm(var(y), var(z))));
      }
    }
  }
  return MonomialIdeal(tree.labels(), std::move(gens));
}

}  // namespace pathideal
