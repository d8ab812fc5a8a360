#include "pathideal/classify.hpp"

#include <algorithm>

#include "pathideal/error.hpp"
#include "pathideal/ideal.hpp"

namespace pathideal {

namespace {

std::string label_with(char prefix, std::size_t i) { return prefix + std::to_string(i); }

Error contradiction(const std::string& what) {
  return Error(ErrorCode::InternalContradiction, what);
}

std::uint64_t mask_of(const std::vector<Vertex>& vs) {
  std::uint64_t m = 0;
  for (Vertex v : vs) m |= std::uint64_t{1} << v;
  return m;
}

// Walks `need` vertices starting at `v`, never stepping back to `parent`.
bool pendant_path(const Tree& tree, Vertex v, Vertex parent, std::size_t need,
                  std::vector<Vertex>& out) {
  out.push_back(v);
  if (out.size() == need) return true;
  for (Vertex w : tree.neighbors(v)) {
    if (w != parent && pendant_path(tree, w, v, need, out)) return true;
  }
  out.pop_back();
  return false;
}

ForbiddenWitness make_witness(ForbiddenWitness::Kind kind, std::size_t n, std::size_t k,
                              const std::vector<Vertex>& xs, const std::vector<Vertex>& ys) {
  ForbiddenWitness w;
  w.kind = kind;
  w.n = n;
  w.k = k;
  for (std::size_t i = 0; i < xs.size(); ++i) w.mapping.emplace_back(label_with('x', i + 1), xs[i]);
  for (std::size_t i = 0; i < ys.size(); ++i) w.mapping.emplace_back(label_with('y', i + 1), ys[i]);
  w.vertices = xs;
  w.vertices.insert(w.vertices.end(), ys.begin(), ys.end());
  std::sort(w.vertices.begin(), w.vertices.end());
  return w;
}

std::string forbidden_clause(const ForbiddenWitness& w) {
  if (w.kind == ForbiddenWitness::Kind::TwoPaths) {
    return "induced P_" + std::to_string(w.n) + "+P_" + std::to_string(w.n);
  }
  return "induced L_{" + std::to_string(w.n) + "," + std::to_string(w.k) + "}";
}

void require_small(const Tree& tree) {
  if (tree.num_vertices() > 64) {
    throw Error(ErrorCode::TooLarge, "trees with more than 64 vertices are not supported");
  }
}

}  // namespace

FamilySpec ForbiddenWitness::family() const {
  if (kind == Kind::TwoPaths) return {FamilySpec::Kind::TwoPaths, {n}};
  return {FamilySpec::Kind::Lnk, {n, k}};
}

bool verify_witness(const SimpleGraph& graph, const ForbiddenWitness& witness) {
  SimpleGraph family;
  try {
    family = make_family(witness.family());
  } catch (const Error&) {
    return false;
  }
  const std::size_t size = family.num_vertices();
  if (witness.mapping.size() != size) return false;
  std::vector<Vertex> image(size, graph.num_vertices());
  for (const auto& [label, v] : witness.mapping) {
    const auto f = family.find(label);
    if (!f || image[*f] != graph.num_vertices() || v >= graph.num_vertices()) return false;
    image[*f] = v;
  }
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted != witness.vertices) return false;
  for (Vertex a = 0; a < size; ++a) {
    for (Vertex b = a + 1; b < size; ++b) {
      if (family.adjacent(a, b) != graph.adjacent(image[a], image[b])) return false;
    }
  }
  return true;
}

std::optional<ForbiddenWitness> find_induced_two_paths(const Tree& tree, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  require_small(tree);
  const auto paths = enumerate_paths(tree, n);
  std::vector<std::uint64_t> support;
  std::vector<std::uint64_t> closed;
  for (const auto& p : paths) {
    support.push_back(mask_of(p.vertices));
    std::uint64_t c = support.back();
    for (Vertex v : p.vertices) {
      for (Vertex w : tree.neighbors(v)) c |= std::uint64_t{1} << w;
    }
    closed.push_back(c);
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if ((closed[i] & support[j]) == 0) {
        return make_witness(ForbiddenWitness::Kind::TwoPaths, n, 0, paths[i].vertices,
                            paths[j].vertices);
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> find_induced_Lnk(const Tree& tree, std::size_t n,
                                                 std::size_t k_min, std::size_t k_max) {
  if (n < 5 || k_min < 3 || k_min > k_max || k_max + 2 > n) {
    throw Error(ErrorCode::BadRange, "L_{n,k} search needs n >= 5 and 3 <= k_min <= k_max <= n-2");
  }
  require_small(tree);
  const auto paths = enumerate_paths(tree, n);
  std::vector<Vertex> pendant;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    for (const auto& p : paths) {
      for (int flip = 0; flip < 2; ++flip) {
        auto xs = p.vertices;
        if (flip) std::reverse(xs.begin(), xs.end());
        const Vertex anchor = xs[k - 1];
        for (Vertex u : tree.neighbors(anchor)) {
          if (std::find(xs.begin(), xs.end(), u) != xs.end()) continue;
          pendant.clear();
          if (!pendant_path(tree, u, anchor, k - 1, pendant)) continue;
          // pendant runs y_{k-1}, ..., y_1
          std::reverse(pendant.begin(), pendant.end());
          return make_witness(ForbiddenWitness::Kind::Lnk, n, k, xs, pendant);
        }
      }
    }
  }
  return std::nullopt;
}

FnReport check_Fn(const Tree& tree, std::size_t n, LnkRange range) {
  if (n < 4) {
    throw Error(ErrorCode::NUnsupported, "the (F_n) condition is defined for n >= 4");
  }
  FnReport report;
  report.n = n;
  report.diameter = diameter_and_longest_paths(tree).diameter;
  report.in_range = report.diameter + 1 >= n && report.diameter <= 2 * n - 1;
  report.hit = find_induced_two_paths(tree, n);
  if (!report.hit) {
    if (n == 4) {
      report.hit = find_induced_Lnk(tree, 5, 3, 3);
    } else {
      const std::size_t k_max = range == LnkRange::Full ? n - 2 : (n + 1) / 2;
      report.hit = find_induced_Lnk(tree, n, 3, k_max);
    }
  }
  return report;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::LinearQuotients: return "LinearQuotients";
    case Verdict::NotLinearQuotients: return "NotLinearQuotients";
    case Verdict::ZeroIdeal: return "ZeroIdeal";
  }
  return "?";
}

Classification classify(const Tree& tree, std::size_t n) {
  if (n < 4) {
    throw Error(ErrorCode::NUnsupported,
                "classification is implemented for n >= 4 (see --legacy-n23 for n = 2, 3)");
  }
  require_small(tree);
  Classification out;
  out.n = n;
  out.diameter = diameter_and_longest_paths(tree).diameter;
  if (out.diameter + 1 < n) {
    out.verdict = Verdict::ZeroIdeal;
    out.criterion_clause = "diam(G) < n-1";
    out.witness = DiameterBound{out.diameter, n};
    return out;
  }

  auto report = check_Fn(tree, n);
  if (report.hit) {
    if (!verify_witness(tree.graph(), *report.hit)) {
      throw contradiction("forbidden structure does not re-verify");
    }
    out.verdict = Verdict::NotLinearQuotients;
    out.criterion_clause = forbidden_clause(*report.hit);
    out.witness = std::move(*report.hit);
    return out;
  }
  if (!report.in_range) {
    throw contradiction("no induced P_n+P_n but diameter " + std::to_string(out.diameter) +
                        " exceeds 2n-1");
  }

  std::vector<Vertex> kept;
  try {
    kept = trim_vertices(tree);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TrimAmbiguous) throw contradiction(e.what());
    throw;
  }
  const Tree trimmed(induced_subgraph(tree.graph(), kept));
  const auto ideal = path_ideal(tree, n);
  if (relabel(path_ideal(trimmed, n), tree.labels()) != ideal) {
    throw contradiction("trimming changed the path ideal");
  }

  CaterpillarQuotients built;
  try {
    built = caterpillar_linear_quotients(trimmed, n);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PreconditionViolated) throw contradiction(e.what());
    throw;
  }
  std::vector<SquarefreeMonomial> order;
  order.reserve(built.order.order.size());
  for (auto m : built.order.order) order.push_back(relabel(m, trimmed.labels(), tree.graph()));
  auto checked = verify_order(ideal, order);
  auto* ok = std::get_if<QuotientOrder>(&checked);
  if (!ok) throw contradiction("lex order fails on the original tree");

  out.verdict = Verdict::LinearQuotients;
  switch (built.which) {
    case CaterpillarCase::DiameterAtMost2nMinus3:
      out.criterion_clause = "F_n, d <= 2n-3";
      break;
    case CaterpillarCase::Diameter2nMinus2:
      out.criterion_clause = built.reversed ? "F_n, d = 2n-2, l_n = 0" : "F_n, d = 2n-2, l_{n-2} = 0";
      break;
    case CaterpillarCase::Diameter2nMinus1:
      out.criterion_clause = "F_n, d = 2n-1";
      break;
  }
  out.witness = std::move(*ok);
  out.trimmed_vertices = std::move(kept);
  return out;
}

Classification classify_legacy_n23(const Tree& tree, std::size_t n, std::size_t lq_cap) {
  if (n != 2 && n != 3) throw Error(ErrorCode::NUnsupported, "legacy check covers n = 2, 3 only");
  require_small(tree);
  Classification out;
  out.n = n;
  out.experimental = true;
  out.diameter = diameter_and_longest_paths(tree).diameter;
  if (out.diameter + 1 < n) {
    out.verdict = Verdict::ZeroIdeal;
    out.criterion_clause = "diam(G) < n-1";
    out.witness = DiameterBound{out.diameter, n};
    return out;
  }
  if (auto hit = find_induced_two_paths(tree, n)) {
    out.verdict = Verdict::NotLinearQuotients;
    out.criterion_clause = forbidden_clause(*hit);
    out.witness = std::move(*hit);
    return out;
  }
  auto order = find_linear_quotients_order(path_ideal(tree, n), lq_cap);
  if (!order) throw contradiction("no induced P_n+P_n yet no linear-quotients order exists");
  out.verdict = Verdict::LinearQuotients;
  out.criterion_clause = "no induced P_n+P_n (experimental)";
  out.witness = std::move(*order);
  return out;
}

bool verify_classification(const Tree& tree, const Classification& c) {
  const auto diameter = diameter_and_longest_paths(tree).diameter;
  if (diameter != c.diameter) return false;
  switch (c.verdict) {
    case Verdict::ZeroIdeal: {
      const auto* bound = std::get_if<DiameterBound>(&c.witness);
      return bound && bound->diameter == diameter && bound->n == c.n && diameter + 1 < c.n &&
             enumerate_paths(tree, c.n).empty();
    }
    case Verdict::NotLinearQuotients: {
      const auto* w = std::get_if<ForbiddenWitness>(&c.witness);
      if (!w || !verify_witness(tree.graph(), *w)) return false;
      if (w->kind == ForbiddenWitness::Kind::TwoPaths) return w->n == c.n;
      return w->n == c.n || (c.n == 4 && w->n == 5 && w->k == 3);
    }
    case Verdict::LinearQuotients: {
      const auto* q = std::get_if<QuotientOrder>(&c.witness);
      if (!q) return false;
      auto checked = verify_order(path_ideal(tree, c.n), q->order);
      const auto* ok = std::get_if<QuotientOrder>(&checked);
      return ok && *ok == *q;
    }
  }
  return false;
}

VerifiedClassification classify_verified(const Tree& tree, std::size_t n, std::size_t lq_cap,
                                         std::size_t hom_cap, bool legacy_n23) {
  VerifiedClassification out;
  const bool legacy = legacy_n23 && (n == 2 || n == 3);
  const auto ideal = path_ideal(tree, n);
  if (ideal.size() > lq_cap) {
    throw Error(ErrorCode::TooManyGenerators, std::to_string(ideal.size()) +
                                                  " generators exceed the order-search cap " +
                                                  std::to_string(lq_cap));
  }
  out.classification = legacy ? classify_legacy_n23(tree, n, lq_cap) : classify(tree, n);
  const auto& c = out.classification;
  const bool positive = c.verdict != Verdict::NotLinearQuotients;

  auto disagree = [&](const std::string& what) {
    return Error(ErrorCode::OracleDisagreement,
                 what + "\nn = " + std::to_string(n) + "\nverdict = " +
                     std::string(verdict_name(c.verdict)) + " (" + c.criterion_clause +
                     ")\nedges:\n" + format_edge_list(tree.graph()));
  };
  if (!verify_classification(tree, c)) throw disagree("witness does not re-verify");
  out.lq_oracle = find_linear_quotients_order(ideal, lq_cap).has_value();
  if (out.lq_oracle != positive) throw disagree("exhaustive order search disagrees");
  if (!ideal.is_zero() && ideal.size() <= hom_cap) {
    out.linear_resolution = has_linear_resolution(ideal, hom_cap);
    if (*out.linear_resolution != positive) throw disagree("linear-resolution test disagrees");
  }
  return out;
}

}  // namespace pathideal
