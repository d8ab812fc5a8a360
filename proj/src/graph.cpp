#include "pathideal/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "pathideal/error.hpp"
#include "pathideal/rng.hpp"

namespace pathideal {

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

void check_vertex(const SimpleGraph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw Error(ErrorCode::InvalidVertex, "vertex index " + std::to_string(v) + " out of range");
  }
}

std::string_view trim_ws(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string numbered(std::string_view prefix, std::size_t i) {
  return std::string(prefix) + std::to_string(i);
}

}  // namespace

// ---------------------------------------------------------------- SimpleGraph

SimpleGraph::SimpleGraph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)), adjacency_(labels_.size()) {
  index_.reserve(labels_.size());
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (!index_.emplace(labels_[v], v).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate vertex label '" + labels_[v] + "'");
    }
  }
  for (const auto& [u, v] : edges) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at '" + labels_[u] + "'");
    if (std::find(adjacency_[u].begin(), adjacency_[u].end(), v) != adjacency_[u].end()) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge '" + labels_[u] + " " + labels_[v] + "' appears twice");
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++num_edges_;
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

const std::string& SimpleGraph::label(Vertex v) const {
  check_vertex(*this, v);
  return labels_[v];
}

std::optional<Vertex> SimpleGraph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex SimpleGraph::require(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::InvalidVertex, "unknown vertex label '" + std::string(label) + "'");
}

const std::vector<Vertex>& SimpleGraph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return adjacency_[v];
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::is_connected() const {
  if (labels_.empty()) return true;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreached; });
}

// ----------------------------------------------------------------------- Tree

Tree::Tree(SimpleGraph graph) : graph_(std::move(graph)) {
  const std::size_t n = graph_.num_vertices();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a tree needs at least one vertex");
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto root = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : graph_.edges()) {
    const Vertex ru = root(u);
    const Vertex rv = root(v);
    if (ru == rv) {
      throw Error(ErrorCode::CycleDetected,
                  "edge '" + graph_.label(u) + " " + graph_.label(v) + "' closes a cycle");
    }
    parent[ru] = rv;
  }
  if (graph_.num_edges() != n - 1) {
    throw Error(ErrorCode::DisconnectedInput,
                "graph has " + std::to_string(n - graph_.num_edges()) + " components");
  }
}

// ---------------------------------------------------------------------- paths

VertexPath VertexPath::canonical() const {
  if (vertices.size() > 1 && vertices.back() < vertices.front()) {
    return VertexPath{{vertices.rbegin(), vertices.rend()}};
  }
  return *this;
}

std::size_t CaterpillarDecomposition::leaf_count(std::size_t i) const {
  if (i == 0 || i > leaf_neighbors.size()) return 0;
  return leaf_neighbors[i - 1].size();
}

CaterpillarDecomposition CaterpillarDecomposition::reversed() const {
  CaterpillarDecomposition out = *this;
  std::reverse(out.central_path.begin(), out.central_path.end());
  std::reverse(out.leaf_neighbors.begin(), out.leaf_neighbors.end());
  return out;
}

Tree parse_tree(std::string_view text) { return Tree(parse_graph(text)); }

SimpleGraph parse_graph(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = index.emplace(std::string(label), labels.size());
    if (inserted) labels.emplace_back(label);
    return it->second;
  };
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = trim_ws(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) +
                                                ": expected two labels, got " +
                                                std::to_string(tokens.size()));
    }
    const Vertex u = intern(tokens[0]);
    const Vertex v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  return SimpleGraph(std::move(labels), edges);
}

std::string format_edge_list(const SimpleGraph& graph) {
  std::string out;
  for (const auto& [u, v] : graph.edges()) {
    out += graph.label(u);
    out += ' ';
    out += graph.label(v);
    out += '\n';
  }
  return out;
}

std::vector<std::size_t> bfs_distances(const SimpleGraph& graph, Vertex source) {
  check_vertex(graph, source);
  std::vector<std::size_t> dist(graph.num_vertices(), kUnreached);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : graph.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

VertexPath unique_path(const Tree& tree, Vertex from, Vertex to) {
  const auto& g = tree.graph();
  check_vertex(g, from);
  check_vertex(g, to);
  std::vector<Vertex> parent(g.num_vertices(), kUnreached);
  std::queue<Vertex> queue;
  parent[to] = to;
  queue.push(to);
  while (!queue.empty() && parent[from] == kUnreached) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] == kUnreached) {
        parent[w] = u;
        queue.push(w);
      }
    }
  }
  VertexPath path;
  for (Vertex v = from; v != to; v = parent[v]) path.vertices.push_back(v);
  path.vertices.push_back(to);
  return path;
}

LongestPaths diameter_and_longest_paths(const Tree& tree) {
  const std::size_t n = tree.num_vertices();
  LongestPaths out;
  if (n == 1) {
    out.paths.push_back(VertexPath{{0}});
    return out;
  }
  std::vector<std::vector<std::size_t>> dist(n);
  for (Vertex u = 0; u < n; ++u) {
    dist[u] = bfs_distances(tree.graph(), u);
    for (Vertex v = u + 1; v < n; ++v) out.diameter = std::max(out.diameter, dist[u][v]);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist[u][v] == out.diameter) out.paths.push_back(unique_path(tree, u, v));
    }
  }
  return out;
}

std::vector<VertexPath> enumerate_paths(const SimpleGraph& graph, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "paths need at least one vertex");
  std::vector<VertexPath> out;
  std::vector<Vertex> stack;
  std::vector<char> on_path(graph.num_vertices(), 0);
  auto extend = [&](auto&& self) -> void {
    if (stack.size() == n) {
      if (n == 1 || stack.front() < stack.back()) out.push_back(VertexPath{stack});
      return;
    }
    for (Vertex w : graph.neighbors(stack.back())) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      stack.push_back(w);
      self(self);
      stack.pop_back();
      on_path[w] = 0;
    }
  };
  for (Vertex s = 0; s < graph.num_vertices(); ++s) {
    on_path[s] = 1;
    stack.assign(1, s);
    extend(extend);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& graph, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> local(graph.num_vertices(), kUnreached);
  std::vector<std::string> labels;
  for (Vertex v : keep) {
    check_vertex(graph, v);
    local[v] = labels.size();
    labels.push_back(graph.label(v));
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : graph.edges()) {
    if (local[u] != kUnreached && local[v] != kUnreached) edges.emplace_back(local[u], local[v]);
  }
  return SimpleGraph(std::move(labels), edges);
}

// ----------------------------------------------------------------- caterpillar

std::optional<CaterpillarDecomposition> caterpillar_decomposition(const Tree& tree) {
  const std::size_t n = tree.num_vertices();
  CaterpillarDecomposition out;
  if (n <= 2) {
    out.diameter = n - 1;
    return out;
  }
  std::vector<char> internal(n, 0);
  std::vector<Vertex> spine;
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) >= 2) {
      internal[v] = 1;
      spine.push_back(v);
    }
  }
  // Internal vertices of a tree induce a subtree; it is a path iff every
  // internal vertex has at most two internal neighbors.
  auto internal_degree = [&](Vertex v) {
    return std::count_if(tree.neighbors(v).begin(), tree.neighbors(v).end(),
                         [&](Vertex w) { return internal[w] != 0; });
  };
  for (Vertex v : spine) {
    if (internal_degree(v) > 2) return std::nullopt;
  }
  Vertex start = spine.front();
  for (Vertex v : spine) {
    if (internal_degree(v) <= 1) {
      start = v;
      break;
    }
  }
  Vertex prev = kUnreached;
  for (Vertex cur = start; cur != kUnreached;) {
    out.central_path.push_back(cur);
    Vertex next = kUnreached;
    for (Vertex w : tree.neighbors(cur)) {
      if (internal[w] && w != prev) next = w;
    }
    prev = cur;
    cur = next;
  }
  for (Vertex x : out.central_path) {
    std::vector<Vertex> leaves;
    for (Vertex w : tree.neighbors(x)) {
      if (!internal[w]) leaves.push_back(w);
    }
    std::sort(leaves.begin(), leaves.end(),
              [&](Vertex a, Vertex b) { return tree.label(a) < tree.label(b); });
    out.leaf_neighbors.push_back(std::move(leaves));
  }
  out.diameter = out.central_path.size() + 1;

  // Orientation: compare the central label sequence with its reversal, then
  // leaf counts, then leaf labels.
  auto key = [&](const CaterpillarDecomposition& d) {
    std::vector<std::string> labels;
    for (Vertex v : d.central_path) labels.push_back(tree.label(v));
    std::vector<std::size_t> counts;
    std::vector<std::string> leaf_labels;
    for (const auto& ln : d.leaf_neighbors) {
      counts.push_back(ln.size());
      for (Vertex v : ln) leaf_labels.push_back(tree.label(v));
    }
    return std::make_tuple(labels, counts, leaf_labels);
  };
  auto flipped = out.reversed();
  if (key(flipped) < key(out)) out = std::move(flipped);
  return out;
}

std::vector<Vertex> trim_vertices(const Tree& tree) {
  const auto longest = diameter_and_longest_paths(tree);
  std::optional<std::vector<Vertex>> result;
  for (const auto& path : longest.paths) {
    std::vector<char> keep(tree.num_vertices(), 0);
    for (Vertex v : path.vertices) {
      keep[v] = 1;
      for (Vertex w : tree.neighbors(v)) keep[w] = 1;
    }
    std::vector<Vertex> set;
    for (Vertex v = 0; v < keep.size(); ++v) {
      if (keep[v]) set.push_back(v);
    }
    if (!result) {
      result = std::move(set);
    } else if (*result != set) {
      throw Error(ErrorCode::TrimAmbiguous,
                  "longest paths starting at '" + tree.label(longest.paths.front().vertices.front()) +
                      "' and '" + tree.label(path.vertices.front()) +
                      "' give different trimmed vertex sets");
    }
  }
  return *result;
}

Tree trim(const Tree& tree) {
  const auto keep = trim_vertices(tree);
  return Tree(induced_subgraph(tree.graph(), keep));
}

// -------------------------------------------------------------- random / enum

Tree decode_pruefer(std::span<const std::size_t> sequence) {
  const std::size_t n = sequence.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t s : sequence) {
    if (s >= n) throw Error(ErrorCode::InvalidArgument, "Prüfer entry out of range");
    ++degree[s];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t s : sequence) {
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(numbered("v", i));
  return Tree(std::move(labels), edges);
}

Tree random_tree(std::size_t num_vertices, std::uint64_t seed) {
  if (num_vertices < 2) throw Error(ErrorCode::InvalidArgument, "random_tree needs >= 2 vertices");
  SplitMix64 rng(seed);
  std::vector<std::size_t> sequence(num_vertices - 2);
  for (auto& s : sequence) s = rng.below(num_vertices);
  return decode_pruefer(sequence);
}

Tree make_caterpillar(std::span<const std::size_t> leaves) {
  const std::size_t spine = leaves.size();
  if (spine == 0 || leaves.front() == 0 || leaves.back() == 0) {
    throw Error(ErrorCode::BadFamilyParameters,
                "caterpillar needs a nonempty central path with l_1 >= 1 and l_{d-1} >= 1");
  }
  if (spine == 1 && leaves.front() < 2) {
    throw Error(ErrorCode::BadFamilyParameters, "a caterpillar of diameter 2 needs l_1 >= 2");
  }
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= spine; ++i) labels.push_back(numbered("x", i));
  for (std::size_t i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  for (std::size_t i = 0; i < spine; ++i) {
    for (std::size_t j = 1; j <= leaves[i]; ++j) {
      edges.emplace_back(i, labels.size());
      labels.push_back(numbered("x", i + 1) + "_" + std::to_string(j));
    }
  }
  return Tree(std::move(labels), edges);
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::BadFamilyParameters, "expected family:args, got '" + std::string(text) + "'");
  }
  const auto name = text.substr(0, colon);
  FamilySpec spec;
  if (name == "path") spec.kind = FamilySpec::Kind::Path;
  else if (name == "star") spec.kind = FamilySpec::Kind::Star;
  else if (name == "Lnk") spec.kind = FamilySpec::Kind::Lnk;
  else if (name == "two_paths") spec.kind = FamilySpec::Kind::TwoPaths;
  else if (name == "caterpillar") spec.kind = FamilySpec::Kind::Caterpillar;
  else throw Error(ErrorCode::BadFamilyParameters, "unknown family '" + std::string(name) + "'");

  auto rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto token = trim_ws(rest.substr(0, comma));
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::BadFamilyParameters, "bad integer '" + std::string(token) + "'");
    }
    spec.args.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
  static constexpr const char* kNames[] = {"path", "star", "Lnk", "two_paths", "caterpillar"};
  std::string out = kNames[static_cast<int>(spec.kind)];
  out += ':';
  for (std::size_t i = 0; i < spec.args.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.args[i]);
  }
  return out;
}

SimpleGraph make_family(const FamilySpec& spec) {
  const auto& a = spec.args;
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::BadFamilyParameters, format_family_spec(spec) + ": " + why);
  };
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilySpec::Kind::Path: {
      if (a.size() != 1 || a[0] < 1) throw bad("path:m needs m >= 1");
      for (std::size_t i = 1; i <= a[0]; ++i) labels.push_back(numbered("v", i));
      for (std::size_t i = 0; i + 1 < a[0]; ++i) edges.emplace_back(i, i + 1);
      break;
    }
    case FamilySpec::Kind::Star: {
      if (a.size() != 1 || a[0] < 1) throw bad("star:m needs m >= 1");
      labels.push_back("c");
      for (std::size_t i = 1; i <= a[0]; ++i) {
        labels.push_back(numbered("v", i));
        edges.emplace_back(0, i);
      }
      break;
    }
    case FamilySpec::Kind::Lnk: {
      if (a.size() != 2) throw bad("Lnk needs two parameters n,k");
      const std::size_t n = a[0];
      const std::size_t k = a[1];
      if (n < 5 || k < 3 || k + 2 > n) throw bad("Lnk:n,k needs n >= 5 and 3 <= k <= n-2");
      for (std::size_t i = 1; i <= n; ++i) labels.push_back(numbered("x", i));
      for (std::size_t i = 1; i < k; ++i) labels.push_back(numbered("y", i));
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      for (std::size_t i = 0; i + 2 < k; ++i) edges.emplace_back(n + i, n + i + 1);
      edges.emplace_back(n + k - 2, k - 1);  // y_{k-1} x_k
      break;
    }
    case FamilySpec::Kind::TwoPaths: {
      if (a.size() != 1 || a[0] < 1) throw bad("two_paths:n needs n >= 1");
      const std::size_t n = a[0];
      for (std::size_t i = 1; i <= n; ++i) labels.push_back(numbered("x", i));
      for (std::size_t i = 1; i <= n; ++i) labels.push_back(numbered("y", i));
      for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
        edges.emplace_back(n + i, n + i + 1);
      }
      break;
    }
    case FamilySpec::Kind::Caterpillar: {
      if (a.size() < 2 || a[0] < 2 || a.size() != a[0]) {
        throw bad("caterpillar:d,l_1,...,l_{d-1} needs d >= 2 and d-1 leaf counts");
      }
      return make_caterpillar(std::span(a).subspan(1)).graph();
    }
  }
  return SimpleGraph(std::move(labels), edges);
}

Tree make_family_tree(const FamilySpec& spec) {
  if (spec.kind == FamilySpec::Kind::TwoPaths) {
    throw Error(ErrorCode::BadFamilyParameters, "two_paths is not a tree");
  }
  return Tree(make_family(spec));
}

// -------------------------------------------------------------- shape codes

namespace {

std::string rooted_code(const Tree& tree, Vertex root, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : tree.neighbors(root)) {
    if (w != parent) children.push_back(rooted_code(tree, w, root));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

std::vector<Vertex> centers(const Tree& tree) {
  const std::size_t n = tree.num_vertices();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : tree.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string tree_shape_code(const Tree& tree) {
  std::string best;
  for (Vertex c : centers(tree)) {
    auto code = rooted_code(tree, c, kUnreached);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<Tree> all_unlabeled_trees(std::size_t num_vertices) {
  if (num_vertices == 0) return {};
  // Every tree on k+1 vertices is a tree on k vertices plus one leaf.
  std::vector<std::vector<Edge>> layer{{}};
  for (std::size_t k = 1; k < num_vertices; ++k) {
    std::set<std::string> seen;
    std::vector<std::vector<Edge>> next;
    for (const auto& edges : layer) {
      for (Vertex attach = 0; attach < k; ++attach) {
        auto grown = edges;
        grown.emplace_back(attach, k);
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= k + 1; ++i) labels.push_back(numbered("v", i));
        if (seen.insert(tree_shape_code(Tree(std::move(labels), grown))).second) {
          next.push_back(std::move(grown));
        }
      }
    }
    layer = std::move(next);
  }
  std::vector<std::pair<std::string, Tree>> coded;
  for (const auto& edges : layer) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= num_vertices; ++i) labels.push_back(numbered("v", i));
    Tree t(std::move(labels), edges);
    coded.emplace_back(tree_shape_code(t), std::move(t));
  }
  std::sort(coded.begin(), coded.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tree> out;
  for (auto& [code, t] : coded) out.push_back(std::move(t));
  return out;
}

}  // namespace pathideal
