#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathideal {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph with unique string labels.
///
/// Vertices are indices `0..num_vertices()-1`; neighbor lists are kept sorted.
/// Edges are rejected if they are self-loops or repeat an existing edge.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const;
  std::optional<Vertex> find(std::string_view label) const;
  Vertex require(std::string_view label) const;

  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  bool is_connected() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::unordered_map<std::string, Vertex> index_;
  std::size_t num_edges_ = 0;
};

/// A SimpleGraph that is connected with |E| = |V| - 1 (checked on construction).
class Tree {
 public:
  explicit Tree(SimpleGraph graph);
  Tree(std::vector<std::string> labels, const std::vector<Edge>& edges)
      : Tree(SimpleGraph(std::move(labels), edges)) {}

  const SimpleGraph& graph() const { return graph_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }
  const std::vector<std::string>& labels() const { return graph_.labels(); }
  const std::string& label(Vertex v) const { return graph_.label(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return graph_.neighbors(v); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  std::vector<Edge> edges() const { return graph_.edges(); }
  Vertex require(std::string_view label) const { return graph_.require(label); }

  friend bool operator==(const Tree& a, const Tree& b) { return a.graph_ == b.graph_; }

 private:
  SimpleGraph graph_;
};

struct VertexPath {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  /// Orientation with the smaller endpoint index first.
  VertexPath canonical() const;

  friend bool operator==(const VertexPath&, const VertexPath&) = default;
  friend auto operator<=>(const VertexPath&, const VertexPath&) = default;
};

struct LongestPaths {
  std::size_t diameter = 0;
  std::vector<VertexPath> paths;  // canonical orientation, sorted
};

/// Central path x_1..x_{d-1} of a caterpillar with the leaf neighbors of
/// each central vertex (LN(x_i) = N(x_i) minus its central neighbors).
struct CaterpillarDecomposition {
  std::vector<Vertex> central_path;
  std::vector<std::vector<Vertex>> leaf_neighbors;
  std::size_t diameter = 0;

  /// l_i for 1-based central index i; 0 outside [1, d-1].
  std::size_t leaf_count(std::size_t i) const;
  /// The same caterpillar with x_i relabelled as x_{d-i}.
  CaterpillarDecomposition reversed() const;

  friend bool operator==(const CaterpillarDecomposition&,
                         const CaterpillarDecomposition&) = default;
};

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// labels; blank lines and lines starting with '#' are skipped.
Tree parse_tree(std::string_view text);
SimpleGraph parse_graph(std::string_view text);
std::string format_edge_list(const SimpleGraph& graph);

VertexPath unique_path(const Tree& tree, Vertex from, Vertex to);
std::vector<std::size_t> bfs_distances(const SimpleGraph& graph, Vertex source);
LongestPaths diameter_and_longest_paths(const Tree& tree);

/// All simple paths on `n` vertices, one per unordered path, canonical
/// orientation, sorted.
std::vector<VertexPath> enumerate_paths(const SimpleGraph& graph, std::size_t n);
inline std::vector<VertexPath> enumerate_paths(const Tree& tree, std::size_t n) {
  return enumerate_paths(tree.graph(), n);
}

/// Induced subgraph on `vertices`; the result lists them in ascending index
/// order and keeps their labels.
SimpleGraph induced_subgraph(const SimpleGraph& graph, std::span<const Vertex> vertices);

std::optional<CaterpillarDecomposition> caterpillar_decomposition(const Tree& tree);

/// Vertex set (ascending) of the union of closed neighborhoods of a longest
/// path. Every longest path is tried; disagreement raises TrimAmbiguous.
std::vector<Vertex> trim_vertices(const Tree& tree);
Tree trim(const Tree& tree);

/// Uniform labelled tree on `num_vertices` vertices (labels v1..vN) decoded
/// from a random Prüfer sequence.
Tree random_tree(std::size_t num_vertices, std::uint64_t seed);
Tree decode_pruefer(std::span<const std::size_t> sequence);

/// Caterpillar with central path x1..x{d-1} and leaf counts `leaves`
/// (leaf j of x_i is labelled x{i}_{j}).
Tree make_caterpillar(std::span<const std::size_t> leaves);

struct FamilySpec {
  enum class Kind { Path, Star, Lnk, TwoPaths, Caterpillar };
  Kind kind = Kind::Path;
  std::vector<std::size_t> args;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses `family:arg1[,arg2...]`, e.g. `Lnk:5,3` or `caterpillar:4,2,0,1`
/// (diameter first, then l_1..l_{d-1}).
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);
SimpleGraph make_family(const FamilySpec& spec);
/// As make_family, but rejects families that are not trees.
Tree make_family_tree(const FamilySpec& spec);

/// Canonical string of the unlabelled shape (AHU encoding rooted at a center).
std::string tree_shape_code(const Tree& tree);
/// One representative per isomorphism class of trees on `num_vertices`
/// vertices, ordered by shape code.
std::vector<Tree> all_unlabeled_trees(std::size_t num_vertices);

}  // namespace pathideal
