#pragma once

// Coxeter matrices, Coxeter graphs and connected extensions.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace altcox {

/// Entry value standing for m_ij = infinity (also its JSON encoding).
inline constexpr int kInfinity = 0;

enum class Family { A, B, D };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Throws std::invalid_argument unless the rows form a valid Coxeter matrix.
  explicit CoxeterMatrix(const std::vector<std::vector<int>>& rows);

  int rank() const { return n_; }
  int operator()(int i, int j) const { return m_[static_cast<std::size_t>(i * n_ + j)]; }
  bool infinite(int i, int j) const { return (*this)(i, j) == kInfinity; }

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> m_;
};

/// Path for A (rank >= 1), path with m_01 = 4 for B (rank >= 2), fork at
/// vertex 2 with legs 0 and 1 for D (rank >= 3).
CoxeterMatrix standard_matrix(Family family, int rank);

nlohmann::json to_json(const CoxeterMatrix& m);
CoxeterMatrix matrix_from_json(const nlohmann::json& j);

/// Edge {tail, head} with tail < head, labelled by m_ij (kInfinity allowed).
/// Virtual edges carry label 2.
struct OrientedEdge {
  int tail = 0;
  int head = 0;
  int label = 3;
  bool is_virtual = false;

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(CoxeterMatrix m);

  int num_vertices() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  /// Edges with m_ij >= 3 or infinite, lexicographic by (tail, head).
  const std::vector<OrientedEdge>& edges() const { return edges_; }
  bool adjacent(int i, int j) const;

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;

 private:
  CoxeterMatrix matrix_;
  std::vector<OrientedEdge> edges_;
};

CoxeterGraph graph_from_matrix(const CoxeterMatrix& m);

/// A Coxeter graph plus label-2 virtual edges chaining one anchor per component.
class ConnectedExtension {
 public:
  const CoxeterGraph& base() const { return base_; }
  const CoxeterMatrix& matrix() const { return base_.matrix(); }
  int num_vertices() const { return base_.num_vertices(); }
  const std::vector<int>& anchors() const { return anchors_; }
  const std::vector<OrientedEdge>& virtual_edges() const { return virtual_; }

  /// Real and virtual edges together, lexicographic by (tail, head).
  const std::vector<OrientedEdge>& edges() const { return all_; }
  /// Sorted neighbours in the extended graph.
  const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int i, int j) const;
  /// The extended edge between i and j, if any (i, j in either order).
  std::optional<OrientedEdge> edge(int i, int j) const;

  friend ConnectedExtension connected_extension(const CoxeterGraph& g,
                                                std::optional<std::vector<int>> anchors);

 private:
  CoxeterGraph base_;
  std::vector<int> anchors_;
  std::vector<OrientedEdge> virtual_;
  std::vector<OrientedEdge> all_;
  std::vector<std::vector<int>> adj_;
};

/// Anchors, when given, must list one vertex per component in component
/// order; by default each component is anchored at its smallest vertex.
ConnectedExtension connected_extension(const CoxeterGraph& g,
                                       std::optional<std::vector<int>> anchors = std::nullopt);

/// Closed vertex sequences (v0, v1, ..., vk, v0).
using Cycle = std::vector<int>;

/// Fundamental cycles of the DFS tree rooted at 0 (neighbours visited in
/// increasing order), one per non-tree edge taken in edge order.
std::vector<Cycle> cycle_basis(const ConnectedExtension& e);

/// True when every vertex is reachable from vertex 0 in the extension.
bool is_connected(const ConnectedExtension& e);

/// Undirected DOT rendering; virtual edges dashed, labels shown when != 3.
std::string to_dot(const CoxeterGraph& g);
std::string to_dot(const ConnectedExtension& e);

}  // namespace altcox
