#include "altcox/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace altcox {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown family: " + s);
}

CoxeterMatrix::CoxeterMatrix(const std::vector<std::vector<int>>& rows)
    : n_(static_cast<int>(rows.size())) {
  if (n_ == 0) throw std::invalid_argument("Coxeter matrix must have rank >= 1");
  m_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("Coxeter matrix must be square");
    m_.insert(m_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 1)
      throw std::invalid_argument("Coxeter matrix diagonal entries must be 1");
    for (int j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i))
        throw std::invalid_argument("Coxeter matrix must be symmetric");
      if (i != j && (*this)(i, j) != kInfinity && (*this)(i, j) < 2)
        throw std::invalid_argument("off-diagonal Coxeter entries must be >= 2 or infinity");
    }
  }
}

std::vector<std::vector<int>> CoxeterMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return out;
}

CoxeterMatrix standard_matrix(Family family, int rank) {
  const int min_rank = family == Family::A ? 1 : family == Family::B ? 2 : 3;
  if (rank < min_rank)
    throw std::invalid_argument("rank " + std::to_string(rank) + " below minimum " +
                                std::to_string(min_rank) + " for type " + to_string(family));
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rank),
                                  std::vector<int>(static_cast<std::size_t>(rank), 2));
  auto set = [&](int i, int j, int v) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  for (int i = 0; i < rank; ++i) set(i, i, 1);
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < rank; ++i) set(i, i + 1, 3);
      break;
    case Family::B:
      set(0, 1, 4);
      for (int i = 1; i + 1 < rank; ++i) set(i, i + 1, 3);
      break;
    case Family::D:
      set(0, 2, 3);
      for (int i = 1; i + 1 < rank; ++i) set(i, i + 1, 3);
      break;
  }
  return CoxeterMatrix(m);
}

nlohmann::json to_json(const CoxeterMatrix& m) {
  return {{"n", m.rank()}, {"m", m.rows()}};
}

CoxeterMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m"))
    throw std::invalid_argument("matrix JSON needs an 'm' field");
  auto rows = j.at("m").get<std::vector<std::vector<int>>>();
  if (j.contains("n") && j.at("n").get<std::size_t>() != rows.size())
    throw std::invalid_argument("matrix JSON 'n' does not match row count");
  return CoxeterMatrix(rows);
}

CoxeterGraph::CoxeterGraph(CoxeterMatrix m) : matrix_(std::move(m)) {
  const int n = matrix_.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int label = matrix_(i, j);
      if (label == kInfinity || label >= 3) edges_.push_back({i, j, label, false});
    }
}

bool CoxeterGraph::adjacent(int i, int j) const {
  if (i == j) return false;
  const int label = matrix_(i, j);
  return label == kInfinity || label >= 3;
}

std::vector<std::vector<int>> CoxeterGraph::components() const {
  const int n = num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w = 0; w < n; ++w)
        if (comp[static_cast<std::size_t>(w)] < 0 && adjacent(v, w)) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

CoxeterGraph graph_from_matrix(const CoxeterMatrix& m) { return CoxeterGraph(m); }

bool ConnectedExtension::adjacent(int i, int j) const { return edge(i, j).has_value(); }

std::optional<OrientedEdge> ConnectedExtension::edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : all_)
    if (e.tail == i && e.head == j) return e;
  return std::nullopt;
}

ConnectedExtension connected_extension(const CoxeterGraph& g,
                                       std::optional<std::vector<int>> anchors) {
  ConnectedExtension ext;
  ext.base_ = g;
  const auto comps = g.components();
  const int n = g.num_vertices();

  std::vector<int> chosen(comps.size(), -1);
  if (anchors) {
    if (anchors->size() != comps.size())
      throw std::invalid_argument("expected exactly one anchor per component (" +
                                  std::to_string(comps.size()) + " components)");
    for (int a : *anchors) {
      if (a < 0 || a >= n) throw std::invalid_argument("anchor vertex out of range");
      std::size_t c = 0;
      while (std::find(comps[c].begin(), comps[c].end(), a) == comps[c].end()) ++c;
      if (chosen[c] >= 0)
        throw std::invalid_argument("two anchors in the component of vertex " +
                                    std::to_string(a));
      chosen[c] = a;
    }
  } else {
    for (std::size_t c = 0; c < comps.size(); ++c) chosen[c] = comps[c].front();
  }
  ext.anchors_ = chosen;

  for (std::size_t l = 0; l + 1 < chosen.size(); ++l) {
    int a = std::min(chosen[l], chosen[l + 1]);
    int b = std::max(chosen[l], chosen[l + 1]);
    ext.virtual_.push_back({a, b, 2, true});
  }
  ext.all_ = g.edges();
  ext.all_.insert(ext.all_.end(), ext.virtual_.begin(), ext.virtual_.end());
  std::sort(ext.all_.begin(), ext.all_.end(), [](const OrientedEdge& x, const OrientedEdge& y) {
    return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
  });
  ext.adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : ext.all_) {
    ext.adj_[static_cast<std::size_t>(e.tail)].push_back(e.head);
    ext.adj_[static_cast<std::size_t>(e.head)].push_back(e.tail);
  }
  for (auto& nb : ext.adj_) std::sort(nb.begin(), nb.end());
  return ext;
}

std::vector<Cycle> cycle_basis(const ConnectedExtension& e) {
  const int n = e.num_vertices();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> tree_edges;

  // Iterative DFS reproducing the recursive visiting order.
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  depth[0] = 0;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nb = e.neighbours(v);
    if (next == nb.size()) {
      stack.pop_back();
      continue;
    }
    const int w = nb[next++];
    if (depth[static_cast<std::size_t>(w)] >= 0) continue;
    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
    parent[static_cast<std::size_t>(w)] = v;
    tree_edges.emplace_back(std::min(v, w), std::max(v, w));
    stack.emplace_back(w, 0);
  }

  std::vector<Cycle> out;
  for (const auto& edge : e.edges()) {
    const auto key = std::pair(edge.tail, edge.head);
    if (std::find(tree_edges.begin(), tree_edges.end(), key) != tree_edges.end()) continue;
    // Tree path tail -> head through their lowest common ancestor.
    int a = edge.tail, b = edge.head;
    std::vector<int> up, down;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
        up.push_back(a);
        a = parent[static_cast<std::size_t>(a)];
      } else {
        down.push_back(b);
        b = parent[static_cast<std::size_t>(b)];
      }
    }
    Cycle c = up;
    c.push_back(a);
    c.insert(c.end(), down.rbegin(), down.rend());
    c.push_back(edge.tail);
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const ConnectedExtension& e) {
  const int n = e.num_vertices();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : e.neighbours(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  return count == n;
}

namespace {

void write_edge(std::ostringstream& os, const OrientedEdge& e) {
  os << "  " << e.tail << " -- " << e.head;
  std::vector<std::string> attrs;
  if (e.is_virtual) attrs.emplace_back("style=dashed");
  if (e.label == kInfinity)
    attrs.emplace_back("label=\"inf\"");
  else if (e.label != 3)
    attrs.push_back("label=\"" + std::to_string(e.label) + "\"");
  if (!attrs.empty()) {
    os << " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? "," : "") << attrs[i];
    os << "]";
  }
  os << ";\n";
}

std::string render_graph(int n, const std::vector<OrientedEdge>& edges) {
  std::ostringstream os;
  os << "graph coxeter {\n";
  for (int v = 0; v < n; ++v) os << "  " << v << ";\n";
  for (const auto& e : edges) write_edge(os, e);
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const CoxeterGraph& g) { return render_graph(g.num_vertices(), g.edges()); }

std::string to_dot(const ConnectedExtension& e) {
  return render_graph(e.num_vertices(), e.edges());
}

}  // namespace altcox
