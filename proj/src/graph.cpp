#include "mevcost/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mevcost {

namespace {

std::vector<Edge> transposition_edges(int n) {
  auto group = enumerate_group(n);
  std::vector<Edge> edges;
  for (std::uint32_t r = 0; r < group.size(); ++r) {
    auto map = group[r].mapping();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::swap(map[i], map[j]);
        std::uint64_t r2 = Permutation(map).rank();
        std::swap(map[i], map[j]);
        if (r < r2) edges.emplace_back(r, static_cast<std::uint32_t>(r2));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Edge> complete_edges(std::uint64_t nv) {
  std::vector<Edge> edges;
  edges.reserve(nv * (nv - 1) / 2);
  for (std::uint32_t i = 0; i < nv; ++i)
    for (std::uint32_t j = i + 1; j < nv; ++j) edges.emplace_back(i, j);
  return edges;
}

void build_adjacency(PermutationGraph& g) {
  g.degree.assign(g.num_vertices, 0);
  for (const auto& [a, b] : g.edges) {
    if (a >= g.num_vertices || b >= g.num_vertices || a == b)
      throw std::invalid_argument("edge endpoint out of range or self-loop");
    ++g.degree[a];
    ++g.degree[b];
  }
  g.adj_offsets.assign(g.num_vertices + 1, 0);
  for (std::uint64_t v = 0; v < g.num_vertices; ++v)
    g.adj_offsets[v + 1] = g.adj_offsets[v] + g.degree[v];
  g.adj.resize(2 * g.edges.size());
  std::vector<std::uint64_t> cursor(g.adj_offsets.begin(),
                                    g.adj_offsets.end() - 1);
  for (const auto& [a, b] : g.edges) {
    g.adj[cursor[a]++] = b;
    g.adj[cursor[b]++] = a;
  }
}

// BFS eccentricity; returns -1 if some vertex is unreachable.
int eccentricity(const PermutationGraph& g, std::uint32_t src) {
  std::vector<int> dist(g.num_vertices, -1);
  std::queue<std::uint32_t> q;
  dist[src] = 0;
  q.push(src);
  int ecc = 0;
  std::uint64_t visited = 0;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    ++visited;
    ecc = std::max(ecc, dist[v]);
    for (auto k = g.adj_offsets[v]; k < g.adj_offsets[v + 1]; ++k) {
      auto w = g.adj[k];
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return visited == g.num_vertices ? ecc : -1;
}

}  // namespace

int compute_diameter(const PermutationGraph& g) {
  if (g.num_vertices == 1) return 0;
  int first = eccentricity(g, 0);
  if (first < 0) throw std::invalid_argument("graph is not connected");
  if (g.kind != GraphKind::custom) return first;  // vertex-transitive
  int diam = first;
  for (std::uint32_t v = 1; v < g.num_vertices; ++v) {
    int e = eccentricity(g, v);
    if (e < 0) throw std::invalid_argument("graph is not connected");
    diam = std::max(diam, e);
  }
  return diam;
}

PermutationGraph build_graph(int n, GraphKind kind,
                             std::optional<std::vector<Edge>> custom_edges,
                             bool allow_large) {
  if (n < 1 || n > kMaxDegree || (n > kSpectralCap && !allow_large))
    throw DegreeError("graph degree " + std::to_string(n) +
                      " exceeds the spectral cap");
  PermutationGraph g;
  g.n = n;
  g.kind = kind;
  g.num_vertices = factorial(n);
  switch (kind) {
    case GraphKind::complete:
      g.edges = complete_edges(g.num_vertices);
      break;
    case GraphKind::transposition:
      g.edges = transposition_edges(n);
      break;
    case GraphKind::custom:
      if (!custom_edges) throw std::invalid_argument("custom graph needs edges");
      g.edges = std::move(*custom_edges);
      for (auto& [a, b] : g.edges)
        if (a > b) std::swap(a, b);
      std::sort(g.edges.begin(), g.edges.end());
      g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
      break;
  }
  build_adjacency(g);
  g.diameter = compute_diameter(g);  // throws if not connected
  return g;
}

const char* graph_kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::complete: return "complete";
    case GraphKind::transposition: return "transposition";
    case GraphKind::custom: return "custom";
  }
  return "?";
}

}  // namespace mevcost
