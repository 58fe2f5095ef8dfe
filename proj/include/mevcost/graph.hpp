#pragma once

// Graphs over S_n: one vertex per permutation (indexed by lexicographic
// rank), with the complete or transposition edge rule, or a custom edge list.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mevcost/permutation.hpp"

namespace mevcost {

// Dense spectra at n = 8 need a 40320^2 matrix; allowed only explicitly.
inline constexpr int kSpectralCap = 7;

enum class GraphKind { complete, transposition, custom };

using Edge = std::pair<std::uint32_t, std::uint32_t>;  // first < second

struct PermutationGraph {
  int n = 0;
  GraphKind kind = GraphKind::complete;
  std::uint64_t num_vertices = 0;
  std::vector<Edge> edges;  // sorted
  std::vector<std::uint32_t> degree;
  int diameter = 0;

  // CSR adjacency, built alongside the edge list.
  std::vector<std::uint64_t> adj_offsets;
  std::vector<std::uint32_t> adj;
};

// Builds the graph, verifies connectivity, caches degrees and the diameter.
// Custom graphs must be connected; n above the cap requires allow_large.
PermutationGraph build_graph(int n, GraphKind kind,
                             std::optional<std::vector<Edge>> custom_edges = {},
                             bool allow_large = false);

// BFS eccentricity of one vertex (vertex-transitive kinds) or of all
// vertices (custom); build_graph already caches the result.
int compute_diameter(const PermutationGraph& g);

const char* graph_kind_name(GraphKind k);

}  // namespace mevcost
