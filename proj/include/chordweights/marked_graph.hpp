#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chordweights/chord_diagram.hpp"
#include "chordweights/formal_combination.hpp"

namespace chordweights {

// Simple graph on vertices 0..n-1 (n <= 64) with a set of marked vertices.
// Adjacency is stored as one bit row per vertex.
class MarkedGraph {
public:
  static constexpr int kMaxVertices = 64;

  MarkedGraph() = default;
  explicit MarkedGraph(int n);
  MarkedGraph(int n, const std::vector<std::pair<int, int>> &edges, std::uint64_t marks = 0);

  static MarkedGraph complete(int n);

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return (rows_[idx(u)] >> v) & 1U; }
  std::uint64_t neighbors(int v) const { return rows_[idx(v)]; }
  bool is_marked(int v) const { return (marks_ >> v) & 1U; }
  std::uint64_t marks() const { return marks_; }
  bool has_marks() const { return marks_ != 0; }
  std::uint64_t all_vertices() const;
  std::vector<std::pair<int, int>> edges() const;
  int degree(int v) const;

  void set_edge(int u, int v, bool present);
  void toggle_edge(int u, int v);
  void set_mark(int v, bool marked);
  MarkedGraph with_marks(std::uint64_t mask) const;

  // "edges: [[1,2],...] marks: [..]" with 1-based vertices.
  std::string to_string() const;

  friend bool operator==(const MarkedGraph &, const MarkedGraph &) = default;
  friend auto operator<=>(const MarkedGraph &, const MarkedGraph &) = default;

private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }
  void check_vertex(int v) const;

  int n_ = 0;
  std::uint64_t marks_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Isomorphism-invariant representative: the relabelling minimizing the
// (marks, adjacency) bit string among all relabellings that order vertices by
// (mark, degree) class. Exact; exponential in the class sizes, so intended for
// small graphs. Memoized per thread.
MarkedGraph canonical_graph(const MarkedGraph &g);

bool isomorphic(const MarkedGraph &a, const MarkedGraph &b);

// Vertex per chord, edge when endpoints alternate; marks carried over.
// Vertex i corresponds to chord label i of d.
MarkedGraph intersection_graph(const MarkedChordDiagram &d);

// Subgraph on the vertices of subset (renumbered in increasing order).
MarkedGraph induced_subgraph(const MarkedGraph &g, std::uint64_t subset);

MarkedGraph disjoint_union(const MarkedGraph &g1, const MarkedGraph &g2);

using GraphPair = std::pair<MarkedGraph, MarkedGraph>;

// μ(G) = Σ_J G_J ⊗ G_{V\J}, unmerged, canonicalized, 2^n terms.
std::vector<SubsetTerm<GraphPair>> graph_coproduct(const MarkedGraph &g);

// M(G) = Σ_J (-1)^|J| G^J; throws PreconditionError on marked input.
std::vector<SubsetTerm<MarkedGraph>> graph_marking_expansion(const MarkedGraph &g);

// G'_AB: edge AB complemented.
MarkedGraph complement_edge(const MarkedGraph &g, int a, int b);
// G~_AB: edge AC complemented for every C != A adjacent to B.
MarkedGraph neighbor_toggle(const MarkedGraph &g, int a, int b);

// The four graphs of Lando's relation in order G, G'_AB, G~_AB, G~'_AB with
// signs +, -, -, +.
struct LandoTerms {
  MarkedGraph g;
  MarkedGraph g_prime;
  MarkedGraph g_tilde;
  MarkedGraph g_tilde_prime;
};

LandoTerms lando_terms(const MarkedGraph &g, int a, int b);

// G - G'_AB - G~_AB + G~'_AB with canonical keys.
FormalCombination<MarkedGraph> lando_4t_combination(const MarkedGraph &g, int a, int b);

} // namespace chordweights
