#include "chordweights/marked_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "chordweights/errors.hpp"

namespace chordweights {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

} // namespace

MarkedGraph::MarkedGraph(int n) : n_(n), rows_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) throw PreconditionError("graph size must be in 0..64");
}

MarkedGraph::MarkedGraph(int n, const std::vector<std::pair<int, int>> &edges, std::uint64_t marks)
    : MarkedGraph(n) {
  for (const auto &[u, v] : edges) set_edge(u, v, true);
  if (marks & ~all_vertices()) throw PreconditionError("marked vertex out of range");
  marks_ = marks;
}

MarkedGraph MarkedGraph::complete(int n) {
  MarkedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v, true);
  return g;
}

std::uint64_t MarkedGraph::all_vertices() const { return low_mask(n_); }

void MarkedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw PreconditionError("vertex out of range");
}

std::vector<std::pair<int, int>> MarkedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int MarkedGraph::degree(int v) const { return std::popcount(neighbors(v)); }

void MarkedGraph::set_edge(int u, int v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loops are not allowed");
  if (present) {
    rows_[idx(u)] |= bit(v);
    rows_[idx(v)] |= bit(u);
  } else {
    rows_[idx(u)] &= ~bit(v);
    rows_[idx(v)] &= ~bit(u);
  }
}

void MarkedGraph::toggle_edge(int u, int v) { set_edge(u, v, !adjacent(u, v)); }

void MarkedGraph::set_mark(int v, bool marked) {
  check_vertex(v);
  marks_ = marked ? (marks_ | bit(v)) : (marks_ & ~bit(v));
}

MarkedGraph MarkedGraph::with_marks(std::uint64_t mask) const {
  if (mask & ~all_vertices()) throw PreconditionError("marked vertex out of range");
  MarkedGraph g = *this;
  g.marks_ = mask;
  return g;
}

std::string MarkedGraph::to_string() const {
  std::ostringstream out;
  out << "vertices: " << n_ << " edges: [";
  bool first = true;
  for (const auto &[u, v] : edges()) {
    out << (first ? "" : ",") << '[' << u + 1 << ',' << v + 1 << ']';
    first = false;
  }
  out << "] marks: [";
  first = true;
  for (int v = 0; v < n_; ++v) {
    if (!is_marked(v)) continue;
    out << (first ? "" : ",") << v + 1;
    first = false;
  }
  out << ']';
  return out.str();
}

namespace {

MarkedGraph relabel(const MarkedGraph &g, const std::vector<int> &new_index) {
  MarkedGraph out(g.size());
  std::uint64_t marks = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (g.is_marked(v)) marks |= bit(new_index[static_cast<std::size_t>(v)]);
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (u > v)
        out.set_edge(new_index[static_cast<std::size_t>(v)], new_index[static_cast<std::size_t>(u)],
                     true);
    }
  }
  return out.with_marks(marks);
}

struct VertexInvariant {
  bool marked;
  int degree;
  std::vector<int> neighbor_degrees;
  auto operator<=>(const VertexInvariant &) const = default;
};

MarkedGraph compute_canonical(const MarkedGraph &g) {
  const int n = g.size();
  std::vector<VertexInvariant> inv(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto &iv = inv[static_cast<std::size_t>(v)];
    iv.marked = g.is_marked(v);
    iv.degree = g.degree(v);
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
      iv.neighbor_degrees.push_back(g.degree(std::countr_zero(nb)));
      nb &= nb - 1;
    }
    std::sort(iv.neighbor_degrees.begin(), iv.neighbor_degrees.end());
  }
  // Order vertices by invariant; only permutations inside equal-invariant
  // blocks are searched.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inv[static_cast<std::size_t>(a)] < inv[static_cast<std::size_t>(b)];
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() &&
           inv[static_cast<std::size_t>(order[j])] == inv[static_cast<std::size_t>(order[i])])
      ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<int> new_index(static_cast<std::size_t>(n));
  MarkedGraph best;
  bool have_best = false;
  // Odometer over per-block permutations.
  while (true) {
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      new_index[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    MarkedGraph candidate = relabel(g, new_index);
    if (!have_best || candidate < best) {
      best = std::move(candidate);
      have_best = true;
    }
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
  }
  return best;
}

} // namespace

MarkedGraph canonical_graph(const MarkedGraph &g) {
  thread_local std::map<MarkedGraph, MarkedGraph> memo;
  if (auto it = memo.find(g); it != memo.end()) return it->second;
  MarkedGraph c = compute_canonical(g);
  memo.emplace(g, c);
  return c;
}

bool isomorphic(const MarkedGraph &a, const MarkedGraph &b) {
  return a.size() == b.size() && canonical_graph(a) == canonical_graph(b);
}

MarkedGraph intersection_graph(const MarkedChordDiagram &d) {
  const int k = d.degree();
  MarkedGraph g(k);
  std::vector<std::pair<std::size_t, std::size_t>> ends(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) ends[static_cast<std::size_t>(c)] = d.endpoints(c);
  for (int u = 0; u < k; ++u) {
    const auto [a, b] = ends[static_cast<std::size_t>(u)];
    for (int v = u + 1; v < k; ++v) {
      const auto [c, e] = ends[static_cast<std::size_t>(v)];
      const bool c_inside = a < c && c < b;
      const bool e_inside = a < e && e < b;
      if (c_inside != e_inside) g.set_edge(u, v, true);
    }
  }
  return g.with_marks(d.mark_mask());
}

MarkedGraph induced_subgraph(const MarkedGraph &g, std::uint64_t subset) {
  if (subset & ~g.all_vertices()) throw PreconditionError("vertex subset out of range");
  std::vector<int> index(static_cast<std::size_t>(g.size()), -1);
  int m = 0;
  for (int v = 0; v < g.size(); ++v)
    if ((subset >> v) & 1U) index[static_cast<std::size_t>(v)] = m++;
  MarkedGraph out(m);
  std::uint64_t marks = 0;
  for (int v = 0; v < g.size(); ++v) {
    const int nv = index[static_cast<std::size_t>(v)];
    if (nv < 0) continue;
    if (g.is_marked(v)) marks |= bit(nv);
    for (int u = v + 1; u < g.size(); ++u) {
      const int nu = index[static_cast<std::size_t>(u)];
      if (nu >= 0 && g.adjacent(u, v)) out.set_edge(nv, nu, true);
    }
  }
  return out.with_marks(marks);
}

MarkedGraph disjoint_union(const MarkedGraph &g1, const MarkedGraph &g2) {
  const int n1 = g1.size();
  if (n1 + g2.size() > MarkedGraph::kMaxVertices)
    throw PreconditionError("disjoint union exceeds 64 vertices");
  MarkedGraph out(n1 + g2.size());
  for (const auto &[u, v] : g1.edges()) out.set_edge(u, v, true);
  for (const auto &[u, v] : g2.edges()) out.set_edge(u + n1, v + n1, true);
  return out.with_marks(g1.marks() | (g2.marks() << n1));
}

std::vector<SubsetTerm<GraphPair>> graph_coproduct(const MarkedGraph &g) {
  const int n = g.size();
  if (n >= 63) throw PreconditionError("graph coproduct size too large");
  const std::uint64_t all = g.all_vertices();
  std::vector<SubsetTerm<GraphPair>> out;
  for (std::uint64_t j = 0; j <= all; ++j) {
    out.push_back({j, 1,
                   {canonical_graph(induced_subgraph(g, j)),
                    canonical_graph(induced_subgraph(g, all & ~j))}});
  }
  return out;
}

std::vector<SubsetTerm<MarkedGraph>> graph_marking_expansion(const MarkedGraph &g) {
  if (g.has_marks()) throw PreconditionError("marking expansion requires an unmarked graph");
  if (g.size() >= 63) throw PreconditionError("marking expansion size too large");
  std::vector<SubsetTerm<MarkedGraph>> out;
  for (std::uint64_t j = 0; j <= g.all_vertices(); ++j) {
    const std::int64_t sign = (std::popcount(j) % 2) ? -1 : 1;
    out.push_back({j, sign, canonical_graph(g.with_marks(j))});
  }
  return out;
}

MarkedGraph complement_edge(const MarkedGraph &g, int a, int b) {
  MarkedGraph out = g;
  out.toggle_edge(a, b);
  return out;
}

MarkedGraph neighbor_toggle(const MarkedGraph &g, int a, int b) {
  if (a == b) throw PreconditionError("A and B must be distinct vertices");
  MarkedGraph out = g;
  std::uint64_t nb = g.neighbors(b) & ~bit(a);
  while (nb) {
    out.toggle_edge(a, std::countr_zero(nb));
    nb &= nb - 1;
  }
  return out;
}

LandoTerms lando_terms(const MarkedGraph &g, int a, int b) {
  if (a == b) throw PreconditionError("A and B must be distinct vertices");
  MarkedGraph tilde = neighbor_toggle(g, a, b);
  MarkedGraph tilde_prime = complement_edge(tilde, a, b);
  return {g, complement_edge(g, a, b), std::move(tilde), std::move(tilde_prime)};
}

FormalCombination<MarkedGraph> lando_4t_combination(const MarkedGraph &g, int a, int b) {
  const LandoTerms t = lando_terms(g, a, b);
  FormalCombination<MarkedGraph> out;
  out.add(canonical_graph(t.g), 1);
  out.add(canonical_graph(t.g_prime), -1);
  out.add(canonical_graph(t.g_tilde), -1);
  out.add(canonical_graph(t.g_tilde_prime), 1);
  return out;
}

} // namespace chordweights
