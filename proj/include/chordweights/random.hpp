#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "chordweights/chord_diagram.hpp"
#include "chordweights/marked_graph.hpp"

namespace chordweights {

// Uniform random matching on 2n points with each chord marked independently.
template <typename Rng>
MarkedChordDiagram random_diagram(int n, double mark_probability, Rng &rng) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(2 * n));
  for (int c = 0; c < n; ++c) {
    word.push_back(c);
    word.push_back(c);
  }
  std::shuffle(word.begin(), word.end(), rng);
  std::bernoulli_distribution coin(mark_probability);
  std::vector<bool> marks(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < marks.size(); ++i) marks[i] = coin(rng);
  return MarkedChordDiagram(std::move(word), std::move(marks)).normalized();
}

// Erdős–Rényi graph on n vertices, unmarked.
template <typename Rng> MarkedGraph random_graph(int n, double edge_probability, Rng &rng) {
  std::bernoulli_distribution coin(edge_probability);
  MarkedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.set_edge(u, v, true);
  return g;
}

} // namespace chordweights
