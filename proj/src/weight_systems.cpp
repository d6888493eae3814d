#include "chordweights/weight_systems.hpp"

#include <array>
#include <bit>

#include "chordweights/band_surgery.hpp"
#include "chordweights/errors.hpp"
#include "chordweights/gf2_matrix.hpp"

namespace chordweights {

namespace {

using Poly = BivariatePolynomial;

std::int64_t sign_of(std::uint64_t subset) { return (std::popcount(subset) % 2) ? -1 : 1; }

int rank_of(const MarkedGraph &g) { return static_cast<int>(gf2_rank(adjacency_matrix(g))); }

void require_subset_size(int n) {
  if (n > 30) throw PreconditionError("subset expansion limited to 30 vertices or chords");
}

void require_unmarked(const MarkedChordDiagram &d, std::string_view what) {
  if (d.has_marks())
    throw PreconditionError(std::string(what) + " is defined on unmarked diagrams only");
}

// Σ over mark sets J of (-1)^|J| f(G^J).
template <typename F> Poly signed_mark_sum(const MarkedGraph &g, F &&f) {
  if (g.has_marks()) throw PreconditionError("graph must be unmarked");
  require_subset_size(g.size());
  Poly total;
  for (std::uint64_t j = 0; j <= g.all_vertices(); ++j) total += f(g.with_marks(j)) * sign_of(j);
  return total;
}

// Σ over vertex subsets J of f(J, G_J).
template <typename F> Poly subgraph_sum(const MarkedGraph &g, F &&f) {
  require_subset_size(g.size());
  Poly total;
  for (std::uint64_t j = 0; j <= g.all_vertices(); ++j) total += f(j, induced_subgraph(g, j));
  return total;
}

// (ab)^k P(1/b) for a univariate P stored in the b slot.
Poly framed_substitution(const Poly &p, int k) { return p.invert_b().shifted(k, k); }

} // namespace

Poly rank_poly(const MarkedGraph &g) { return Poly::x_power(rank_of(g)); }

Poly rank_poly_deframed(const MarkedGraph &g) {
  const int n = g.size();
  return subgraph_sum(g, [n](std::uint64_t j, const MarkedGraph &sub) {
    return rank_poly(sub) * (((n - std::popcount(j)) % 2) ? -1 : 1);
  });
}

Poly s_poly(const MarkedGraph &g) { return signed_mark_sum(g, rank_poly); }

Poly t_poly(const MarkedGraph &g) {
  return signed_mark_sum(g, [](const MarkedGraph &h) {
    return Poly::x_power(gf2_det(adjacency_matrix(h)));
  });
}

Poly s_poly_deframed(const MarkedGraph &g) {
  const int n = g.size();
  const Poly x_minus_one = Poly::x_power(1) - Poly(1);
  return subgraph_sum(g, [&](std::uint64_t j, const MarkedGraph &sub) {
    return x_minus_one.pow(static_cast<unsigned>(n - std::popcount(j))) * s_poly(sub);
  });
}

Poly t_poly_deframed(const MarkedGraph &g) {
  if (g.size() == 0) return t_poly(g);
  Poly total = Poly::x_power(1) - Poly(1);
  total += subgraph_sum(g, [](std::uint64_t j, const MarkedGraph &sub) {
    return j == 0 ? Poly() : t_poly(sub);
  });
  return total;
}

Poly t_poly_deframed_uncorrected(const MarkedGraph &g) {
  return subgraph_sum(g, [](std::uint64_t, const MarkedGraph &sub) { return t_poly(sub); });
}

Poly nullity_poly(const MarkedGraph &g) {
  return Poly::x_power(static_cast<int>(gf2_nullity(adjacency_matrix(g))));
}

Poly nullity_poly_marked(const MarkedGraph &g) { return signed_mark_sum(g, nullity_poly); }

Poly deframe_graph(const std::function<Poly(const MarkedGraph &)> &f, const MarkedGraph &g) {
  const int n = g.size();
  return subgraph_sum(g, [&](std::uint64_t j, const MarkedGraph &sub) {
    const int removed = n - std::popcount(j);
    return f(disjoint_union(MarkedGraph(removed), sub)) * ((removed % 2) ? -1 : 1);
  });
}

int conway(const MarkedChordDiagram &d) {
  require_unmarked(d, "conway");
  return gf2_det(adjacency_matrix(intersection_graph(d)));
}

int conway_by_surgery(const MarkedChordDiagram &d) {
  require_unmarked(d, "conway");
  return boundary_components(d) == 1 ? 1 : 0;
}

Poly homfly(const MarkedChordDiagram &d) {
  require_unmarked(d, "homfly");
  const int k = d.degree();
  return Poly::monomial(1, k, k - rank_of(intersection_graph(d)));
}

Poly homfly_by_surgery(const MarkedChordDiagram &d) {
  require_unmarked(d, "homfly");
  return Poly::monomial(1, d.degree(), static_cast<int>(boundary_components(d)) - 1);
}

Poly homfly_deframed(const MarkedChordDiagram &d) {
  require_unmarked(d, "homfly_deframed");
  return framed_substitution(rank_poly_deframed(intersection_graph(d)), d.degree());
}

Poly kauffman(const MarkedChordDiagram &d) {
  require_unmarked(d, "kauffman");
  return framed_substitution(s_poly(intersection_graph(d)), d.degree());
}

Poly kauffman_by_surgery(const MarkedChordDiagram &d) {
  require_unmarked(d, "kauffman");
  Poly total;
  for (const auto &term : marking_expansion(d)) total += kauffman_marked(term.value) * term.coefficient;
  return total;
}

Poly kauffman_deframed(const MarkedChordDiagram &d) {
  require_unmarked(d, "kauffman_deframed");
  return framed_substitution(s_poly_deframed(intersection_graph(d)), d.degree());
}

Poly kauffman_marked(const MarkedChordDiagram &d) {
  return Poly::monomial(1, d.degree(), static_cast<int>(boundary_components(d)) - 1);
}

Poly kauffman_marked_closed(const MarkedChordDiagram &d) {
  return Poly::monomial(1, d.degree(),
                        static_cast<int>(gf2_nullity(adjacency_matrix(intersection_graph(d)))));
}

namespace {

struct NamedWeight {
  WeightSystem id;
  std::string_view name;
  bool marked_ok;
};

constexpr std::array<NamedWeight, 16> kWeights{{
    {WeightSystem::conway, "conway", false},
    {WeightSystem::homfly, "homfly", false},
    {WeightSystem::kauffman, "kauffman", false},
    {WeightSystem::homfly_deframed, "homfly_deframed", false},
    {WeightSystem::kauffman_deframed, "kauffman_deframed", false},
    {WeightSystem::rank, "rank", true},
    {WeightSystem::det, "det", true},
    {WeightSystem::nullity, "nullity", true},
    {WeightSystem::rank_deframed, "rank_deframed", false},
    {WeightSystem::s, "s", false},
    {WeightSystem::t, "t", false},
    {WeightSystem::s_deframed, "s_deframed", false},
    {WeightSystem::t_deframed, "t_deframed", false},
    {WeightSystem::u, "u", false},
    {WeightSystem::components, "components", true},
    {WeightSystem::kauffman_marked, "kauffman_marked", true},
}};

const NamedWeight &lookup(WeightSystem w) {
  for (const auto &nw : kWeights)
    if (nw.id == w) return nw;
  throw PreconditionError("unknown weight system");
}

} // namespace

std::string_view name_of(WeightSystem w) { return lookup(w).name; }

WeightSystem weight_system_from_name(std::string_view name) {
  for (const auto &nw : kWeights)
    if (nw.name == name) return nw.id;
  throw ParseError("unknown weight system '" + std::string(name) + "'");
}

const std::vector<WeightSystem> &all_weight_systems() {
  static const std::vector<WeightSystem> all = [] {
    std::vector<WeightSystem> v;
    for (const auto &nw : kWeights) v.push_back(nw.id);
    return v;
  }();
  return all;
}

bool accepts_marked(WeightSystem w) { return lookup(w).marked_ok; }

Poly evaluate(WeightSystem w, const MarkedChordDiagram &d) {
  if (!accepts_marked(w)) require_unmarked(d, name_of(w));
  switch (w) {
  case WeightSystem::conway:
    return Poly(conway(d));
  case WeightSystem::homfly:
    return homfly(d);
  case WeightSystem::kauffman:
    return kauffman(d);
  case WeightSystem::homfly_deframed:
    return homfly_deframed(d);
  case WeightSystem::kauffman_deframed:
    return kauffman_deframed(d);
  case WeightSystem::rank:
    return rank_poly(intersection_graph(d));
  case WeightSystem::det:
    return Poly(gf2_det(adjacency_matrix(intersection_graph(d))));
  case WeightSystem::nullity:
    return nullity_poly(intersection_graph(d));
  case WeightSystem::rank_deframed:
    return rank_poly_deframed(intersection_graph(d));
  case WeightSystem::s:
    return s_poly(intersection_graph(d));
  case WeightSystem::t:
    return t_poly(intersection_graph(d));
  case WeightSystem::s_deframed:
    return s_poly_deframed(intersection_graph(d));
  case WeightSystem::t_deframed:
    return t_poly_deframed(intersection_graph(d));
  case WeightSystem::u:
    return nullity_poly_marked(intersection_graph(d));
  case WeightSystem::components:
    return Poly::x_power(static_cast<int>(boundary_components(d)) - 1);
  case WeightSystem::kauffman_marked:
    return kauffman_marked(d);
  }
  throw PreconditionError("unknown weight system");
}

Poly deframe(WeightSystem w, const MarkedChordDiagram &d) {
  require_unmarked(d, "deframe");
  const int n = d.degree();
  require_subset_size(n);
  Poly total;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t j = 0; j <= all; ++j) {
    const int removed = n - std::popcount(j);
    const MarkedChordDiagram term = connect_sum(isolated_chords(removed), d.restricted(j));
    total += evaluate(w, term) * ((removed % 2) ? -1 : 1);
  }
  return total;
}

} // namespace chordweights
