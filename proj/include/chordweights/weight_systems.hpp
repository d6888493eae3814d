#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordweights/chord_diagram.hpp"
#include "chordweights/marked_graph.hpp"
#include "chordweights/polynomial.hpp"

namespace chordweights {

// ---------------------------------------------------------------------------
// Graph-level polynomials in x (stored in the b slot, see BivariatePolynomial).
// ---------------------------------------------------------------------------

// x^rank(adj G); marks allowed.
BivariatePolynomial rank_poly(const MarkedGraph &g);
// Σ_J (-1)^(n-|J|) x^rank(G_J).
BivariatePolynomial rank_poly_deframed(const MarkedGraph &g);

// S(G) = Σ_J (-1)^|J| x^rank(G^J), J ranging over mark sets.
BivariatePolynomial s_poly(const MarkedGraph &g);
// T(G) = Σ_J (-1)^|J| x^det(G^J).
BivariatePolynomial t_poly(const MarkedGraph &g);
// Σ_J (x-1)^(n-|J|) S(G_J).
BivariatePolynomial s_poly_deframed(const MarkedGraph &g);
// (x - 1) + Σ_{J nonempty} T(G_J) for n >= 1, and T(G) = x for the empty graph.
// This is the φ∘Δ projection of T.
BivariatePolynomial t_poly_deframed(const MarkedGraph &g);
// Σ_J T(G_J) over all J including the empty set. Differs from the projection
// by the constant 1 whenever G is non-empty; kept for regression comparison.
BivariatePolynomial t_poly_deframed_uncorrected(const MarkedGraph &g);

// N(G) = x^nullity(adj G).
BivariatePolynomial nullity_poly(const MarkedGraph &g);
// U(G) = Σ_J (-1)^|J| x^nullity(G^J).
BivariatePolynomial nullity_poly_marked(const MarkedGraph &g);

// Generic projection on graphs: Σ_J (-1)^(n-|J|) F(•^(n-|J|) ⊔ G_J).
BivariatePolynomial deframe_graph(const std::function<BivariatePolynomial(const MarkedGraph &)> &f,
                                  const MarkedGraph &g);

// ---------------------------------------------------------------------------
// Diagram weight systems. Unless noted, inputs must be unmarked
// (PreconditionError otherwise).
// ---------------------------------------------------------------------------

// det(adj Γ(D)).
int conway(const MarkedChordDiagram &d);
// 1 iff surgery on all chords leaves one circle.
int conway_by_surgery(const MarkedChordDiagram &d);

// a^k b^(k - rank Γ(D)).
BivariatePolynomial homfly(const MarkedChordDiagram &d);
// a^k b^(c - 1).
BivariatePolynomial homfly_by_surgery(const MarkedChordDiagram &d);
// (ab)^k R^(Γ(D))(1/b).
BivariatePolynomial homfly_deframed(const MarkedChordDiagram &d);

// (ab)^k S(Γ(D))(1/b).
BivariatePolynomial kauffman(const MarkedChordDiagram &d);
// Σ_J (-1)^|J| K^m(D^J) with K^m from surgery.
BivariatePolynomial kauffman_by_surgery(const MarkedChordDiagram &d);
// (ab)^k S^(Γ(D))(1/b).
BivariatePolynomial kauffman_deframed(const MarkedChordDiagram &d);

// K^m on a marked diagram: a^k b^(c - 1) from the surgered circles. Marks allowed.
BivariatePolynomial kauffman_marked(const MarkedChordDiagram &d);
// a^k b^nullity(adj Γ(D)), the closed form of K^m. Marks allowed.
BivariatePolynomial kauffman_marked_closed(const MarkedChordDiagram &d);

// Functionals addressable by name from the relation checker and the CLI.
enum class WeightSystem {
  conway,
  homfly,
  kauffman,
  homfly_deframed,
  kauffman_deframed,
  rank,
  det,
  nullity,
  rank_deframed,
  s,
  t,
  s_deframed,
  t_deframed,
  u,
  components,
  kauffman_marked,
};

std::string_view name_of(WeightSystem w);
// Throws ParseError for unknown names.
WeightSystem weight_system_from_name(std::string_view name);
const std::vector<WeightSystem> &all_weight_systems();
// rank, det, nullity, components and kauffman_marked accept marked diagrams.
bool accepts_marked(WeightSystem w);

BivariatePolynomial evaluate(WeightSystem w, const MarkedChordDiagram &d);

// W^(D) = W(φ(Δ(D))) = Σ_J (-1)^(n-|J|) W(Θ^(n-|J|) · D_J).
BivariatePolynomial deframe(WeightSystem w, const MarkedChordDiagram &d);

} // namespace chordweights
