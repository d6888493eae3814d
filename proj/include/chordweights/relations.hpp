#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordweights/chord_diagram.hpp"
#include "chordweights/formal_combination.hpp"
#include "chordweights/gf2_matrix.hpp"
#include "chordweights/rational_span.hpp"
#include "chordweights/weight_systems.hpp"

namespace chordweights {

using DiagramCombination = FormalCombination<MarkedChordDiagram>;

// Moves the endpoint at position `a` (chord A) across chord B, whose endpoint
// at position `b` is cyclically adjacent to `a`.
//
//  a immediately before b: B unmarked -> a reinserted right after B's other
//                          endpoint; B marked -> right before it, mark of A
//                          toggled.
//  a immediately after b:  the mirror image (B unmarked -> right before the
//                          other endpoint; B marked -> right after it, A's
//                          mark toggled).
//
// Chord labels are preserved, so intersection_graph(result) is the matching
// G~_AB (B unmarked) or G~'_AB with A's mark toggled (B marked).
// Throws PreconditionError for non-adjacent positions or A == B.
MarkedChordDiagram slide(const MarkedChordDiagram &d, std::size_t a, std::size_t b);

// True iff positions a and b are cyclically adjacent and hold distinct chords.
bool slide_applicable(const MarkedChordDiagram &d, std::size_t a, std::size_t b);

// The four diagrams of a 4T relation based at a (chord A) immediately before
// b (chord B), in the order: a before b, a after b, a after b', a before b'.
// Signs are +, -, -, +. Labels are preserved (not canonicalized).
struct FourTermRelation {
  std::array<MarkedChordDiagram, 4> diagrams;
  static constexpr std::array<int, 4> signs{1, -1, -1, 1};
  int chord_a = 0;
  int chord_b = 0;

  DiagramCombination combination() const;
};

FourTermRelation four_term_relation(const MarkedChordDiagram &d, std::size_t a, std::size_t b);
DiagramCombination four_term_combination(const MarkedChordDiagram &d, std::size_t a,
                                         std::size_t b);

enum class RelationKind { one_term, four_term, two_term, extended_two_term };

std::string_view name_of(RelationKind kind);
// Accepts "1t", "4t", "2t", "ext2t" and the long names. Throws ParseError.
RelationKind relation_kind_from_name(std::string_view name);

struct Relation {
  DiagramCombination combination;
  // Base diagram and positions (a, b) the relation was generated from.
  MarkedChordDiagram base;
  std::size_t a = 0;
  std::size_t b = 0;

  std::string describe() const;
};

struct DegreeCaps {
  int unmarked = 6;
  int marked = 4;
};

// one_term: every degree-n diagram with an isolated chord; four_term: every
// 4T relation at every adjacent endpoint pair; two_term: D - slide(D) over
// unmarked diagrams; extended_two_term: D - slide(D) over marked diagrams.
// Slides are generated in both directions. Throws PreconditionError if n
// exceeds the cap for the kind.
std::vector<Relation> generate_relations(int n, RelationKind kind, DegreeCaps caps = {});

struct VanishingFailure {
  std::string relation;
  std::string value;
};

struct VanishingReport {
  WeightSystem weight;
  RelationKind kind;
  int degree = 0;
  std::size_t total = 0;
  std::vector<VanishingFailure> failures;
};

// Evaluates the linear extension of `weight` on every generated relation.
// For extended_two_term the weight must accept marked diagrams.
VanishingReport check_vanishing(WeightSystem weight, int n, RelationKind kind,
                                DegreeCaps caps = {});

// Caravan class of the marked adjacency form of Γ(D).
CaravanClass caravan_normal_form(const MarkedChordDiagram &d);
// Θ_m^n1 · Θ^n2 · X^n3 in canonical form.
MarkedChordDiagram realize_caravan(const CaravanClass &c);

enum class QuotientSpace {
  a,       // unmarked diagrams modulo 4T
  b,       // unmarked diagrams modulo 2T
  b_marked // marked diagrams modulo extended 2T
};

std::string_view name_of(QuotientSpace space);
// "a", "b", "bm". Throws ParseError.
QuotientSpace quotient_space_from_name(std::string_view name);

// Canonical diagrams of one degree indexed as basis vectors, and the exact
// rational span of the relations among them.
class RelationSpace {
public:
  RelationSpace(int n, QuotientSpace space, DegreeCaps caps = {});

  int degree() const { return degree_; }
  QuotientSpace space() const { return space_; }
  const std::vector<MarkedChordDiagram> &basis() const { return basis_; }
  const RationalSpan &span() const { return span_; }
  std::size_t relation_count() const { return relation_count_; }

  // Index of canonical_form(d); throws PreconditionError if absent.
  std::size_t index_of(const MarkedChordDiagram &d) const;
  bool contains(const DiagramCombination &c) const;

private:
  int degree_;
  QuotientSpace space_;
  std::vector<MarkedChordDiagram> basis_;
  std::map<MarkedChordDiagram, std::size_t> index_;
  RationalSpan span_;
  std::size_t relation_count_ = 0;
};

struct SpanReport {
  int degree = 0;
  QuotientSpace space = QuotientSpace::a;
  std::size_t diagrams = 0;
  std::size_t relations = 0;
  std::size_t relation_rank = 0;
  std::size_t dimension = 0;
  // Quotient basis representatives (diagrams at the free columns).
  std::vector<MarkedChordDiagram> quotient_basis;
  // Coordinates of every diagram's class over quotient_basis.
  std::map<MarkedChordDiagram, std::vector<Rational>> class_of;
  // For b_marked: diagrams whose difference with their caravan is NOT in the
  // span (expected empty).
  std::vector<MarkedChordDiagram> caravan_failures;
};

// Caps: n <= 5 for unmarked spaces, n <= 4 for b_marked.
SpanReport span_analysis(int n, QuotientSpace space);

// M applied termwise to an unmarked combination.
DiagramCombination marking_image(const DiagramCombination &c);

} // namespace chordweights
