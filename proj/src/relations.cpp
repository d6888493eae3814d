#include "chordweights/relations.hpp"

#include <sstream>

#include "chordweights/errors.hpp"
#include "chordweights/marked_graph.hpp"

namespace chordweights {

namespace {

enum class Side { before, after };

// Removes the endpoint at `moving` and reinserts it immediately before or after
// the endpoint currently at `target`. Labels and marks are kept.
MarkedChordDiagram move_endpoint(const MarkedChordDiagram &d, std::size_t moving,
                                 std::size_t target, Side side) {
  std::vector<std::size_t> order;
  order.reserve(d.length());
  for (std::size_t p = 0; p < d.length(); ++p)
    if (p != moving) order.push_back(p);
  std::size_t at = 0;
  while (order[at] != target) ++at;
  order.insert(order.begin() + static_cast<std::ptrdiff_t>(side == Side::after ? at + 1 : at),
               moving);
  std::vector<int> word;
  word.reserve(d.length());
  for (std::size_t p : order) word.push_back(d.label_at(p));
  return MarkedChordDiagram(std::move(word), d.marks());
}

MarkedChordDiagram toggle_mark(const MarkedChordDiagram &d, int chord) {
  return d.with_marks(d.mark_mask() ^ (std::uint64_t{1} << chord));
}

bool has_isolated_chord(const MarkedChordDiagram &d) {
  const MarkedGraph g = intersection_graph(d);
  for (int v = 0; v < g.size(); ++v)
    if (g.neighbors(v) == 0) return true;
  return false;
}

void check_cap(int n, int cap) {
  if (n < 0) throw PreconditionError("degree must be non-negative");
  if (n > cap)
    throw PreconditionError("degree " + std::to_string(n) + " exceeds the configured cap of " +
                            std::to_string(cap));
}

} // namespace

bool slide_applicable(const MarkedChordDiagram &d, std::size_t a, std::size_t b) {
  const std::size_t len = d.length();
  if (a >= len || b >= len || a == b) return false;
  if (d.label_at(a) == d.label_at(b)) return false;
  return (a + 1) % len == b || (b + 1) % len == a;
}

MarkedChordDiagram slide(const MarkedChordDiagram &d, std::size_t a, std::size_t b) {
  if (a >= d.length() || b >= d.length()) throw PreconditionError("endpoint position out of range");
  if (d.label_at(a) == d.label_at(b)) throw PreconditionError("slide needs two distinct chords");
  if (!slide_applicable(d, a, b)) throw PreconditionError("slide endpoints are not adjacent");
  const bool a_before_b = (a + 1) % d.length() == b;
  const int chord_a = d.label_at(a);
  const int chord_b = d.label_at(b);
  const std::size_t b_other = d.partner(b);
  if (!d.is_marked(chord_b))
    return move_endpoint(d, a, b_other, a_before_b ? Side::after : Side::before);
  return toggle_mark(move_endpoint(d, a, b_other, a_before_b ? Side::before : Side::after), chord_a);
}

DiagramCombination FourTermRelation::combination() const {
  DiagramCombination out;
  for (std::size_t i = 0; i < 4; ++i) out.add(canonical_form(diagrams[i]), signs[i]);
  return out;
}

FourTermRelation four_term_relation(const MarkedChordDiagram &d, std::size_t a, std::size_t b) {
  if (d.has_marks()) throw PreconditionError("4T relations are defined on unmarked diagrams");
  if (!slide_applicable(d, a, b) || (a + 1) % d.length() != b)
    throw PreconditionError("4T base needs endpoint a immediately before b on distinct chords");
  const std::size_t b_other = d.partner(b);
  FourTermRelation r{{d, move_endpoint(d, a, b, Side::after), move_endpoint(d, a, b_other, Side::after),
                      move_endpoint(d, a, b_other, Side::before)},
                     d.label_at(a),
                     d.label_at(b)};
  return r;
}

DiagramCombination four_term_combination(const MarkedChordDiagram &d, std::size_t a,
                                         std::size_t b) {
  return four_term_relation(d, a, b).combination();
}

std::string_view name_of(RelationKind kind) {
  switch (kind) {
  case RelationKind::one_term:
    return "1t";
  case RelationKind::four_term:
    return "4t";
  case RelationKind::two_term:
    return "2t";
  case RelationKind::extended_two_term:
    return "ext2t";
  }
  return "?";
}

RelationKind relation_kind_from_name(std::string_view name) {
  if (name == "1t" || name == "one_term") return RelationKind::one_term;
  if (name == "4t" || name == "four_term") return RelationKind::four_term;
  if (name == "2t" || name == "two_term") return RelationKind::two_term;
  if (name == "ext2t" || name == "extended_two_term") return RelationKind::extended_two_term;
  throw ParseError("unknown relation kind '" + std::string(name) + "'");
}

std::string Relation::describe() const {
  std::ostringstream out;
  out << '[' << base.to_string() << "] @ (" << a << ',' << b << ')';
  return out.str();
}

std::vector<Relation> generate_relations(int n, RelationKind kind, DegreeCaps caps) {
  const bool marked = kind == RelationKind::extended_two_term;
  check_cap(n, marked ? caps.marked : caps.unmarked);
  std::vector<Relation> out;
  for (const auto &d : enumerate_diagrams(n, marked)) {
    const std::size_t len = d.length();
    switch (kind) {
    case RelationKind::one_term:
      if (has_isolated_chord(d)) out.push_back({DiagramCombination::single(d), d, 0, 0});
      break;
    case RelationKind::four_term:
      for (std::size_t a = 0; a < len; ++a) {
        const std::size_t b = (a + 1) % len;
        if (d.label_at(a) == d.label_at(b)) continue;
        out.push_back({four_term_combination(d, a, b), d, a, b});
      }
      break;
    case RelationKind::two_term:
    case RelationKind::extended_two_term:
      for (std::size_t p = 0; p < len; ++p) {
        const std::size_t q = (p + 1) % len;
        if (d.label_at(p) == d.label_at(q)) continue;
        for (const auto &[a, b] : {std::pair{p, q}, std::pair{q, p}}) {
          DiagramCombination c = DiagramCombination::single(d);
          c.add(canonical_form(slide(d, a, b)), -1);
          out.push_back({std::move(c), d, a, b});
        }
      }
      break;
    }
  }
  return out;
}

VanishingReport check_vanishing(WeightSystem weight, int n, RelationKind kind, DegreeCaps caps) {
  if (kind == RelationKind::extended_two_term && !accepts_marked(weight)) {
    throw PreconditionError("weight system '" + std::string(name_of(weight)) +
                            "' is not defined on marked diagrams");
  }
  VanishingReport report{weight, kind, n, 0, {}};
  std::map<MarkedChordDiagram, BivariatePolynomial> cache;
  const auto value_of = [&](const MarkedChordDiagram &d) -> const BivariatePolynomial & {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, evaluate(weight, d)).first;
    return it->second;
  };
  for (const auto &rel : generate_relations(n, kind, caps)) {
    ++report.total;
    BivariatePolynomial value;
    for (const auto &[d, c] : rel.combination.terms()) value += value_of(d) * c;
    if (!value.is_zero()) report.failures.push_back({rel.describe(), value.to_string()});
  }
  return report;
}

CaravanClass caravan_normal_form(const MarkedChordDiagram &d) {
  return congruence_normal_form(adjacency_matrix(intersection_graph(d)));
}

MarkedChordDiagram realize_caravan(const CaravanClass &c) {
  MarkedChordDiagram out = isolated_chords(static_cast<int>(c.n1), true);
  out = connect_sum(out, isolated_chords(static_cast<int>(c.n2), false));
  for (std::size_t i = 0; i < c.n3; ++i) out = connect_sum(out, MarkedChordDiagram::crossed_pair());
  return canonical_form(out);
}

std::string_view name_of(QuotientSpace space) {
  switch (space) {
  case QuotientSpace::a:
    return "a";
  case QuotientSpace::b:
    return "b";
  case QuotientSpace::b_marked:
    return "bm";
  }
  return "?";
}

QuotientSpace quotient_space_from_name(std::string_view name) {
  if (name == "a") return QuotientSpace::a;
  if (name == "b") return QuotientSpace::b;
  if (name == "bm") return QuotientSpace::b_marked;
  throw ParseError("unknown quotient space '" + std::string(name) + "'");
}

namespace {

RelationKind relation_kind_for(QuotientSpace space) {
  switch (space) {
  case QuotientSpace::a:
    return RelationKind::four_term;
  case QuotientSpace::b:
    return RelationKind::two_term;
  case QuotientSpace::b_marked:
    return RelationKind::extended_two_term;
  }
  return RelationKind::four_term;
}

} // namespace

RelationSpace::RelationSpace(int n, QuotientSpace space, DegreeCaps caps)
    : degree_(n), space_(space),
      basis_(enumerate_diagrams(n, space == QuotientSpace::b_marked)), span_(basis_.size()) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  for (const auto &rel : generate_relations(n, relation_kind_for(space), caps)) {
    ++relation_count_;
    std::map<std::size_t, std::int64_t> v;
    for (const auto &[d, c] : rel.combination.terms()) v[index_of(d)] += c;
    span_.insert(v);
  }
}

std::size_t RelationSpace::index_of(const MarkedChordDiagram &d) const {
  auto it = index_.find(canonical_form(d));
  if (it == index_.end()) throw PreconditionError("diagram is not in this relation space");
  return it->second;
}

bool RelationSpace::contains(const DiagramCombination &c) const {
  std::map<std::size_t, std::int64_t> v;
  for (const auto &[d, coeff] : c.terms()) v[index_of(d)] += coeff;
  return span_.contains(v);
}

SpanReport span_analysis(int n, QuotientSpace space) {
  check_cap(n, space == QuotientSpace::b_marked ? 4 : 5);
  const RelationSpace rs(n, space, DegreeCaps{5, 4});
  SpanReport report;
  report.degree = n;
  report.space = space;
  report.diagrams = rs.basis().size();
  report.relations = rs.relation_count();
  report.relation_rank = rs.span().rank();
  report.dimension = rs.span().quotient_dimension();
  for (std::size_t col : rs.span().free_columns()) report.quotient_basis.push_back(rs.basis()[col]);
  for (std::size_t i = 0; i < rs.basis().size(); ++i)
    report.class_of.emplace(rs.basis()[i], rs.span().quotient_coordinates(i));
  if (space != QuotientSpace::a) {
    for (const auto &d : rs.basis()) {
      DiagramCombination diff = DiagramCombination::single(d);
      diff.add(realize_caravan(caravan_normal_form(d)), -1);
      if (!rs.contains(diff)) report.caravan_failures.push_back(d);
    }
  }
  return report;
}

DiagramCombination marking_image(const DiagramCombination &c) {
  DiagramCombination out;
  for (const auto &[d, coeff] : c.terms())
    for (const auto &term : marking_expansion(d)) out.add(term.value, term.coefficient * coeff);
  return out;
}

} // namespace chordweights
