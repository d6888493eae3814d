#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordweights/formal_combination.hpp"

namespace chordweights {

// A (marked) chord diagram on an oriented circle, stored as the word of chord
// labels met when walking once around the circle from a fixed base point.
// Labels are 0..k-1 and each occurs exactly twice; a chord is either marked
// (surgered with a half-twisted band) or not.
class MarkedChordDiagram {
public:
  static constexpr int kMaxDegree = 64;

  MarkedChordDiagram() = default;

  // Throws PreconditionError unless every label in 0..k-1 occurs exactly twice
  // and marks has one entry per chord (an empty marks vector means unmarked).
  explicit MarkedChordDiagram(std::vector<int> word, std::vector<bool> marks = {});

  static MarkedChordDiagram theta();        // [1 1]
  static MarkedChordDiagram marked_theta(); // [1# 1]
  static MarkedChordDiagram crossed_pair(); // [1 2 1 2]

  int degree() const { return static_cast<int>(marks_.size()); }
  std::size_t length() const { return word_.size(); }
  const std::vector<int> &word() const { return word_; }
  const std::vector<bool> &marks() const { return marks_; }
  int label_at(std::size_t position) const { return word_[position]; }
  bool is_marked(int chord) const { return marks_[static_cast<std::size_t>(chord)]; }
  bool has_marks() const;
  std::uint64_t mark_mask() const;

  // Positions of the two endpoints of chord, in increasing order.
  std::pair<std::size_t, std::size_t> endpoints(int chord) const;
  std::size_t partner(std::size_t position) const;

  // Copy with exactly the chords in mask marked.
  MarkedChordDiagram with_marks(std::uint64_t mask) const;
  MarkedChordDiagram unmarked() const { return with_marks(0); }

  // Sub-diagram keeping only the chords in mask (relabelled by first occurrence).
  MarkedChordDiagram restricted(std::uint64_t keep_mask) const;

  // Relabels by first occurrence, keeping the base point.
  MarkedChordDiagram normalized() const;

  // Space separated tokens with 1-based labels and '#' on both occurrences of a
  // marked chord, e.g. "1# 2 1# 2".
  std::string to_string() const;

  friend bool operator==(const MarkedChordDiagram &, const MarkedChordDiagram &) = default;
  friend std::strong_ordering operator<=>(const MarkedChordDiagram &a,
                                          const MarkedChordDiagram &b);

private:
  std::vector<int> word_;
  std::vector<bool> marks_;
};

// Whitespace separated tokens, each a label with an optional trailing '#'.
// Labels are opaque strings, renumbered by first occurrence. Throws ParseError.
MarkedChordDiagram parse_diagram(std::string_view text);

// Lexicographically least rotation after first-occurrence relabelling, with
// the mark bit as the second component of every token.
MarkedChordDiagram canonical_form(const MarkedChordDiagram &d);

bool equivalent(const MarkedChordDiagram &a, const MarkedChordDiagram &b);

// Product: the words are concatenated, the second relabelled above the first.
MarkedChordDiagram connect_sum(const MarkedChordDiagram &d1, const MarkedChordDiagram &d2);

// Θ^count, optionally all marked.
MarkedChordDiagram isolated_chords(int count, bool marked = false);

using DiagramPair = std::pair<MarkedChordDiagram, MarkedChordDiagram>;

// Δ(D): one term per chord subset J, (D with J removed) ⊗ (D with only J),
// both canonicalized. Not merged, so there are exactly 2^k terms.
std::vector<SubsetTerm<DiagramPair>> coproduct(const MarkedChordDiagram &d);

// M(D) = Σ_J (-1)^|J| D^J over chord subsets J, D^J marking exactly J.
// Unmerged, 2^k terms, canonicalized. Throws PreconditionError if D is marked.
std::vector<SubsetTerm<MarkedChordDiagram>> marking_expansion(const MarkedChordDiagram &d);

template <typename T>
FormalCombination<T> merge_terms(const std::vector<SubsetTerm<T>> &terms) {
  FormalCombination<T> out;
  for (const auto &t : terms) out.add(t.value, t.coefficient);
  return out;
}

// Every diagram of degree n exactly once up to rotation, in canonical form and
// sorted. With marked = true, every mark subset of every such diagram.
std::vector<MarkedChordDiagram> enumerate_diagrams(int n, bool marked = false);

// Number of perfect matchings on 2n points, (2n-1)!!.
std::uint64_t matching_count(int n);

} // namespace chordweights
