#include "chordweights/chord_diagram.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_map>

#include "chordweights/errors.hpp"

namespace chordweights {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Token sequence of the rotation starting at `start`, relabelled by first
// occurrence: even slots hold labels, odd slots hold mark bits.
void rotation_tokens(const MarkedChordDiagram &d, std::size_t start, std::vector<int> &labels,
                     std::vector<int> &tokens) {
  const std::size_t len = d.length();
  std::fill(labels.begin(), labels.end(), -1);
  tokens.clear();
  int next = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int c = d.label_at((start + i) % len);
    if (labels[static_cast<std::size_t>(c)] < 0) labels[static_cast<std::size_t>(c)] = next++;
    tokens.push_back(labels[static_cast<std::size_t>(c)]);
    tokens.push_back(d.is_marked(c) ? 1 : 0);
  }
}

} // namespace

MarkedChordDiagram::MarkedChordDiagram(std::vector<int> word, std::vector<bool> marks)
    : word_(std::move(word)), marks_(std::move(marks)) {
  if (word_.size() % 2 != 0) throw PreconditionError("chord word has odd length");
  const std::size_t k = word_.size() / 2;
  if (k > static_cast<std::size_t>(kMaxDegree))
    throw PreconditionError("chord diagram degree exceeds 64");
  if (marks_.empty()) marks_.assign(k, false);
  if (marks_.size() != k) throw PreconditionError("mark vector size does not match degree");
  std::vector<int> seen(k, 0);
  for (int c : word_) {
    if (c < 0 || static_cast<std::size_t>(c) >= k)
      throw PreconditionError("chord label out of range");
    if (++seen[static_cast<std::size_t>(c)] > 2)
      throw PreconditionError("chord label occurs more than twice");
  }
}

MarkedChordDiagram MarkedChordDiagram::theta() { return MarkedChordDiagram({0, 0}); }

MarkedChordDiagram MarkedChordDiagram::marked_theta() {
  return MarkedChordDiagram({0, 0}, {true});
}

MarkedChordDiagram MarkedChordDiagram::crossed_pair() {
  return MarkedChordDiagram({0, 1, 0, 1});
}

bool MarkedChordDiagram::has_marks() const {
  return std::find(marks_.begin(), marks_.end(), true) != marks_.end();
}

std::uint64_t MarkedChordDiagram::mark_mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < marks_.size(); ++i)
    if (marks_[i]) m |= bit(static_cast<int>(i));
  return m;
}

std::pair<std::size_t, std::size_t> MarkedChordDiagram::endpoints(int chord) const {
  std::size_t first = word_.size();
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] != chord) continue;
    if (first == word_.size()) {
      first = i;
    } else {
      return {first, i};
    }
  }
  throw PreconditionError("chord not present in diagram");
}

std::size_t MarkedChordDiagram::partner(std::size_t position) const {
  const auto [p, q] = endpoints(word_.at(position));
  return p == position ? q : p;
}

MarkedChordDiagram MarkedChordDiagram::with_marks(std::uint64_t mask) const {
  std::vector<bool> m(marks_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = (mask >> i) & 1U;
  return MarkedChordDiagram(word_, std::move(m));
}

MarkedChordDiagram MarkedChordDiagram::restricted(std::uint64_t keep_mask) const {
  std::vector<int> relabel(marks_.size(), -1);
  std::vector<int> w;
  std::vector<bool> m;
  for (int c : word_) {
    if (!((keep_mask >> c) & 1U)) continue;
    if (relabel[static_cast<std::size_t>(c)] < 0) {
      relabel[static_cast<std::size_t>(c)] = static_cast<int>(m.size());
      m.push_back(marks_[static_cast<std::size_t>(c)]);
    }
    w.push_back(relabel[static_cast<std::size_t>(c)]);
  }
  return MarkedChordDiagram(std::move(w), std::move(m));
}

MarkedChordDiagram MarkedChordDiagram::normalized() const {
  return restricted(degree() == 64 ? ~std::uint64_t{0} : bit(degree()) - 1);
}

std::string MarkedChordDiagram::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out << ' ';
    out << word_[i] + 1;
    if (marks_[static_cast<std::size_t>(word_[i])]) out << '#';
  }
  return out.str();
}

std::strong_ordering operator<=>(const MarkedChordDiagram &a, const MarkedChordDiagram &b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  if (auto c = a.word_ <=> b.word_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.marks_.begin(), a.marks_.end(),
                                                b.marks_.begin(), b.marks_.end());
}

MarkedChordDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<int> word;
  std::vector<int> counts;
  std::vector<bool> marks;
  while (in >> token) {
    bool marked = false;
    if (token.back() == '#') {
      marked = true;
      token.pop_back();
    }
    if (token.empty() || token.find('#') != std::string::npos)
      throw ParseError("malformed token in chord word");
    auto [it, inserted] = index.try_emplace(token, static_cast<int>(names.size()));
    if (inserted) {
      names.push_back(token);
      counts.push_back(0);
      marks.push_back(false);
    }
    const auto c = static_cast<std::size_t>(it->second);
    ++counts[c];
    if (marked) marks[c] = true;
    word.push_back(it->second);
  }
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] != 2) {
      throw ParseError("malformed chord word: label '" + names[c] + "' occurs " +
                       std::to_string(counts[c]) + " time(s), expected 2");
    }
  }
  if (marks.size() > static_cast<std::size_t>(MarkedChordDiagram::kMaxDegree))
    throw ParseError("chord diagram degree exceeds 64");
  return MarkedChordDiagram(std::move(word), std::move(marks));
}

MarkedChordDiagram canonical_form(const MarkedChordDiagram &d) {
  const std::size_t len = d.length();
  if (len == 0) return d;
  std::vector<int> labels(static_cast<std::size_t>(d.degree()));
  std::vector<int> best;
  std::vector<int> cur;
  for (std::size_t start = 0; start < len; ++start) {
    rotation_tokens(d, start, labels, cur);
    if (best.empty() || cur < best) {
      best.swap(cur);
    }
  }
  std::vector<int> word(len);
  std::vector<bool> marks(static_cast<std::size_t>(d.degree()));
  for (std::size_t i = 0; i < len; ++i) {
    word[i] = best[2 * i];
    marks[static_cast<std::size_t>(best[2 * i])] = best[2 * i + 1] != 0;
  }
  return MarkedChordDiagram(std::move(word), std::move(marks));
}

bool equivalent(const MarkedChordDiagram &a, const MarkedChordDiagram &b) {
  return a.degree() == b.degree() && canonical_form(a) == canonical_form(b);
}

MarkedChordDiagram connect_sum(const MarkedChordDiagram &d1, const MarkedChordDiagram &d2) {
  std::vector<int> word = d1.word();
  for (int c : d2.word()) word.push_back(c + d1.degree());
  std::vector<bool> marks = d1.marks();
  marks.insert(marks.end(), d2.marks().begin(), d2.marks().end());
  return MarkedChordDiagram(std::move(word), std::move(marks));
}

MarkedChordDiagram isolated_chords(int count, bool marked) {
  MarkedChordDiagram out;
  const auto piece = marked ? MarkedChordDiagram::marked_theta() : MarkedChordDiagram::theta();
  for (int i = 0; i < count; ++i) out = connect_sum(out, piece);
  return out;
}

std::vector<SubsetTerm<DiagramPair>> coproduct(const MarkedChordDiagram &d) {
  const int k = d.degree();
  if (k >= 63) throw PreconditionError("coproduct degree too large");
  const std::uint64_t all = bit(k) - 1;
  std::vector<SubsetTerm<DiagramPair>> out;
  out.reserve(static_cast<std::size_t>(bit(k)));
  for (std::uint64_t j = 0; j <= all; ++j) {
    out.push_back({j, 1,
                   {canonical_form(d.restricted(all & ~j)), canonical_form(d.restricted(j))}});
  }
  return out;
}

std::vector<SubsetTerm<MarkedChordDiagram>> marking_expansion(const MarkedChordDiagram &d) {
  if (d.has_marks()) throw PreconditionError("marking expansion requires an unmarked diagram");
  const int k = d.degree();
  if (k >= 63) throw PreconditionError("marking expansion degree too large");
  std::vector<SubsetTerm<MarkedChordDiagram>> out;
  out.reserve(static_cast<std::size_t>(bit(k)));
  for (std::uint64_t j = 0; j < bit(k); ++j) {
    const std::int64_t sign = (std::popcount(j) % 2) ? -1 : 1;
    out.push_back({j, sign, canonical_form(d.with_marks(j))});
  }
  return out;
}

namespace {

void enumerate_matchings(std::vector<int> &word, int next_label,
                         std::set<MarkedChordDiagram> &out) {
  auto first_free = std::find(word.begin(), word.end(), -1);
  if (first_free == word.end()) {
    out.insert(canonical_form(MarkedChordDiagram(word)));
    return;
  }
  *first_free = next_label;
  for (auto it = first_free + 1; it != word.end(); ++it) {
    if (*it != -1) continue;
    *it = next_label;
    enumerate_matchings(word, next_label + 1, out);
    *it = -1;
  }
  *first_free = -1;
}

} // namespace

std::vector<MarkedChordDiagram> enumerate_diagrams(int n, bool marked) {
  if (n < 0) throw PreconditionError("degree must be non-negative");
  if (n > 10) throw PreconditionError("enumeration degree cap is 10");
  std::vector<int> word(static_cast<std::size_t>(2 * n), -1);
  std::set<MarkedChordDiagram> unmarked;
  enumerate_matchings(word, 0, unmarked);
  if (!marked) return {unmarked.begin(), unmarked.end()};
  std::set<MarkedChordDiagram> all;
  for (const auto &d : unmarked)
    for (std::uint64_t m = 0; m < bit(n); ++m) all.insert(canonical_form(d.with_marks(m)));
  return {all.begin(), all.end()};
}

std::uint64_t matching_count(int n) {
  std::uint64_t r = 1;
  for (int i = 2 * n - 1; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

} // namespace chordweights
