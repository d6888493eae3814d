#pragma once

#include <cstdint>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

namespace chordweights {

// Integer-weighted formal sum of canonical objects. Keys must already be in
// canonical form; identical keys merge and zero coefficients are dropped.
template <typename Key> class FormalCombination {
public:
  using Map = std::map<Key, std::int64_t>;

  FormalCombination() = default;

  static FormalCombination single(Key key, std::int64_t coeff = 1) {
    FormalCombination c;
    c.add(std::move(key), coeff);
    return c;
  }

  void add(Key key, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FormalCombination &operator+=(const FormalCombination &other) {
    for (const auto &[k, c] : other.terms_) add(k, c);
    return *this;
  }

  FormalCombination &operator-=(const FormalCombination &other) {
    for (const auto &[k, c] : other.terms_) add(k, -c);
    return *this;
  }

  friend FormalCombination operator+(FormalCombination lhs, const FormalCombination &rhs) {
    lhs += rhs;
    return lhs;
  }

  friend FormalCombination operator-(FormalCombination lhs, const FormalCombination &rhs) {
    lhs -= rhs;
    return lhs;
  }

  FormalCombination scaled(std::int64_t factor) const {
    FormalCombination out;
    if (factor == 0) return out;
    for (const auto &[k, c] : terms_) out.terms_.emplace(k, c * factor);
    return out;
  }

  // Applies f to every key and re-merges. f must return canonical keys.
  template <typename F> auto transformed(F &&f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Key &>()))>;
    FormalCombination<Out> out;
    for (const auto &[k, c] : terms_) out.add(f(k), c);
    return out;
  }

  // Linear extension of a functional with values in a ring V (V must support
  // V{}, V * int64 and +=).
  template <typename V, typename F> V evaluate(F &&f) const {
    V total{};
    for (const auto &[k, c] : terms_) total += f(k) * c;
    return total;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map &terms() const { return terms_; }

  std::int64_t coefficient(const Key &key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  friend bool operator==(const FormalCombination &, const FormalCombination &) = default;

private:
  Map terms_;
};

// One term of an unmerged subset expansion (coproduct, marking map): the
// subset of chords/vertices that produced it, its sign, and the object.
template <typename T> struct SubsetTerm {
  std::uint64_t subset = 0;
  std::int64_t coefficient = 1;
  T value;
};

} // namespace chordweights
