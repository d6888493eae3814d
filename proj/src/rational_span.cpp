#include "chordweights/rational_span.hpp"

#include "chordweights/errors.hpp"

namespace chordweights {

namespace {

SparseVector to_rational(const std::map<std::size_t, std::int64_t> &v) {
  SparseVector out;
  for (const auto &[k, c] : v)
    if (c != 0) out.emplace(k, Rational(c));
  return out;
}

// v -= factor * row
void axpy(SparseVector &v, const Rational &factor, const SparseVector &row) {
  for (const auto &[k, c] : row) {
    auto [it, inserted] = v.try_emplace(k, Rational(-factor * c));
    if (!inserted) {
      it->second -= factor * c;
      if (it->second == 0) v.erase(it);
    }
  }
}

} // namespace

SparseVector RationalSpan::reduce(SparseVector v) const {
  for (auto it = v.begin(); it != v.end();) {
    if (it->first >= dimension_) throw PreconditionError("vector index exceeds span dimension");
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational factor = it->second;
    axpy(v, factor, row->second);
    // Rows are reduced, so entries before col are untouched.
    it = v.upper_bound(col);
  }
  return v;
}

bool RationalSpan::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.begin()->first;
  const Rational lead = v.begin()->second;
  for (auto &[k, c] : v) c /= lead;
  for (auto &[p, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit == row.end()) continue;
    const Rational factor = hit->second;
    axpy(row, factor, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool RationalSpan::insert(const std::map<std::size_t, std::int64_t> &v) {
  return insert(to_rational(v));
}

bool RationalSpan::contains(const std::map<std::size_t, std::int64_t> &v) const {
  return contains(to_rational(v));
}

std::vector<std::size_t> RationalSpan::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dimension_; ++c)
    if (!rows_.count(c)) out.push_back(c);
  return out;
}

std::vector<Rational> RationalSpan::quotient_coordinates(std::size_t column) const {
  const SparseVector rem = reduce(SparseVector{{column, Rational(1)}});
  const auto free = free_columns();
  std::vector<Rational> coords(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) {
    auto it = rem.find(free[i]);
    if (it != rem.end()) coords[i] = it->second;
  }
  return coords;
}

} // namespace chordweights
