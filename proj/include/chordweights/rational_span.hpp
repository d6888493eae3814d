#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chordweights {

using Rational = boost::multiprecision::cpp_rational;

// Sparse vector indexed by basis column.
using SparseVector = std::map<std::size_t, Rational>;

// Incrementally maintained reduced row echelon basis of a subspace of Q^n.
// Every stored row has pivot coefficient 1 and no other row has a nonzero
// entry in its pivot column.
class RationalSpan {
public:
  explicit RationalSpan(std::size_t dimension) : dimension_(dimension) {}

  // Adds v to the span; returns true if the rank grew.
  bool insert(SparseVector v);
  bool insert(const std::map<std::size_t, std::int64_t> &v);

  // Remainder of v after reduction by the basis; zero iff v is in the span.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector &v) const { return reduce(v).empty(); }
  bool contains(const std::map<std::size_t, std::int64_t> &v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }
  std::size_t quotient_dimension() const { return dimension_ - rows_.size(); }

  // Columns without a pivot; they index a basis of the quotient.
  std::vector<std::size_t> free_columns() const;
  // Coordinates of the class of e_column in the quotient, over free_columns().
  std::vector<Rational> quotient_coordinates(std::size_t column) const;

private:
  std::size_t dimension_;
  std::map<std::size_t, SparseVector> rows_; // pivot column -> row
};

} // namespace chordweights
