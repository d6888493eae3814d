#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordweights/marked_graph.hpp"

namespace chordweights {

// Symmetric bilinear form over Z/2, rows packed into 64-bit words.
class Gf2SymmetricMatrix {
public:
  Gf2SymmetricMatrix() = default;
  explicit Gf2SymmetricMatrix(std::size_t n);

  // Rows given as 0/1 entries; throws PreconditionError unless square and symmetric.
  static Gf2SymmetricMatrix from_rows(const std::vector<std::vector<int>> &rows);

  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  // Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, bool value);

  // Row i XOR= row j, then column i XOR= column j.
  void add_row_and_column(std::size_t target, std::size_t source);
  // Block sum diag(*this, other).
  Gf2SymmetricMatrix direct_sum(const Gf2SymmetricMatrix &other) const;

  bool diagonal_is_zero() const;
  std::vector<std::vector<int>> to_rows() const;
  std::string to_string() const;

  friend bool operator==(const Gf2SymmetricMatrix &, const Gf2SymmetricMatrix &) = default;

private:
  friend std::size_t gf2_rank(const Gf2SymmetricMatrix &m);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Off-diagonal 1 for edges, diagonal 1 for marked vertices.
Gf2SymmetricMatrix adjacency_matrix(const MarkedGraph &g);

std::size_t gf2_rank(const Gf2SymmetricMatrix &m);
// 1 iff full rank; the 0x0 matrix has determinant 1.
int gf2_det(const Gf2SymmetricMatrix &m);
std::size_t gf2_nullity(const Gf2SymmetricMatrix &m);

// Congruence M -> E M E^T with E = I + e_a e_b^T: row b added to row a and
// column b to column a. Preserves rank and determinant. Throws if a == b.
Gf2SymmetricMatrix symmetric_transvection(const Gf2SymmetricMatrix &m, std::size_t a,
                                          std::size_t b);

// Orthogonal block decomposition reached by transvections: `ones` blocks [1],
// `hyperbolic` blocks [[0,1],[1,0]] and `zeros` radical dimensions.
struct CongruenceBlocks {
  std::size_t ones = 0;
  std::size_t hyperbolic = 0;
  std::size_t zeros = 0;
};

CongruenceBlocks congruence_blocks(const Gf2SymmetricMatrix &m);

// Marked (n1, n2, n3)-caravan: n1 marked isolated chords, n2 unmarked isolated
// chords and n3 isolated crossing pairs.
struct CaravanClass {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t n3 = 0;

  std::size_t degree() const { return n1 + n2 + 2 * n3; }
  friend bool operator==(const CaravanClass &, const CaravanClass &) = default;
};

// Non-alternating forms map to (rank, n - rank, 0); alternating forms to
// (0, n - rank, rank / 2).
CaravanClass congruence_normal_form(const Gf2SymmetricMatrix &m);

} // namespace chordweights
