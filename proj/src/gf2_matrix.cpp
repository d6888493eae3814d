#include "chordweights/gf2_matrix.hpp"

#include <sstream>

#include "chordweights/errors.hpp"

namespace chordweights {

Gf2SymmetricMatrix::Gf2SymmetricMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

Gf2SymmetricMatrix Gf2SymmetricMatrix::from_rows(const std::vector<std::vector<int>> &rows) {
  Gf2SymmetricMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw PreconditionError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if ((rows[i][j] & 1) != (rows[j][i] & 1)) throw PreconditionError("matrix is not symmetric");
      if (rows[i][j] & 1) m.set(i, j, true);
    }
  }
  return m;
}

void Gf2SymmetricMatrix::set(std::size_t i, std::size_t j, bool value) {
  const auto put = [&](std::size_t r, std::size_t c) {
    auto &w = bits_[r * words_ + c / 64];
    const std::uint64_t b = std::uint64_t{1} << (c % 64);
    w = value ? (w | b) : (w & ~b);
  };
  put(i, j);
  put(j, i);
}

void Gf2SymmetricMatrix::add_row_and_column(std::size_t target, std::size_t source) {
  for (std::size_t w = 0; w < words_; ++w) bits_[target * words_ + w] ^= bits_[source * words_ + w];
  const std::size_t tw = target / 64;
  const std::size_t sw = source / 64;
  const std::uint64_t tb = std::uint64_t{1} << (target % 64);
  for (std::size_t r = 0; r < n_; ++r) {
    if ((bits_[r * words_ + sw] >> (source % 64)) & 1U) bits_[r * words_ + tw] ^= tb;
  }
}

Gf2SymmetricMatrix Gf2SymmetricMatrix::direct_sum(const Gf2SymmetricMatrix &other) const {
  Gf2SymmetricMatrix out(n_ + other.n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (get(i, j)) out.set(i, j, true);
  for (std::size_t i = 0; i < other.n_; ++i)
    for (std::size_t j = i; j < other.n_; ++j)
      if (other.get(i, j)) out.set(n_ + i, n_ + j, true);
  return out;
}

bool Gf2SymmetricMatrix::diagonal_is_zero() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i, i)) return false;
  return true;
}

std::vector<std::vector<int>> Gf2SymmetricMatrix::to_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = get(i, j) ? 1 : 0;
  return rows;
}

std::string Gf2SymmetricMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) out << (j ? "," : "") << (get(i, j) ? 1 : 0);
    out << ']';
  }
  out << ']';
  return out.str();
}

Gf2SymmetricMatrix adjacency_matrix(const MarkedGraph &g) {
  Gf2SymmetricMatrix m(static_cast<std::size_t>(g.size()));
  for (const auto &[u, v] : g.edges())
    m.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), true);
  for (int v = 0; v < g.size(); ++v)
    if (g.is_marked(v)) m.set(static_cast<std::size_t>(v), static_cast<std::size_t>(v), true);
  return m;
}

std::size_t gf2_rank(const Gf2SymmetricMatrix &m) {
  std::vector<std::uint64_t> rows = m.bits_;
  const std::size_t words = m.words_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.n_ && rank < m.n_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t b = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.n_ && !(rows[pivot * words + w] & b)) ++pivot;
    if (pivot == m.n_) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < words; ++k) std::swap(rows[pivot * words + k], rows[rank * words + k]);
    for (std::size_t r = rank + 1; r < m.n_; ++r) {
      if (!(rows[r * words + w] & b)) continue;
      for (std::size_t k = w; k < words; ++k) rows[r * words + k] ^= rows[rank * words + k];
    }
    ++rank;
  }
  return rank;
}

int gf2_det(const Gf2SymmetricMatrix &m) { return gf2_rank(m) == m.size() ? 1 : 0; }

std::size_t gf2_nullity(const Gf2SymmetricMatrix &m) { return m.size() - gf2_rank(m); }

Gf2SymmetricMatrix symmetric_transvection(const Gf2SymmetricMatrix &m, std::size_t a,
                                          std::size_t b) {
  if (a == b) throw PreconditionError("transvection needs two distinct indices");
  if (a >= m.size() || b >= m.size()) throw PreconditionError("transvection index out of range");
  Gf2SymmetricMatrix out = m;
  out.add_row_and_column(a, b);
  return out;
}

CongruenceBlocks congruence_blocks(const Gf2SymmetricMatrix &m) {
  Gf2SymmetricMatrix work = m;
  const std::size_t n = m.size();
  std::vector<bool> active(n, true);
  CongruenceBlocks blocks;
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (active[i] && work.get(i, i)) pivot = i;
    if (pivot != n) {
      // [1] block: clear the pivot column from every other active index.
      for (std::size_t j = 0; j < n; ++j)
        if (j != pivot && active[j] && work.get(j, pivot)) work.add_row_and_column(j, pivot);
      active[pivot] = false;
      --remaining;
      ++blocks.ones;
      continue;
    }
    std::size_t p = n;
    std::size_t q = n;
    for (std::size_t i = 0; i < n && p == n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && work.get(i, j)) {
          p = i;
          q = j;
          break;
        }
      }
    }
    if (p == n) {
      blocks.zeros = remaining;
      break;
    }
    // Hyperbolic block on (p, q); all active diagonals are zero here.
    for (std::size_t k = 0; k < n; ++k) {
      if (k == p || k == q || !active[k]) continue;
      if (work.get(k, p)) work.add_row_and_column(k, q);
      if (work.get(k, q)) work.add_row_and_column(k, p);
    }
    active[p] = false;
    active[q] = false;
    remaining -= 2;
    ++blocks.hyperbolic;
  }
  return blocks;
}

CaravanClass congruence_normal_form(const Gf2SymmetricMatrix &m) {
  const CongruenceBlocks b = congruence_blocks(m);
  const std::size_t rank = b.ones + 2 * b.hyperbolic;
  if (b.ones > 0) return {rank, b.zeros, 0};
  return {0, b.zeros, b.hyperbolic};
}

} // namespace chordweights
