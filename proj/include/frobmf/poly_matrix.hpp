#ifndef FROBMF_POLY_MATRIX_HPP
#define FROBMF_POLY_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobmf/ring.hpp"

namespace frobmf {

/// Sparse matrix over F_p (e.g. a polynomial matrix evaluated at the origin).
/// Column-major; each column sorted by row with nonzero values.
struct ConstMatrix {
  struct Entry {
    std::uint32_t row;
    std::uint32_t value;
  };
  std::uint32_t p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;
};

/// Rank over F_p by sparse elimination.
std::size_t rank_mod_p(const ConstMatrix& m);

/// Rectangular matrix of SparsePoly entries, sparse column-major storage.
/// Only nonzero entries are stored; each column is sorted by row.
class PolyMatrix {
public:
  struct Entry {
    std::uint32_t row;
    SparsePoly value;
  };

  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(RingPtr ring, std::size_t n);
  static PolyMatrix scalar(const SparsePoly& s, std::size_t n);
  /// Builds from a dense row-major grid of entries.
  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<SparsePoly>>& rows);
  /// Block matrix; `blocks[i][j]` empty means a zero block. Every block row
  /// must have a defined height and every block column a defined width.
  static PolyMatrix from_blocks(RingPtr ring, const std::vector<std::vector<std::optional<PolyMatrix>>>& blocks);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t nnz() const;

  SparsePoly get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, SparsePoly value);
  std::span<const Entry> column(std::size_t j) const { return cols_data_[j]; }
  /// Replaces column j; entries must be sorted by row, nonzero, in range.
  void set_column(std::size_t j, std::vector<Entry> entries);

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix scaled(const SparsePoly& s) const;

  /// Same entries in a ring extending this one.
  PolyMatrix embed(RingPtr larger) const;
  /// Every entry with all variables set to zero.
  ConstMatrix at_origin() const;
  /// Submatrix [r0, r0+nr) x [c0, c0+nc).
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_scalar_multiple_of_identity(const SparsePoly& s) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
  void check_compatible(const PolyMatrix& o, const char* op) const;

  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> cols_data_;
};

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace frobmf

#endif
