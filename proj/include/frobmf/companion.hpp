#ifndef FROBMF_COMPANION_HPP
#define FROBMF_COMPANION_HPP

// Constructive equivalences for companion-like block matrices: given the
// source matrix A of one of the shapes below, produce invertible M, N
// (explicit products of elementary matrices) and the target C = M A N.
//
// The routines only need +, -, * and equality on the entry type, so the same
// code runs with scalar entries (b a polynomial) and with block entries
// (b a matrix of relations, whose powers commute with each other and with the
// central u, v, z).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frobmf/poly_matrix.hpp"
#include "frobmf/ring.hpp"

namespace frobmf {

/// zero/one "like" a prototype element (needed for block entries, whose
/// identity depends on the block size).
template <class T>
struct RingTraits;

template <>
struct RingTraits<SparsePoly> {
  static SparsePoly zero(const SparsePoly& like) { return SparsePoly::zero(like.ring()); }
  static SparsePoly one(const SparsePoly& like) { return SparsePoly::one(like.ring()); }
  static bool is_zero(const SparsePoly& a) { return a.is_zero(); }
};

template <>
struct RingTraits<std::int64_t> {
  static std::int64_t zero(std::int64_t) { return 0; }
  static std::int64_t one(std::int64_t) { return 1; }
  static bool is_zero(std::int64_t a) { return a == 0; }
};

template <>
struct RingTraits<PolyMatrix> {
  static PolyMatrix zero(const PolyMatrix& like) { return PolyMatrix(like.ring(), like.rows(), like.cols()); }
  static PolyMatrix one(const PolyMatrix& like) { return PolyMatrix::identity(like.ring(), like.rows()); }
  static bool is_zero(const PolyMatrix& a) { return a.nnz() == 0; }
};

/// Small dense row-major matrix over T.
template <class T>
class RingMatrix {
public:
  RingMatrix(std::size_t rows, std::size_t cols, const T& like)
      : rows_(rows), cols_(cols), data_(rows * cols, RingTraits<T>::zero(like)), like_(like) {}

  static RingMatrix identity(std::size_t n, const T& like) {
    RingMatrix m(n, n, like);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<T>::one(like);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& like() const { return like_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RingMatrix operator*(const RingMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RingMatrix *: inner dimension mismatch");
    RingMatrix r(rows_, o.cols_, like_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (RingTraits<T>::is_zero((*this)(i, k))) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!RingTraits<T>::is_zero(o(k, j))) r(i, j) = r(i, j) + (*this)(i, k) * o(k, j);
      }
    return r;
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }

  // row_i += lambda * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const T& lambda) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (!RingTraits<T>::is_zero((*this)(j, c))) (*this)(i, c) = (*this)(i, c) + lambda * (*this)(j, c);
  }
  // col_i += col_j * lambda
  void add_col_multiple(std::size_t i, std::size_t j, const T& lambda) {
    for (std::size_t r = 0; r < rows_; ++r)
      if (!RingTraits<T>::is_zero((*this)(r, j))) (*this)(r, i) = (*this)(r, i) + (*this)(r, j) * lambda;
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
  T like_;
};

/// One elementary operation. For a row operation, kAdd means
/// row_i += factor * row_j; for a column operation, col_i += col_j * factor.
/// kSwap exchanges i and j.
template <class T>
struct ElementaryOp {
  enum class Kind { kAdd, kSwap };
  Kind kind;
  std::size_t i;
  std::size_t j;
  std::optional<T> factor;

  /// The elementary matrix E with (row op) A -> E A, or (column op) A -> A E.
  RingMatrix<T> matrix(std::size_t n, const T& like, bool row_op) const {
    auto e = RingMatrix<T>::identity(n, like);
    if (kind == Kind::kSwap) {
      e.swap_rows(i, j);
    } else if (row_op) {
      e(i, j) = *factor;
    } else {
      e(j, i) = *factor;
    }
    return e;
  }
};

enum class CompanionShape {
  kChain,       // b on the diagonal, 1 below it
  kEvenCorner,  // n = 2m: b diagonal, 1 two below, x in the top-right corner
  kOddCorner,   // n = 2m+1: as above with x at (1, n-1) and y at (2, n)
  kSplit,       // two chains of sizes k and n-k coupled by v and u
  kUVCorner,    // chain with uv in the top-right corner
};

inline const char* to_string(CompanionShape s) {
  switch (s) {
    case CompanionShape::kChain: return "chain";
    case CompanionShape::kEvenCorner: return "even-corner";
    case CompanionShape::kOddCorner: return "odd-corner";
    case CompanionShape::kSplit: return "split";
    case CompanionShape::kUVCorner: return "uv-corner";
  }
  return "?";
}

template <class T>
struct CompanionProblem {
  CompanionShape shape;
  RingMatrix<T> source;
  RingMatrix<T> target;
  /// Unit entries used as elimination pivots, in processing order.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  /// Whether the target is I_{n-2} (+) residual 2x2 block, requiring the
  /// pivots to be permuted onto the diagonal.
  bool gather_pivots = false;
};

template <class T>
struct CompanionReduction {
  RingMatrix<T> M;
  RingMatrix<T> N;
  RingMatrix<T> C;
  std::vector<ElementaryOp<T>> row_ops;
  std::vector<ElementaryOp<T>> col_ops;
};

namespace companion_detail {

template <class T>
T power(const T& b, std::size_t m) {
  T r = RingTraits<T>::one(b);
  for (std::size_t i = 0; i < m; ++i) r = r * b;
  return r;
}

// (-1)^sign_exp * b^m
template <class T>
T signed_power(const T& b, std::size_t m, std::size_t sign_exp) {
  T r = power(b, m);
  if (sign_exp % 2 == 1) r = RingTraits<T>::zero(b) - r;
  return r;
}

template <class T>
RingMatrix<T> chain_block(const T& b, std::size_t n) {
  RingMatrix<T> a(n, n, b);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = b;
    if (i + 1 < n) a(i + 1, i) = RingTraits<T>::one(b);
  }
  return a;
}

template <class T>
RingMatrix<T> skip_chain(const T& b, std::size_t n) {
  RingMatrix<T> a(n, n, b);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = b;
    if (i + 2 < n) a(i + 2, i) = RingTraits<T>::one(b);
  }
  return a;
}

inline void require_size(std::size_t n, std::size_t min) {
  if (n < min) throw std::invalid_argument("companion shape requires size >= " + std::to_string(min));
}

}  // namespace companion_detail

/// Chain shape, target: zero diagonal, 1 below it, (-1)^{n+1} b^n at (1, n).
template <class T>
CompanionProblem<T> chain_problem(const T& b, std::size_t n) {
  using namespace companion_detail;
  require_size(n, 2);
  CompanionProblem<T> p{CompanionShape::kChain, chain_block(b, n), RingMatrix<T>(n, n, b), {}, false};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    p.target(i + 1, i) = RingTraits<T>::one(b);
    p.pivots.emplace_back(i + 1, i);
  }
  p.target(0, n - 1) = signed_power(b, n, n + 1);
  return p;
}

/// Even shape (n = 2m). Target keeps the 1s two below the diagonal and x in
/// the corner, with (-1)^{m-1} b^m at (1, n-1) and (2, n).
template <class T>
CompanionProblem<T> even_corner_problem(const T& b, const T& x, std::size_t n) {
  using namespace companion_detail;
  require_size(n, 2);
  if (n % 2 != 0) throw std::invalid_argument("even-corner shape requires an even size");
  const std::size_t m = n / 2;
  CompanionProblem<T> p{CompanionShape::kEvenCorner, skip_chain(b, n), RingMatrix<T>(n, n, b), {}, false};
  p.source(0, n - 1) = x;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    p.target(i + 2, i) = RingTraits<T>::one(b);
    p.pivots.emplace_back(i + 2, i);
  }
  const T c = signed_power(b, m, m - 1);
  p.target(0, n - 2) = c;
  p.target(1, n - 1) = c;
  p.target(0, n - 1) = x;
  return p;
}

/// Odd shape (n = 2m+1) with corners x at (1, n-1), y at (2, n). Target:
/// x and (-1)^m b^{m+1} in row 1, (-1)^{m-1} b^m and y in row 2.
template <class T>
CompanionProblem<T> odd_corner_problem(const T& b, const T& x, const T& y, std::size_t n) {
  using namespace companion_detail;
  require_size(n, 3);
  if (n % 2 != 1) throw std::invalid_argument("odd-corner shape requires an odd size");
  const std::size_t m = (n - 1) / 2;
  CompanionProblem<T> p{CompanionShape::kOddCorner, skip_chain(b, n), RingMatrix<T>(n, n, b), {}, false};
  p.source(0, n - 2) = x;
  p.source(1, n - 1) = y;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    p.target(i + 2, i) = RingTraits<T>::one(b);
    p.pivots.emplace_back(i + 2, i);
  }
  p.target(0, n - 2) = x;
  p.target(0, n - 1) = signed_power(b, m + 1, m);
  p.target(1, n - 2) = signed_power(b, m, m - 1);
  p.target(1, n - 1) = y;
  return p;
}

/// Chains of sizes k and m = n-k, with v at (1, n) and u at (k+1, k).
/// Target: I_{n-2} (+) [(-1)^{k+1} b^k, v; u, (-1)^{m+1} b^m].
template <class T>
CompanionProblem<T> split_problem(const T& b, const T& u, const T& v, std::size_t k, std::size_t n) {
  using namespace companion_detail;
  require_size(n, 2);
  if (k < 1 || k >= n) throw std::invalid_argument("split shape requires 1 <= k <= n-1");
  const std::size_t m = n - k;
  CompanionProblem<T> p{CompanionShape::kSplit, RingMatrix<T>(n, n, b), RingMatrix<T>(n, n, b), {}, true};
  for (std::size_t i = 0; i < n; ++i) {
    p.source(i, i) = b;
    if (i + 1 < n && i + 1 != k) {
      p.source(i + 1, i) = RingTraits<T>::one(b);
      p.pivots.emplace_back(i + 1, i);
    }
  }
  p.source(0, n - 1) = v;
  p.source(k, k - 1) = u;
  for (std::size_t i = 0; i + 2 < n; ++i) p.target(i, i) = RingTraits<T>::one(b);
  p.target(n - 2, n - 2) = signed_power(b, k, k + 1);
  p.target(n - 2, n - 1) = v;
  p.target(n - 1, n - 2) = u;
  p.target(n - 1, n - 1) = signed_power(b, m, m + 1);
  return p;
}

/// Chain with uv at (1, n). Target: I_{n-2} (+) [(-1)^n b^{n-1}, uv; 1, b].
template <class T>
CompanionProblem<T> uv_corner_problem(const T& b, const T& uv, std::size_t n) {
  using namespace companion_detail;
  require_size(n, 2);
  CompanionProblem<T> p{CompanionShape::kUVCorner, chain_block(b, n), RingMatrix<T>(n, n, b), {}, true};
  p.source(0, n - 1) = uv;
  for (std::size_t i = 0; i + 2 < n; ++i) p.pivots.emplace_back(i + 1, i);
  for (std::size_t i = 0; i + 2 < n; ++i) p.target(i, i) = RingTraits<T>::one(b);
  p.target(n - 2, n - 2) = signed_power(b, n - 1, n);
  p.target(n - 2, n - 1) = uv;
  p.target(n - 1, n - 2) = RingTraits<T>::one(b);
  p.target(n - 1, n - 1) = b;
  return p;
}

/// Eliminates around each unit pivot (clearing its column with row
/// operations, then its row with column operations), then, for the gathered
/// shapes, permutes pivots onto the leading diagonal. Throws
/// std::logic_error if the result differs from the problem's target.
template <class T>
CompanionReduction<T> companion_reduce(const CompanionProblem<T>& problem) {
  const auto& like = problem.source.like();
  const std::size_t n = problem.source.rows();
  const T one = RingTraits<T>::one(like);
  const T zero = RingTraits<T>::zero(like);

  CompanionReduction<T> out{RingMatrix<T>::identity(n, like), RingMatrix<T>::identity(n, like), problem.source, {}, {}};
  auto& A = out.C;

  auto row_add = [&](std::size_t i, std::size_t j, const T& lambda) {
    A.add_row_multiple(i, j, lambda);
    out.M.add_row_multiple(i, j, lambda);
    out.row_ops.push_back({ElementaryOp<T>::Kind::kAdd, i, j, lambda});
  };
  auto col_add = [&](std::size_t i, std::size_t j, const T& lambda) {
    A.add_col_multiple(i, j, lambda);
    out.N.add_col_multiple(i, j, lambda);
    out.col_ops.push_back({ElementaryOp<T>::Kind::kAdd, i, j, lambda});
  };

  for (const auto& [r, c] : problem.pivots) {
    if (!(A(r, c) == one)) throw std::logic_error("companion_reduce: pivot entry is not the identity");
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && !RingTraits<T>::is_zero(A(i, c))) row_add(i, r, zero - A(i, c));
    for (std::size_t k = 0; k < n; ++k)
      if (k != c && !RingTraits<T>::is_zero(A(r, k))) col_add(k, c, zero - A(r, k));
  }

  if (problem.gather_pivots) {
    std::vector<std::size_t> row_order, col_order;
    std::vector<char> row_used(n, 0), col_used(n, 0);
    for (const auto& [r, c] : problem.pivots) {
      row_order.push_back(r);
      col_order.push_back(c);
      row_used[r] = col_used[c] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!row_used[i]) row_order.push_back(i);
      if (!col_used[i]) col_order.push_back(i);
    }
    // current[pos] = original index now sitting at pos
    auto realize = [&](const std::vector<std::size_t>& order, bool rows) {
      std::vector<std::size_t> current(n);
      for (std::size_t i = 0; i < n; ++i) current[i] = i;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t pos = i;
        while (current[pos] != order[i]) ++pos;
        if (pos == i) continue;
        std::swap(current[i], current[pos]);
        if (rows) {
          A.swap_rows(i, pos);
          out.M.swap_rows(i, pos);
          out.row_ops.push_back({ElementaryOp<T>::Kind::kSwap, i, pos, std::nullopt});
        } else {
          A.swap_cols(i, pos);
          out.N.swap_cols(i, pos);
          out.col_ops.push_back({ElementaryOp<T>::Kind::kSwap, i, pos, std::nullopt});
        }
      }
    };
    realize(row_order, true);
    realize(col_order, false);
  }

  if (!(A == problem.target))
    throw std::logic_error(std::string("companion_reduce: ") + to_string(problem.shape) +
                           " reduction did not reach the target form");
  return out;
}

/// Product E_t ... E_1 of the recorded row operations.
template <class T>
RingMatrix<T> compose_row_ops(const std::vector<ElementaryOp<T>>& ops, std::size_t n, const T& like) {
  auto m = RingMatrix<T>::identity(n, like);
  for (const auto& op : ops) m = op.matrix(n, like, true) * m;
  return m;
}

/// Product F_1 ... F_s of the recorded column operations.
template <class T>
RingMatrix<T> compose_col_ops(const std::vector<ElementaryOp<T>>& ops, std::size_t n, const T& like) {
  auto m = RingMatrix<T>::identity(n, like);
  for (const auto& op : ops) m = m * op.matrix(n, like, false);
  return m;
}

}  // namespace frobmf

#endif
