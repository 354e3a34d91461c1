#include "frobmf/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace frobmf {

std::size_t rank_mod_p(const ConstMatrix& m) {
  const PrimeField F(m.p);
  using Vec = std::vector<ConstMatrix::Entry>;
  // pivots[r] holds a reduced vector whose leading (smallest) row is r,
  // normalized so that the leading value is 1
  std::vector<Vec> pivots(m.rows);
  std::vector<char> has_pivot(m.rows, 0);
  std::size_t rank = 0;
  Vec scratch;
  for (const auto& col : m.columns) {
    Vec v = col;
    while (!v.empty()) {
      const auto lead = v.front().row;
      if (!has_pivot[lead]) {
        const auto s = F.inv(v.front().value);
        for (auto& e : v) e.value = F.mul(e.value, s);
        pivots[lead] = std::move(v);
        has_pivot[lead] = 1;
        ++rank;
        break;
      }
      // v -= v[lead] * pivot
      const auto factor = v.front().value;
      const Vec& piv = pivots[lead];
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < piv.size()) {
        if (j == piv.size() || (i < v.size() && v[i].row < piv[j].row)) {
          scratch.push_back(v[i++]);
        } else if (i == v.size() || piv[j].row < v[i].row) {
          scratch.push_back({piv[j].row, F.neg(F.mul(factor, piv[j].value))});
          ++j;
        } else {
          auto val = F.sub(v[i].value, F.mul(factor, piv[j].value));
          if (val != 0) scratch.push_back({v[i].row, val});
          ++i;
          ++j;
        }
      }
      std::swap(v, scratch);
    }
  }
  return rank;
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), cols_data_(cols) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  return scalar(SparsePoly::one(std::move(ring)), n);
}

PolyMatrix PolyMatrix::scalar(const SparsePoly& s, std::size_t n) {
  PolyMatrix m(s.ring(), n, n);
  if (s.is_zero()) return m;
  for (std::size_t j = 0; j < n; ++j) m.cols_data_[j].push_back(Entry{static_cast<std::uint32_t>(j), s});
  return m;
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<SparsePoly>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows[0].size();
  PolyMatrix m(ring, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < nc; ++j)
      if (!rows[i][j].is_zero()) {
        if (!same_ring(rows[i][j].ring(), ring)) throw std::invalid_argument("from_rows: entry ring mismatch");
        m.cols_data_[j].push_back(Entry{static_cast<std::uint32_t>(i), rows[i][j]});
      }
  }
  return m;
}

PolyMatrix PolyMatrix::from_blocks(RingPtr ring, const std::vector<std::vector<std::optional<PolyMatrix>>>& blocks) {
  const std::size_t br = blocks.size();
  const std::size_t bc = br == 0 ? 0 : blocks[0].size();
  std::vector<std::size_t> heights(br, 0), widths(bc, 0);
  std::vector<char> hset(br, 0), wset(bc, 0);
  for (std::size_t i = 0; i < br; ++i) {
    if (blocks[i].size() != bc) throw std::invalid_argument("from_blocks: ragged block rows");
    for (std::size_t j = 0; j < bc; ++j) {
      const auto& b = blocks[i][j];
      if (!b) continue;
      if ((hset[i] && heights[i] != b->rows()) || (wset[j] && widths[j] != b->cols()))
        throw std::invalid_argument("from_blocks: inconsistent block sizes");
      heights[i] = b->rows();
      widths[j] = b->cols();
      hset[i] = wset[j] = 1;
    }
  }
  for (std::size_t i = 0; i < br; ++i)
    if (!hset[i]) throw std::invalid_argument("from_blocks: block row with undetermined height");
  for (std::size_t j = 0; j < bc; ++j)
    if (!wset[j]) throw std::invalid_argument("from_blocks: block column with undetermined width");

  std::vector<std::size_t> row_off(br + 1, 0), col_off(bc + 1, 0);
  for (std::size_t i = 0; i < br; ++i) row_off[i + 1] = row_off[i] + heights[i];
  for (std::size_t j = 0; j < bc; ++j) col_off[j + 1] = col_off[j] + widths[j];

  PolyMatrix m(ring, row_off[br], col_off[bc]);
  for (std::size_t bj = 0; bj < bc; ++bj)
    for (std::size_t c = 0; c < widths[bj]; ++c) {
      auto& out = m.cols_data_[col_off[bj] + c];
      for (std::size_t bi = 0; bi < br; ++bi) {
        const auto& b = blocks[bi][bj];
        if (!b) continue;
        if (!same_ring(b->ring(), ring)) throw std::invalid_argument("from_blocks: block ring mismatch");
        for (const auto& e : b->cols_data_[c])
          out.push_back(Entry{static_cast<std::uint32_t>(row_off[bi] + e.row), e.value});
      }
    }
  return m;
}

std::size_t PolyMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_data_) n += c.size();
  return n;
}

SparsePoly PolyMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("PolyMatrix::get index out of range");
  const auto& col = cols_data_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != col.end() && it->row == i) return it->value;
  return SparsePoly::zero(ring_);
}

void PolyMatrix::set(std::size_t i, std::size_t j, SparsePoly value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("PolyMatrix::set index out of range");
  if (!value.is_zero() && !same_ring(value.ring(), ring_)) throw std::invalid_argument("PolyMatrix::set ring mismatch");
  auto& col = cols_data_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != col.end() && it->row == i) {
    if (value.is_zero())
      col.erase(it);
    else
      it->value = std::move(value);
  } else if (!value.is_zero()) {
    col.insert(it, Entry{static_cast<std::uint32_t>(i), std::move(value)});
  }
}

void PolyMatrix::set_column(std::size_t j, std::vector<Entry> entries) {
  if (j >= cols_) throw std::out_of_range("PolyMatrix::set_column index out of range");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].row >= rows_ || entries[k].value.is_zero() || (k > 0 && entries[k - 1].row >= entries[k].row))
      throw std::invalid_argument("PolyMatrix::set_column: entries must be sorted, nonzero and in range");
  }
  cols_data_[j] = std::move(entries);
}

void PolyMatrix::check_compatible(const PolyMatrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument(std::string("PolyMatrix ") + op + ": shape mismatch");
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument(std::string("PolyMatrix ") + op + ": ring mismatch");
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  check_compatible(o, "+");
  PolyMatrix r(ring_, rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    const auto& a = cols_data_[j];
    const auto& b = o.cols_data_[j];
    auto& out = r.cols_data_[j];
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
      if (k == b.size() || (i < a.size() && a[i].row < b[k].row)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[k].row < a[i].row) {
        out.push_back(b[k++]);
      } else {
        auto s = a[i].value + b[k].value;
        if (!s.is_zero()) out.push_back(Entry{a[i].row, std::move(s)});
        ++i;
        ++k;
      }
    }
  }
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& col : r.cols_data_)
    for (auto& e : col) e.value = -e.value;
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix *: inner dimension mismatch");
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("PolyMatrix *: ring mismatch");
  const auto& F = ring_->field();
  PolyMatrix r(ring_, rows_, o.cols_);

  // accumulate at term level, then sort and combine per output column
  struct Acc {
    std::uint32_t row;
    Monomial mono;
    std::uint32_t coef;
  };
  std::vector<Acc> acc;
  std::vector<Term> terms;
  for (std::size_t j = 0; j < o.cols_; ++j) {
    acc.clear();
    for (const auto& be : o.cols_data_[j])
      for (const auto& ae : cols_data_[be.row])
        for (const auto& bt : be.value.terms())
          for (const auto& at : ae.value.terms())
            acc.push_back(Acc{ae.row, at.mono * bt.mono, F.mul(at.coef, bt.coef)});
    std::sort(acc.begin(), acc.end(), [](const Acc& a, const Acc& b) {
      return std::tie(a.row, b.mono) < std::tie(b.row, a.mono);
    });
    auto& out = r.cols_data_[j];
    std::size_t k = 0;
    while (k < acc.size()) {
      const auto row = acc[k].row;
      terms.clear();
      while (k < acc.size() && acc[k].row == row) {
        const auto& m = acc[k].mono;
        std::uint32_t c = 0;
        while (k < acc.size() && acc[k].row == row && acc[k].mono == m) c = F.add(c, acc[k++].coef);
        if (c != 0) terms.push_back(Term{m, c});
      }
      if (!terms.empty()) out.push_back(Entry{row, SparsePoly::from_terms(ring_, terms)});
    }
  }
  return r;
}

PolyMatrix PolyMatrix::scaled(const SparsePoly& s) const {
  PolyMatrix r(ring_, rows_, cols_);
  if (s.is_zero()) return r;
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : cols_data_[j]) {
      auto v = e.value * s;
      if (!v.is_zero()) r.cols_data_[j].push_back(Entry{e.row, std::move(v)});
    }
  return r;
}

PolyMatrix PolyMatrix::embed(RingPtr larger) const {
  PolyMatrix r(larger, rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    r.cols_data_[j].reserve(cols_data_[j].size());
    for (const auto& e : cols_data_[j]) r.cols_data_[j].push_back(Entry{e.row, e.value.embed(larger)});
  }
  return r;
}

ConstMatrix PolyMatrix::at_origin() const {
  ConstMatrix m;
  m.p = ring_->p();
  m.rows = rows_;
  m.cols = cols_;
  m.columns.resize(cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : cols_data_[j])
      if (auto c = e.value.constant_term(); c != 0) m.columns[j].push_back({e.row, c});
  return m;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("PolyMatrix::block out of range");
  PolyMatrix r(ring_, nr, nc);
  for (std::size_t j = 0; j < nc; ++j)
    for (const auto& e : cols_data_[c0 + j])
      if (e.row >= r0 && e.row < r0 + nr)
        r.cols_data_[j].push_back(Entry{static_cast<std::uint32_t>(e.row - r0), e.value});
  return r;
}

bool PolyMatrix::is_scalar_multiple_of_identity(const SparsePoly& s) const {
  if (!is_square()) return false;
  for (std::size_t j = 0; j < cols_; ++j) {
    const auto& col = cols_data_[j];
    if (s.is_zero()) {
      if (!col.empty()) return false;
      continue;
    }
    if (col.size() != 1 || col[0].row != j || !(col[0].value == s)) return false;
  }
  return true;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t j = 0; j < a.cols_; ++j) {
    const auto& x = a.cols_data_[j];
    const auto& y = b.cols_data_[j];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].row != y[k].row || !(x[k].value == y[k].value)) return false;
  }
  return true;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  return PolyMatrix::from_blocks(a.ring(), {{a, std::nullopt}, {std::nullopt, b}});
}

}  // namespace frobmf
