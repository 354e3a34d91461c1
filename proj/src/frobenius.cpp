#include "frobmf/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace frobmf {

std::uint32_t frobenius_q(std::uint32_t p, std::uint32_t e) {
  if (e == 0) throw std::invalid_argument("Frobenius exponent e must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint16_t>::max())
      throw ResourceLimitError("q = p^e is too large (p=" + std::to_string(p) + ", e=" + std::to_string(e) + ")");
  }
  return static_cast<std::uint32_t>(q);
}

FrobBasis::FrobBasis(RingPtr ring, std::uint32_t e, std::uint64_t max_size)
    : ring_(std::move(ring)), e_(e), q_(frobenius_q(ring_->p(), e)) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    size *= q_;
    if (size > max_size)
      throw ResourceLimitError("r_e = q^n exceeds the size bound " + std::to_string(max_size));
  }
  size_ = static_cast<std::size_t>(size);
}

std::size_t FrobBasis::index(const Monomial& a) const {
  std::size_t idx = 0;
  for (std::size_t i = n(); i-- > 0;) {
    if (a.exp[i] >= q_) throw std::invalid_argument("FrobBasis::index: exponent not below q");
    idx = idx * q_ + a.exp[i];
  }
  return idx;
}

Monomial FrobBasis::tuple(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("FrobBasis::tuple: index out of range");
  Monomial a;
  for (std::size_t i = 0; i < n(); ++i) {
    a.exp[i] = static_cast<std::uint16_t>(index % q_);
    index /= q_;
  }
  return a;
}

std::pair<Monomial, std::size_t> FrobBasis::split(const Monomial& a) const {
  Monomial quot;
  std::size_t idx = 0;
  for (std::size_t i = n(); i-- > 0;) {
    quot.exp[i] = static_cast<std::uint16_t>(a.exp[i] / q_);
    idx = idx * q_ + a.exp[i] % q_;
  }
  return {quot, idx};
}

namespace {

void check_ring(const SparsePoly& g, const FrobBasis& basis) {
  if (!same_ring(g.ring(), basis.ring())) throw std::invalid_argument("polynomial is not in the ring of the basis");
}

struct Piece {
  std::size_t index;
  Term term;
};

// Appends the coordinates of x^shift * g (as (index, quotient term) pieces).
void collect_pieces(const SparsePoly& g, const Monomial& shift, const FrobBasis& basis, std::vector<Piece>& out) {
  for (const auto& t : g.terms()) {
    auto [quot, idx] = basis.split(t.mono * shift);
    out.push_back(Piece{idx, Term{quot, t.coef}});
  }
}

std::vector<std::pair<std::size_t, SparsePoly>> group_pieces(std::vector<Piece>& pieces, const RingPtr& ring) {
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.index < b.index; });
  std::vector<std::pair<std::size_t, SparsePoly>> out;
  std::vector<Term> terms;
  std::size_t k = 0;
  while (k < pieces.size()) {
    const auto idx = pieces[k].index;
    terms.clear();
    while (k < pieces.size() && pieces[k].index == idx) terms.push_back(pieces[k++].term);
    auto poly = SparsePoly::from_terms(ring, terms);
    if (!poly.is_zero()) out.emplace_back(idx, std::move(poly));
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, SparsePoly>> frobenius_decompose(const SparsePoly& g, const FrobBasis& basis) {
  check_ring(g, basis);
  std::vector<Piece> pieces;
  pieces.reserve(g.size());
  collect_pieces(g, Monomial{}, basis, pieces);
  return group_pieces(pieces, basis.ring());
}

PolyMatrix matrix_of_relations(const SparsePoly& f, const FrobBasis& basis) {
  check_ring(f, basis);
  PolyMatrix m(basis.ring(), basis.size(), basis.size());
  std::vector<Piece> pieces;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    pieces.clear();
    collect_pieces(f, basis.tuple(j), basis, pieces);
    auto coords = group_pieces(pieces, basis.ring());
    std::vector<PolyMatrix::Entry> col;
    col.reserve(coords.size());
    for (auto& [idx, poly] : coords) col.push_back(PolyMatrix::Entry{static_cast<std::uint32_t>(idx), std::move(poly)});
    m.set_column(j, std::move(col));
  }
  return m;
}

PolyMatrix matrix_power(const SparsePoly& f, std::uint64_t k, const FrobBasis& basis, PowerRoute route) {
  if (k == 0) throw std::invalid_argument("matrix_power: k must be at least 1");
  check_ring(f, basis);
  if (route == PowerRoute::kAuto) {
    // Building M(f^k) costs about r_e * #terms(f^k); the product route costs
    // roughly k * r_e * #terms(f)^2. Lucas' theorem keeps #terms(f^k) small
    // in characteristic p, so direct construction nearly always wins.
    route = PowerRoute::kDirect;
    if (f.size() > 1 && k > 1) {
      const double direct_bound = static_cast<double>(f.size()) * static_cast<double>(k) * f.size();
      const double binom_bound = [&] {
        double b = 1;
        for (std::size_t i = 1; i < f.size() && b < 1e12; ++i) b = b * static_cast<double>(k + i) / static_cast<double>(i);
        return b;
      }();
      if (binom_bound > 64 * direct_bound) route = PowerRoute::kProduct;
    }
  }
  if (route == PowerRoute::kDirect) return matrix_of_relations(poly_pow(f, k), basis);

  const PolyMatrix a = matrix_of_relations(f, basis);
  PolyMatrix result = a;
  PolyMatrix base = a;
  std::uint64_t m = k - 1;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

PolyMatrix block_assemble(const std::vector<SparsePoly>& coefficients, const FrobBasis& basis,
                          const std::string& new_variable) {
  if (coefficients.empty()) throw std::invalid_argument("block_assemble: no coefficients");
  const std::size_t q = basis.q();
  const std::size_t d = coefficients.size() - 1;
  if (d >= q) throw std::invalid_argument("block_assemble: degree d=" + std::to_string(d) + " must be below q=" + std::to_string(q));

  auto big_ring = basis.ring()->extend({new_variable});
  const auto t = SparsePoly::variable(big_ring, big_ring->nvars() - 1);

  std::vector<std::optional<PolyMatrix>> lower(d + 1), upper(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    if (coefficients[k].is_zero()) continue;
    auto a = matrix_of_relations(coefficients[k], basis).embed(big_ring);
    upper[k] = a.scaled(t);
    lower[k] = std::move(a);
  }

  const auto zero_block = PolyMatrix(big_ring, basis.size(), basis.size());
  std::vector<std::vector<std::optional<PolyMatrix>>> grid(q, std::vector<std::optional<PolyMatrix>>(q));
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < q; ++c) {
      if (r >= c) {
        if (r - c <= d && lower[r - c]) grid[r][c] = lower[r - c];
      } else if (q + r - c <= d && upper[q + r - c]) {
        grid[r][c] = upper[q + r - c];
      }
      // pin sizes along the diagonal so all-zero block rows are well defined
      if (r == c && !grid[r][c]) grid[r][c] = zero_block;
    }
  return PolyMatrix::from_blocks(big_ring, grid);
}

}  // namespace frobmf
