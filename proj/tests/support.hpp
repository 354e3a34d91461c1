#ifndef FROBMF_TESTS_SUPPORT_HPP
#define FROBMF_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "frobmf/poly_matrix.hpp"
#include "frobmf/ring.hpp"

namespace frobmf::testing {

inline SparsePoly P(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

inline SparsePoly random_poly(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms, std::uint32_t max_deg) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> coef(1, ring->p() - 1);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  std::vector<Term> terms;
  const auto count = nterms(rng);
  for (std::size_t t = 0; t < count; ++t) {
    Term term;
    term.coef = coef(rng);
    std::uint32_t budget = deg(rng);
    for (std::size_t i = 0; i < ring->nvars() && budget > 0; ++i) {
      std::uniform_int_distribution<std::uint32_t> part(0, budget);
      const auto a = i + 1 == ring->nvars() ? budget : part(rng);
      term.mono.exp[i] = static_cast<std::uint16_t>(a);
      budget -= a;
    }
    terms.push_back(term);
  }
  return SparsePoly::from_terms(ring, terms);
}

/// Random polynomial with zero constant term and at least one term.
inline SparsePoly random_nonunit(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms,
                                 std::uint32_t max_deg) {
  while (true) {
    auto f = random_poly(rng, ring, max_terms, max_deg);
    if (f.constant_term() != 0) f = f - SparsePoly::constant(ring, f.constant_term());
    if (!f.is_zero()) return f;
  }
}

/// Schoolbook product through an ordered map; no shared code with SparsePoly::operator*.
inline SparsePoly schoolbook(const SparsePoly& a, const SparsePoly& b) {
  const auto p = a.ring()->p();
  std::map<Monomial, std::uint64_t> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(s.mono.exp[i] + t.mono.exp[i]);
      acc[m] = (acc[m] + static_cast<std::uint64_t>(s.coef) * t.coef) % p;
    }
  std::vector<Term> terms;
  for (const auto& [m, c] : acc)
    if (c) terms.push_back(Term{m, static_cast<std::uint32_t>(c)});
  return SparsePoly::from_terms(a.ring(), terms);
}

/// M(x^2 + xy, 1) over F_3 as displayed, rows top to bottom, x = x1, y = x2,
/// basis order 1, x, x^2, y, yx, yx^2, y^2, y^2x, y^2x^2.
inline const std::vector<std::vector<std::string>>& reference_matrix_rows() {
  static const std::vector<std::vector<std::string>> rows = {
      {"0", "x1", "0", "0", "0", "0", "0", "0", "x1*x2"},
      {"0", "0", "x1", "0", "0", "0", "x2", "0", "0"},
      {"1", "0", "0", "0", "0", "0", "0", "x2", "0"},
      {"0", "0", "x1", "0", "x1", "0", "0", "0", "0"},
      {"1", "0", "0", "0", "0", "x1", "0", "0", "0"},
      {"0", "1", "0", "1", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "x1", "0", "x1", "0"},
      {"0", "0", "0", "1", "0", "0", "0", "0", "x1"},
      {"0", "0", "0", "0", "1", "0", "1", "0", "0"},
  };
  return rows;
}

inline PolyMatrix matrix_from_strings(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<SparsePoly>> grid;
  for (const auto& r : rows) {
    std::vector<SparsePoly> row;
    for (const auto& s : r) row.push_back(parse_poly(s, ring));
    grid.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(ring, grid);
}

}  // namespace frobmf::testing

#endif
