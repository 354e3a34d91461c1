#include "frobmf/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace frobmf::oracle {

std::vector<std::pair<std::size_t, SparsePoly>> decompose_by_exponents(const SparsePoly& g, std::uint32_t e) {
  const auto& ring = g.ring();
  const std::uint32_t p = ring->p();
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  const auto n = ring->nvars();

  std::map<std::size_t, std::vector<Term>> buckets;
  for (const auto& t : g.terms()) {
    std::size_t index = 0;
    std::uint64_t place = 1;
    Term quotient{Monomial{}, t.coef};
    for (std::size_t i = 0; i < n; ++i) {
      index += static_cast<std::size_t>((t.mono.exp[i] % q) * place);
      place *= q;
      quotient.mono.exp[i] = static_cast<std::uint16_t>(t.mono.exp[i] / q);
    }
    buckets[index].push_back(quotient);
  }
  std::vector<std::pair<std::size_t, SparsePoly>> out;
  for (auto& [index, terms] : buckets) {
    auto poly = SparsePoly::from_terms(ring, std::move(terms));
    if (!poly.is_zero()) out.emplace_back(index, std::move(poly));
  }
  return out;
}

namespace {

// C(a, b) mod p via Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  std::uint64_t result = 1;
  while (a > 0 || b > 0) {
    const auto ai = a % p, bi = b % p;
    if (bi > ai) return 0;
    // small binomial by multiplicative formula over the integers, mod p
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < bi; ++i) {
      num = num * ((ai - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    std::uint64_t inv = 1, base = den, ex = p - 2;
    while (ex > 0) {
      if (ex & 1) inv = inv * base % p;
      base = base * base % p;
      ex >>= 1;
    }
    result = result * (num * inv % p) % p;
    a /= p;
    b /= p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool fedder_membership(const std::vector<std::uint32_t>& dvec, std::uint32_t p, std::uint32_t e) {
  if (p == 2) throw std::invalid_argument("fedder_membership requires p odd");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  // term j: C(q-1, j) x^{dvec j} z^{2(q-1-j)}
  for (std::uint64_t j = 0; j < q; ++j) {
    if (binomial_mod_p(q - 1, j, p) == 0) continue;
    bool inside = 2 * (q - 1 - j) >= q;
    for (auto dj : dvec) inside = inside || dj * j >= q;
    if (!inside) return false;
  }
  return true;
}

namespace {

// Dense univariate polynomials over F_p, lowest degree first, no trailing zeros.
using UPoly = std::vector<std::uint32_t>;

struct UArith {
  std::uint32_t p;

  void trim(UPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, ex = p - 2;
    while (ex > 0) {
      if (ex & 1) r = r * b % p;
      b = b * b % p;
      ex >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }
  long deg(const UPoly& a) const { return static_cast<long>(a.size()) - 1; }

  UPoly mul(const UPoly& a, const UPoly& b) const {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
  }
  // a - c * b
  UPoly sub_mul(const UPoly& a, const UPoly& c, const UPoly& b) const {
    UPoly prod = mul(c, b);
    UPoly r(std::max(a.size(), prod.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::uint32_t x = i < a.size() ? a[i] : 0;
      const std::uint32_t y = i < prod.size() ? prod[i] : 0;
      r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
  }
  // quotient and remainder of a by b (b nonzero)
  std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) const {
    const auto lead_inv = inv(b.back());
    UPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (!a.empty() && a.size() >= b.size()) {
      const std::size_t shift = a.size() - b.size();
      const auto c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.back()) * lead_inv % p);
      quot[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - static_cast<std::uint64_t>(c) * b[i] % p) % p);
      trim(a);
    }
    trim(quot);
    return {quot, a};
  }
  UPoly monic(const UPoly& a) const {
    if (a.empty()) return a;
    const auto c = inv(a.back());
    UPoly r(a);
    for (auto& x : r) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * c % p);
    return r;
  }
};

}  // namespace

std::vector<SparsePoly> invariant_factors_univariate(const PolyMatrix& a) {
  const auto& ring = a.ring();
  if (ring->nvars() != 1) throw std::invalid_argument("invariant_factors_univariate requires a ring in one variable");
  const UArith ar{ring->p()};
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<UPoly>> m(rows, std::vector<UPoly>(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& entry : a.column(j)) {
      UPoly u(entry.value.total_degree() + 1, 0);
      for (const auto& t : entry.value.terms()) u[t.mono.exp[0]] = t.coef;
      ar.trim(u);
      m[entry.row][j] = std::move(u);
    }

  const std::size_t steps = std::min(rows, cols);
  std::vector<UPoly> diag;
  for (std::size_t s = 0; s < steps; ++s) {
    while (true) {
      // smallest-degree nonzero entry of the trailing submatrix
      long best = -1;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j)
          if (!m[i][j].empty() && (best < 0 || ar.deg(m[i][j]) < best)) {
            best = ar.deg(m[i][j]);
            bi = i;
            bj = j;
          }
      if (best < 0) break;
      std::swap(m[s], m[bi]);
      for (auto& row : m) std::swap(row[s], row[bj]);

      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (m[i][s].empty()) continue;
        auto [quot, rem] = ar.divmod(m[i][s], m[s][s]);
        for (std::size_t j = s; j < cols; ++j) m[i][j] = ar.sub_mul(m[i][j], quot, m[s][j]);
        if (!rem.empty()) clean = false;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (m[s][j].empty()) continue;
        auto [quot, rem] = ar.divmod(m[s][j], m[s][s]);
        for (std::size_t i = s; i < rows; ++i) m[i][j] = ar.sub_mul(m[i][j], quot, m[i][s]);
        if (!rem.empty()) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest; otherwise fold the offending row in
      bool divides = true;
      for (std::size_t i = s + 1; i < rows && divides; ++i)
        for (std::size_t j = s + 1; j < cols; ++j)
          if (!m[i][j].empty() && !ar.divmod(m[i][j], m[s][s]).second.empty()) {
            for (std::size_t k = s; k < cols; ++k) m[s][k] = ar.sub_mul(m[s][k], UPoly{ar.p - 1}, m[i][k]);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(ar.monic(m[s][s]));
  }

  std::vector<SparsePoly> out;
  for (const auto& u : diag) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      Term t;
      t.mono.exp[0] = static_cast<std::uint16_t>(i);
      t.coef = u[i];
      terms.push_back(t);
    }
    out.push_back(SparsePoly::from_terms(ring, std::move(terms)));
  }
  return out;
}

std::size_t dense_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint64_t inv = 1, base = rows[rank][c] % p, ex = p - 2;
    while (ex > 0) {
      if (ex & 1) inv = inv * base % p;
      base = base * base % p;
      ex >>= 1;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const std::uint64_t factor = rows[r][c] % p * inv % p;
      for (std::size_t k = 0; k < ncols; ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] % p + p - factor * (rows[rank][k] % p) % p) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace frobmf::oracle
