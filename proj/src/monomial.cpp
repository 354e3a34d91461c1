#include "frobmf/monomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace frobmf {

MonomialData::MonomialData(std::vector<std::uint32_t> dvec) : dvec_(std::move(dvec)) {
  if (dvec_.empty()) throw std::invalid_argument("dvec must be nonempty");
  if (dvec_.size() > kMaxVars) throw std::invalid_argument("dvec has more than " + std::to_string(kMaxVars) + " entries");
  for (auto dj : dvec_)
    if (dj < 1) throw std::invalid_argument("every entry of dvec must be at least 1");
  d_ = *std::max_element(dvec_.begin(), dvec_.end());
}

bool MonomialData::in_gamma(const Label& c) const {
  if (c.size() != n()) return false;
  for (std::size_t j = 0; j < n(); ++j)
    if (c[j] > dvec_[j]) return false;
  return true;
}

std::vector<Label> MonomialData::gamma() const {
  std::vector<Label> out;
  Label c(n(), 0);
  while (true) {
    out.push_back(c);
    std::size_t j = n();
    while (j > 0) {
      --j;
      if (c[j] < dvec_[j]) {
        ++c[j];
        break;
      }
      c[j] = 0;
      if (j == 0) return out;
    }
  }
}

SparsePoly MonomialData::polynomial(const RingPtr& ring) const {
  if (ring->nvars() != n()) throw std::invalid_argument("ring has the wrong number of variables for dvec");
  Monomial m;
  for (std::size_t j = 0; j < n(); ++j) {
    if (dvec_[j] > 0xFFFF) throw std::invalid_argument("dvec entry too large");
    m.exp[j] = static_cast<std::uint16_t>(dvec_[j]);
  }
  return SparsePoly::monomial(ring, m);
}

std::uint64_t eta(std::uint32_t k, const Label& c, const MonomialData& md, std::uint32_t q) {
  if (k < 1 || k >= q) throw std::invalid_argument("eta: k must lie in [1, q-1]");
  if (!md.in_gamma(c)) throw std::invalid_argument("eta: label outside Gamma");
  std::uint64_t out = 1;
  for (std::size_t j = 0; j < md.n(); ++j) {
    const std::int64_t gap = std::llabs(static_cast<std::int64_t>(c[j]) * q - static_cast<std::int64_t>(k) * md.dvec()[j]);
    if (gap >= q) return 0;
    out *= static_cast<std::uint64_t>(q - gap);
  }
  return out;
}

std::map<Label, std::uint64_t> diagonalize_monomial_matrix(const PolyMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("diagonalize_monomial_matrix: matrix is not square");
  const auto n = a.ring()->nvars();
  std::vector<char> row_seen(a.rows(), 0);
  std::map<Label, std::uint64_t> out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto col = a.column(j);
    if (col.size() != 1)
      throw std::invalid_argument("not a generalized permutation matrix: column " + std::to_string(j) + " has " +
                                  std::to_string(col.size()) + " entries");
    const auto& entry = col.front();
    if (row_seen[entry.row]) throw std::invalid_argument("not a generalized permutation matrix: repeated row");
    row_seen[entry.row] = 1;
    if (!entry.value.is_monomial()) throw std::invalid_argument("entry is not a monomial");
    const auto& mono = entry.value.terms().front().mono;
    out[Label(mono.exp.begin(), mono.exp.begin() + static_cast<std::ptrdiff_t>(n))] += 1;
  }
  return out;
}

std::uint64_t free_rank_formula(const MonomialData& md, std::uint32_t q, std::uint32_t k) {
  if (k < 1 || k >= q) throw std::invalid_argument("free_rank_formula: k must lie in [1, q-1]");
  std::uint64_t out = 1;
  for (auto dj : md.dvec()) {
    const std::int64_t factor = static_cast<std::int64_t>(q) - static_cast<std::int64_t>(dj) * (q - k);
    if (factor <= 0) return 0;
    out *= static_cast<std::uint64_t>(factor);
  }
  return out;
}

namespace {

bool threshold_met(const MonomialData& md, std::uint32_t q) { return q > md.d() + 1; }

}  // namespace

std::map<Label, std::uint64_t> label_multiplicities(const MonomialData& md, std::uint32_t p, std::uint32_t e,
                                                    std::uint32_t k, std::uint64_t max_size) {
  const auto q = frobenius_q(p, e);
  if (k < 1 || k >= q) throw std::invalid_argument("label_multiplicities: k must lie in [1, q-1]");
  std::map<Label, std::uint64_t> out;
  if (threshold_met(md, q)) {
    for (const auto& c : md.gamma())
      if (auto m = eta(k, c, md, q)) out[c] = m;
    return out;
  }
  const FrobBasis basis(PolyRing::make(p, md.n()), e, max_size);
  return diagonalize_monomial_matrix(matrix_power(md.polynomial(basis.ring()), k, basis));
}

DecompositionReport decomposition_report(const MonomialData& md, std::uint32_t p, std::uint32_t e,
                                         std::uint64_t max_size) {
  DecompositionReport rep;
  rep.p = p;
  rep.e = e;
  rep.q = frobenius_q(p, e);
  rep.threshold_ok = threshold_met(md, rep.q);

  std::uint64_t qn = 1;
  for (std::size_t j = 0; j < md.n(); ++j) {
    qn *= rep.q;
    if (qn > max_size) throw ResourceLimitError("q^n exceeds the size bound " + std::to_string(max_size));
  }
  rep.free_rank = qn;

  const Label zero(md.n(), 0);
  const Label top = md.dvec();
  std::map<Label, std::uint64_t> interior;
  for (std::uint32_t k = 1; k < rep.q; ++k) {
    for (const auto& [c, m] : label_multiplicities(md, p, e, k, max_size)) {
      if (c == zero || c == top)
        rep.free_rank += m;
      else
        interior[c] += m;
    }
  }
  for (const auto& [c, m] : interior) rep.summands.push_back({c, m});
  return rep;
}

WitnessReport ffrt_witness(const MonomialData& md, std::uint32_t p, std::uint32_t e_max, std::uint64_t max_size) {
  if (e_max < 1) throw std::invalid_argument("ffrt_witness: e_max must be at least 1");
  WitnessReport rep;
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    const auto q = frobenius_q(p, e);
    std::set<Label> labels;
    for (std::uint32_t k = 1; k < q; ++k)
      for (const auto& [c, m] : label_multiplicities(md, p, e, k, max_size)) labels.insert(c);
    rep.labels.insert(labels.begin(), labels.end());
    rep.per_e.push_back(std::move(labels));
  }
  return rep;
}

}  // namespace frobmf
