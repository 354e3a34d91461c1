#ifndef FROBMF_MONOMIAL_HPP
#define FROBMF_MONOMIAL_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "frobmf/frobenius.hpp"

namespace frobmf {

/// Exponent tuple c labelling a point of the box Gamma = {0 <= c_j <= d_j}.
using Label = std::vector<std::uint32_t>;

/// f = x1^{d_1} ... xn^{d_n} with every d_j >= 1.
class MonomialData {
public:
  explicit MonomialData(std::vector<std::uint32_t> dvec);

  const std::vector<std::uint32_t>& dvec() const { return dvec_; }
  std::size_t n() const { return dvec_.size(); }
  /// max_j d_j
  std::uint32_t d() const { return d_; }
  bool in_gamma(const Label& c) const;
  /// All labels of Gamma in lexicographic order.
  std::vector<Label> gamma() const;
  SparsePoly polynomial(const RingPtr& ring) const;

private:
  std::vector<std::uint32_t> dvec_;
  std::uint32_t d_ = 0;
};

/// prod_j eta_k(c_j), eta_k(c_j) = q - |c_j q - k d_j| when that is positive.
std::uint64_t eta(std::uint32_t k, const Label& c, const MonomialData& md, std::uint32_t q);

/// Diagonal labels of a generalized permutation matrix with monomial
/// entries, as a multiset (label -> count). Throws std::invalid_argument if
/// some row or column does not hold exactly one monomial entry.
std::map<Label, std::uint64_t> diagonalize_monomial_matrix(const PolyMatrix& a);

/// prod_j max(0, q - d_j (q - k)): the number of (f,1) summands of
/// (A^k, A^{q-k}).
std::uint64_t free_rank_formula(const MonomialData& md, std::uint32_t q, std::uint32_t k);

/// Label -> multiplicity of x^c on the diagonal of M(f^k, e). Uses eta when
/// q > d + 1 and diagonalization of the matrix otherwise.
std::map<Label, std::uint64_t> label_multiplicities(const MonomialData& md, std::uint32_t p, std::uint32_t e,
                                                    std::uint32_t k,
                                                    std::uint64_t max_size = FrobBasis::kDefaultMaxSize);

struct SummandMultiplicity {
  Label c;
  std::uint64_t multiplicity = 0;
};

struct DecompositionReport {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::uint64_t free_rank = 0;
  /// Interior labels (c != 0, c != d) with positive total multiplicity.
  std::vector<SummandMultiplicity> summands;
  /// q > max_j d_j + 1; below it the counts come from diagonalization only.
  bool threshold_ok = false;
};

/// Free rank q^n + sum_k [eta_k(d) + eta_k(0)] and the interior summands of
/// the pushforward of S[u,v]/(f+uv).
DecompositionReport decomposition_report(const MonomialData& md, std::uint32_t p, std::uint32_t e,
                                         std::uint64_t max_size = FrobBasis::kDefaultMaxSize);

struct WitnessReport {
  /// per_e[i] = labels occurring for e = i+1.
  std::vector<std::set<Label>> per_e;
  std::set<Label> labels;
};

/// Labels c with eta_k(c) > 0 for some e <= e_max and 1 <= k < p^e.
WitnessReport ffrt_witness(const MonomialData& md, std::uint32_t p, std::uint32_t e_max,
                           std::uint64_t max_size = FrobBasis::kDefaultMaxSize);

}  // namespace frobmf

#endif
