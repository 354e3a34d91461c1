#include "frobmf/hypersurface.hpp"

#include <stdexcept>
#include <string>

namespace frobmf {

namespace {

void require_nonunit(const SparsePoly& f) {
  if (f.is_zero()) throw std::invalid_argument("f must be nonzero");
  if (f.is_constant()) throw std::invalid_argument("f must not be constant");
  if (f.constant_term() != 0) throw std::invalid_argument("f must vanish at the origin");
}

void require_odd(const FrobBasis& basis) {
  if (basis.p() == 2) throw std::invalid_argument("the f + z^2 construction requires p odd");
}

}  // namespace

MatFac presentation_fk(const SparsePoly& f, std::uint32_t k, const FrobBasis& basis) {
  const auto q = basis.q();
  if (k < 1 || k >= q)
    throw std::invalid_argument("k=" + std::to_string(k) + " must lie in [1, " + std::to_string(q - 1) + "]");
  return MatFac::assume_valid(matrix_power(f, k, basis), matrix_power(f, q - k, basis), f);
}

UVDecomposition uv_decomposition(const SparsePoly& f, const FrobBasis& basis) {
  require_nonunit(f);
  UVDecomposition out;
  out.q = basis.q();
  out.r_e = basis.size();
  out.blocks.reserve(out.q - 1);
  for (std::uint32_t k = 1; k < out.q; ++k) out.blocks.push_back(maltese(presentation_fk(f, k, basis)));
  return out;
}

std::size_t origin_rank(const SparsePoly& f, std::uint64_t k, const FrobBasis& basis) {
  return rank_mod_p(matrix_power(f, k, basis).at_origin());
}

FreeRankReport free_rank_uv_report(const SparsePoly& f, const FrobBasis& basis) {
  require_nonunit(f);
  FreeRankReport rep;
  rep.q = basis.q();
  rep.r_e = basis.size();
  // ranks[k] = rank A^k(0); for the pair (A^k, A^{q-k}), t = ranks[q-k], r = ranks[k]
  std::vector<std::size_t> ranks(rep.q, 0);
  for (std::uint32_t k = 1; k < rep.q; ++k) ranks[k] = origin_rank(f, k, basis);
  rep.free_rank_total = rep.r_e;
  for (std::uint32_t k = 1; k < rep.q; ++k) {
    UVBlockSummary b{k, ranks[rep.q - k], ranks[k], 2 * rep.r_e};
    if (b.t + b.r > rep.r_e) throw std::domain_error("free_rank_uv: inconsistent ranks at the origin");
    rep.free_rank_total += b.t + b.r;
    rep.blocks.push_back(b);
  }
  return rep;
}

std::uint64_t free_rank_uv(const SparsePoly& f, const FrobBasis& basis) {
  return free_rank_uv_report(f, basis).free_rank_total;
}

MatFac z2_presentation(const SparsePoly& f, const FrobBasis& basis) {
  require_odd(basis);
  require_nonunit(f);
  const auto h = (basis.q() - 1) / 2;
  return sharp(presentation_fk(f, h, basis));
}

std::uint64_t free_rank_z2(const SparsePoly& f, const FrobBasis& basis) {
  require_odd(basis);
  require_nonunit(f);
  const auto h = (basis.q() - 1) / 2;
  return origin_rank(f, h, basis) + origin_rank(f, h + 1, basis);
}

}  // namespace frobmf
