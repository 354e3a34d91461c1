#ifndef FROBMF_HYPERSURFACE_HPP
#define FROBMF_HYPERSURFACE_HPP

#include <cstdint>
#include <vector>

#include "frobmf/frobenius.hpp"
#include "frobmf/matfac.hpp"

namespace frobmf {

/// (M(f^k,e), M(f^{q-k},e)), the factorization of f whose cokernel presents
/// the pushforward of S/f^k. Requires 1 <= k <= q-1.
MatFac presentation_fk(const SparsePoly& f, std::uint32_t k, const FrobBasis& basis);

/// Pushforward of S[u,v]/(f+uv): r_e free summands plus the cokernels of
/// B_k = ([A^k, -vI; uI, A^{q-k}], [A^{q-k}, vI; -uI, A^k]), k = 1..q-1.
struct UVDecomposition {
  std::uint32_t q = 0;
  std::size_t r_e = 0;
  std::vector<MatFac> blocks;  // blocks[k-1] = B_k
};

UVDecomposition uv_decomposition(const SparsePoly& f, const FrobBasis& basis);

struct UVBlockSummary {
  std::uint32_t k = 0;
  std::size_t t = 0;  // (f,1) summands of (A^k, A^{q-k})
  std::size_t r = 0;  // (1,f) summands of (A^k, A^{q-k})
  std::size_t size = 0;  // size of B_k
};

struct FreeRankReport {
  std::uint32_t q = 0;
  std::size_t r_e = 0;
  std::vector<UVBlockSummary> blocks;
  std::uint64_t free_rank_total = 0;
};

/// Per-block counts; B_k contributes t_k + r_k free summands.
FreeRankReport free_rank_uv_report(const SparsePoly& f, const FrobBasis& basis);

/// r_e + 2 * sum_k t_k.
std::uint64_t free_rank_uv(const SparsePoly& f, const FrobBasis& basis);

/// ([A^{(q-1)/2}, -zI; zI, A^{(q+1)/2}], [A^{(q+1)/2}, zI; -zI, A^{(q-1)/2}]),
/// a factorization of f + z^2. Requires p odd.
MatFac z2_presentation(const SparsePoly& f, const FrobBasis& basis);

/// Free rank of the pushforward of S[z]/(f+z^2): the trivial counts of
/// A^{(q-1)/2} and A^{(q+1)/2}, i.e. rank A^{(q+1)/2}(0) + rank A^{(q-1)/2}(0).
std::uint64_t free_rank_z2(const SparsePoly& f, const FrobBasis& basis);

/// rank over F_p of M(f^k,e) at the origin.
std::size_t origin_rank(const SparsePoly& f, std::uint64_t k, const FrobBasis& basis);

}  // namespace frobmf

#endif
