#ifndef FROBMF_ORACLE_HPP
#define FROBMF_ORACLE_HPP

// Brute-force reference implementations. They share only the ring module
// with the main code paths.

#include <cstdint>
#include <utility>
#include <vector>

#include "frobmf/poly_matrix.hpp"
#include "frobmf/ring.hpp"

namespace frobmf::oracle {

/// Same contract as frobenius_decompose, computed term by term from the
/// quotient and remainder of each exponent by q = p^e.
std::vector<std::pair<std::size_t, SparsePoly>> decompose_by_exponents(const SparsePoly& g, std::uint32_t e);

/// Whether (x^dvec + z^2)^{q-1} lies in (x_1^q, ..., x_n^q, z^q), expanding
/// binomially with coefficients reduced mod p. Requires p odd.
bool fedder_membership(const std::vector<std::uint32_t>& dvec, std::uint32_t p, std::uint32_t e);

/// Smith form over F_p[x] of a matrix in one variable: the monic invariant
/// factors on the diagonal (zero polynomials for a rank deficit).
std::vector<SparsePoly> invariant_factors_univariate(const PolyMatrix& a);

/// Rank over F_p of a dense matrix, by plain Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

}  // namespace frobmf::oracle

#endif
