#ifndef FROBMF_FROBENIUS_HPP
#define FROBMF_FROBENIUS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "frobmf/poly_matrix.hpp"
#include "frobmf/ring.hpp"

namespace frobmf {

/// Monomial basis {x^a : 0 <= a_i < q} of the e-th Frobenius pushforward of
/// F_p[x1..xn] as a module over itself (the field is perfect, so no extra
/// field-basis factor appears).
///
/// Ordering is mixed radix with x1 least significant:
///   index(a) = a_1 + a_2 q + ... + a_n q^{n-1}
/// which for p = 3, e = 1, n = 2 yields 1, x, x^2, y, yx, yx^2, y^2, y^2x, y^2x^2.
class FrobBasis {
public:
  /// Throws ResourceLimitError if q^n exceeds `max_size`.
  FrobBasis(RingPtr ring, std::uint32_t e, std::uint64_t max_size = kDefaultMaxSize);

  static constexpr std::uint64_t kDefaultMaxSize = 1'000'000;

  const RingPtr& ring() const { return ring_; }
  std::uint32_t p() const { return ring_->p(); }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  std::size_t n() const { return ring_->nvars(); }
  /// r_e = q^n.
  std::size_t size() const { return size_; }

  /// Index of a monomial with every exponent in [0, q).
  std::size_t index(const Monomial& a) const;
  Monomial tuple(std::size_t index) const;

  /// Splits an exponent vector into (quotient, index of remainder) w.r.t. q.
  std::pair<Monomial, std::size_t> split(const Monomial& a) const;

private:
  RingPtr ring_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::size_t size_;
};

/// q = p^e, throwing if it does not fit the monomial exponent range.
std::uint32_t frobenius_q(std::uint32_t p, std::uint32_t e);

/// Coordinates of g: the unique g_i with g = sum_i g_i^q x^i, as a list of
/// (basis index, g_i) sorted by index; omitted indices are zero.
std::vector<std::pair<std::size_t, SparsePoly>> frobenius_decompose(const SparsePoly& g, const FrobBasis& basis);

/// M(f, e): column j holds the coordinates of x^j * f.
PolyMatrix matrix_of_relations(const SparsePoly& f, const FrobBasis& basis);

enum class PowerRoute { kAuto, kDirect, kProduct };

/// M(f^k, e), either built from f^k directly or as M(f, e)^k.
PolyMatrix matrix_power(const SparsePoly& f, std::uint64_t k, const FrobBasis& basis,
                        PowerRoute route = PowerRoute::kAuto);

/// Matrix of relations of g = g_0 + g_1 t + ... + g_d t^d over S[t], built
/// from the blocks A_k = M(g_k, e) over S: block (r, c) is A_{r-c} below
/// the diagonal and t * A_{q+r-c} in the upper-right corner. The result
/// lives in the ring S extended by `new_variable`. Requires d < q.
PolyMatrix block_assemble(const std::vector<SparsePoly>& coefficients, const FrobBasis& basis,
                          const std::string& new_variable);

}  // namespace frobmf

#endif
