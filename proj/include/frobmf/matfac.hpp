#ifndef FROBMF_MATFAC_HPP
#define FROBMF_MATFAC_HPP

#include <cstddef>

#include "frobmf/poly_matrix.hpp"
#include "frobmf/ring.hpp"

namespace frobmf {

/// True iff phi*psi == psi*phi == f*I. Throws on non-square or mismatched sizes.
bool verify_matfac(const PolyMatrix& phi, const PolyMatrix& psi, const SparsePoly& f);

/// A matrix factorization (phi, psi) of f.
class MatFac {
public:
  /// Checks phi*psi = psi*phi = f*I; throws std::invalid_argument otherwise.
  MatFac(PolyMatrix phi, PolyMatrix psi, SparsePoly f);

  /// Skips the product check. For pairs that are factorizations by
  /// construction (block identities, presentations of Frobenius powers).
  static MatFac assume_valid(PolyMatrix phi, PolyMatrix psi, SparsePoly f);

  const PolyMatrix& phi() const { return phi_; }
  const PolyMatrix& psi() const { return psi_; }
  const SparsePoly& f() const { return f_; }
  std::size_t size() const { return phi_.rows(); }
  const RingPtr& ring() const { return f_.ring(); }

  bool verify() const { return verify_matfac(phi_, psi_, f_); }

private:
  struct Unchecked {};
  MatFac(PolyMatrix phi, PolyMatrix psi, SparsePoly f, Unchecked);

  PolyMatrix phi_;
  PolyMatrix psi_;
  SparsePoly f_;
};

/// Numbers of (f,1) and (1,f) summands in the canonical decomposition
/// (alpha,beta) + (f,1)^t + (1,f)^r.
struct SummandCount {
  std::size_t t = 0;
  std::size_t r = 0;
  std::size_t reduced_size = 0;

  friend bool operator==(const SummandCount&, const SummandCount&) = default;
};

/// ([phi, -vI; uI, psi], [psi, vI; -uI, phi]), a factorization of f + uv.
/// The ring is extended by fresh variables u and v.
MatFac maltese(const MatFac& mf);

/// ([phi, -zI; zI, psi], [psi, zI; -zI, phi]), a factorization of f + z^2.
/// Requires p odd and z fresh.
MatFac sharp(const MatFac& mf);

/// Block-diagonal pair; both factor the same f.
MatFac direct_sum(const MatFac& a, const MatFac& b);

/// t = rank of psi at the origin, r = rank of phi at the origin (over F_p).
/// Both are invariant under equivalence over the local ring, and on the
/// canonical decomposition they pick out exactly the unit blocks.
SummandCount trivial_summand_counts(const MatFac& mf);

}  // namespace frobmf

#endif
