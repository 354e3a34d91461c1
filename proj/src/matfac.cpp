#include "frobmf/matfac.hpp"

#include <optional>
#include <stdexcept>

namespace frobmf {

bool verify_matfac(const PolyMatrix& phi, const PolyMatrix& psi, const SparsePoly& f) {
  if (!phi.is_square() || !psi.is_square() || phi.rows() != psi.rows())
    throw std::invalid_argument("verify_matfac: phi and psi must be square of equal size");
  if (!same_ring(phi.ring(), f.ring()) || !same_ring(psi.ring(), f.ring()))
    throw std::invalid_argument("verify_matfac: ring mismatch");
  return (phi * psi).is_scalar_multiple_of_identity(f) && (psi * phi).is_scalar_multiple_of_identity(f);
}

MatFac::MatFac(PolyMatrix phi, PolyMatrix psi, SparsePoly f)
    : phi_(std::move(phi)), psi_(std::move(psi)), f_(std::move(f)) {
  if (!verify_matfac(phi_, psi_, f_)) throw std::invalid_argument("not a matrix factorization of " + f_.to_string());
}

MatFac::MatFac(PolyMatrix phi, PolyMatrix psi, SparsePoly f, Unchecked)
    : phi_(std::move(phi)), psi_(std::move(psi)), f_(std::move(f)) {}

MatFac MatFac::assume_valid(PolyMatrix phi, PolyMatrix psi, SparsePoly f) {
  if (!phi.is_square() || !psi.is_square() || phi.rows() != psi.rows())
    throw std::invalid_argument("MatFac: phi and psi must be square of equal size");
  return MatFac(std::move(phi), std::move(psi), std::move(f), Unchecked{});
}

namespace {

// ([phi, -a I; b I, psi], [psi, a I; -b I, phi]) over `ring`; factors f + ab.
MatFac twisted_pair(const MatFac& mf, const RingPtr& ring, const SparsePoly& a, const SparsePoly& b) {
  const auto n = mf.size();
  const auto phi = mf.phi().embed(ring);
  const auto psi = mf.psi().embed(ring);
  const auto aI = PolyMatrix::scalar(a, n);
  const auto bI = PolyMatrix::scalar(b, n);
  auto big_phi = PolyMatrix::from_blocks(ring, {{phi, -aI}, {bI, psi}});
  auto big_psi = PolyMatrix::from_blocks(ring, {{psi, aI}, {-bI, phi}});
  return MatFac::assume_valid(std::move(big_phi), std::move(big_psi), mf.f().embed(ring) + a * b);
}

}  // namespace

MatFac maltese(const MatFac& mf) {
  const auto ring = mf.ring()->extend({"u", "v"});
  const auto u = SparsePoly::variable(ring, ring->index_of("u"));
  const auto v = SparsePoly::variable(ring, ring->index_of("v"));
  return twisted_pair(mf, ring, v, u);
}

MatFac sharp(const MatFac& mf) {
  if (mf.ring()->p() == 2) throw std::invalid_argument("sharp construction requires odd characteristic");
  const auto ring = mf.ring()->extend({"z"});
  const auto z = SparsePoly::variable(ring, ring->index_of("z"));
  return twisted_pair(mf, ring, z, z);
}

MatFac direct_sum(const MatFac& a, const MatFac& b) {
  if (!(a.f() == b.f())) throw std::invalid_argument("direct_sum: factorizations of different elements");
  return MatFac::assume_valid(direct_sum(a.phi(), b.phi()), direct_sum(a.psi(), b.psi()), a.f());
}

SummandCount trivial_summand_counts(const MatFac& mf) {
  SummandCount c;
  c.t = rank_mod_p(mf.psi().at_origin());
  c.r = rank_mod_p(mf.phi().at_origin());
  // phi(0) psi(0) = f(0) I, so t + r <= N whenever f vanishes at the origin
  if (c.t + c.r > mf.size())
    throw std::domain_error("trivial_summand_counts: f must vanish at the origin");
  c.reduced_size = mf.size() - c.t - c.r;
  return c;
}

}  // namespace frobmf
