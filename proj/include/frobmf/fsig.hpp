#ifndef FROBMF_FSIG_HPP
#define FROBMF_FSIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobmf/frobenius.hpp"

namespace frobmf {

using Rational = boost::multiprecision::cpp_rational;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// W_s = sum over s-subsets J of prod_{j in J} (d - d_j) * prod_{j not in J} d_j,
/// d = max_j d_j, for s = 0..n.
struct WTable {
  std::vector<std::uint32_t> dvec;
  std::uint32_t d = 0;
  std::vector<Rational> values;

  std::size_t n() const { return dvec.size(); }
};

/// Subset-sum definition.
std::vector<Rational> w_direct(const std::vector<std::uint32_t>& dvec);
/// W^{(m)}_j = (d - d_m) W^{(m-1)}_{j-1} + d_m W^{(m-1)}_j.
std::vector<Rational> w_recurrence(const std::vector<std::uint32_t>& dvec);

/// Both paths; throws std::logic_error if they disagree.
WTable w_values(const std::vector<std::uint32_t>& dvec);

/// (2 / d^{n+1}) sum_{j=0}^{n} W_j / (n - j + 1).
Rational fsignature_uv_closed(const std::vector<std::uint32_t>& dvec);

/// 1 / 2^{n-1} if every d_j = 1, else 0.
Rational fsignature_z2_closed(const std::vector<std::uint32_t>& dvec);

/// Bernoulli number B_j with B_1 = -1/2 (cached).
Rational bernoulli(std::size_t j);

/// 1^s + ... + delta^s by Faulhaber's formula.
Rational sum_powers(std::uint64_t delta, std::uint32_t s);

/// Expands prod_j (d_j r + q (d - d_j)/d + u_j) in Q[r, q] and checks that
/// the coefficient of r^{n-j} q^j is W_j / d^j and that, for each c, the
/// remaining q-polynomial at r^c has degree at most n-1-c.
bool expansion_check(const std::vector<std::uint32_t>& dvec, const std::vector<Rational>& u);

enum class TargetType { kUV, kZ2 };

const char* to_string(TargetType t);
TargetType parse_target(const std::string& s);

struct EmpiricalPoint {
  std::uint32_t e = 0;
  std::uint64_t free_rank = 0;
  Rational s;
  std::optional<Rational> gap;  // |s - closed_form|
};

struct SignatureReport {
  TargetType target = TargetType::kUV;
  std::optional<std::vector<std::uint32_t>> dvec;
  std::optional<Rational> closed_form;
  std::vector<EmpiricalPoint> empirical;
};

/// Exponent vector of f when f is a monomial x^d with every d_j >= 1.
std::optional<std::vector<std::uint32_t>> monomial_dvec(const SparsePoly& f);

SignatureReport closed_form_report(const std::vector<std::uint32_t>& dvec, TargetType target);

/// s_e = free rank / q^{dim}, dim = n+1 for f+uv and n for f+z^2, for
/// e = e_min..e_max. Monomial f also gets the closed form and the gaps.
SignatureReport empirical_sequence(const SparsePoly& f, std::uint32_t e_min, std::uint32_t e_max,
                                   TargetType target, std::uint64_t max_size = FrobBasis::kDefaultMaxSize);

}  // namespace frobmf

#endif
