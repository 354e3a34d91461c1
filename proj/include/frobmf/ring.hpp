#ifndef FROBMF_RING_HPP
#define FROBMF_RING_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobmf/errors.hpp"

namespace frobmf {

inline constexpr std::size_t kMaxVars = 8;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p, values kept in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t reduce(std::int64_t v) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t m) const;
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

/// Exponent vector x^a. Unused trailing slots are zero; comparison is
/// lexicographic starting from the first variable.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  std::uint32_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Coefficient field plus named variables. Shared between polynomials; two
/// rings are the same ambient ring iff p and the name list agree.
class PolyRing {
public:
  PolyRing(std::uint32_t p, std::vector<std::string> names);

  /// F_p[x1..xn].
  static std::shared_ptr<const PolyRing> make(std::uint32_t p, std::size_t n);
  static std::shared_ptr<const PolyRing> make(std::uint32_t p, std::vector<std::string> names);

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.modulus(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool has_variable(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  /// New ring with the given variables appended; existing monomials keep
  /// their slots, so embedding is a relabel.
  std::shared_ptr<const PolyRing> extend(const std::vector<std::string>& extra) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

private:
  PrimeField field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  std::uint32_t coef = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are stored in strictly decreasing
/// lexicographic order with no zero coefficients, so equality is syntactic.
class SparsePoly {
public:
  SparsePoly() = default;
  explicit SparsePoly(RingPtr ring) : ring_(std::move(ring)) {}

  static SparsePoly zero(RingPtr ring) { return SparsePoly(std::move(ring)); }
  static SparsePoly constant(RingPtr ring, std::int64_t c);
  static SparsePoly one(RingPtr ring) { return constant(std::move(ring), 1); }
  static SparsePoly monomial(RingPtr ring, const Monomial& m, std::uint32_t coef = 1);
  static SparsePoly variable(RingPtr ring, std::size_t index);
  /// Normalizes: sorts, merges equal monomials, drops zeros.
  static SparsePoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint32_t constant_term() const;
  std::uint32_t total_degree() const;
  /// Largest exponent of variable i appearing in any term.
  std::uint32_t degree_in(std::size_t i) const;

  /// Same terms, viewed in a ring that extends this one.
  SparsePoly embed(RingPtr larger) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  SparsePoly scaled(std::uint32_t c) const;
  SparsePoly times_monomial(const Monomial& m, std::uint32_t c = 1) const;

  /// Terms joined by " + ", coefficients in [0, p), e.g. "x1^2 + 2*x1*x2".
  std::string to_string() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

private:
  SparsePoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void check_same_ring(const SparsePoly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses `terms joined by + or -`; a term is an optional integer
/// coefficient followed by `*`-separated powers `name^E`. Names must belong
/// to `ring`.
SparsePoly parse_poly(std::string_view text, const RingPtr& ring);

/// Parses over F_p[x1..xn]. The auxiliary names u, v, z are rejected.
SparsePoly parse_poly(std::string_view text, std::uint32_t p, std::size_t n);

/// Largest K such that xK occurs in `text` (0 if none). Used to infer n.
std::size_t max_variable_index(std::string_view text);

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_pow(const SparsePoly& a, std::uint64_t m);

}  // namespace frobmf

#endif
