#include "frobmf/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace frobmf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t m) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    base = mul(base, base);
    m >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t s = std::uint32_t{exp[i]} + other.exp[i];
    if (s > std::numeric_limits<std::uint16_t>::max())
      throw std::overflow_error("monomial exponent exceeds 65535");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> names) : field_(p), names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name " + names_[i]);
}

RingPtr PolyRing::make(std::uint32_t p, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return std::make_shared<const PolyRing>(p, std::move(names));
}

RingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(p, std::move(names));
}

bool PolyRing::has_variable(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t PolyRing::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown variable " + std::string(name));
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr PolyRing::extend(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = names_;
  for (const auto& n : extra) {
    if (has_variable(n)) throw std::invalid_argument("variable " + n + " already present in the ambient ring");
    names.push_back(n);
  }
  return std::make_shared<const PolyRing>(p(), std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

SparsePoly SparsePoly::constant(RingPtr ring, std::int64_t c) {
  auto v = ring->field().reduce(c);
  if (v == 0) return SparsePoly(std::move(ring));
  return SparsePoly(std::move(ring), {Term{Monomial{}, v}});
}

SparsePoly SparsePoly::monomial(RingPtr ring, const Monomial& m, std::uint32_t coef) {
  coef %= ring->p();
  if (coef == 0) return SparsePoly(std::move(ring));
  return SparsePoly(std::move(ring), {Term{m, coef}});
}

SparsePoly SparsePoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return monomial(std::move(ring), m);
}

SparsePoly SparsePoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& F = ring->field();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    std::uint32_t c = t.coef % F.modulus();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = F.add(out.back().coef, c);
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(Term{t.mono, c});
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return SparsePoly(std::move(ring), std::move(out));
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint32_t SparsePoly::constant_term() const {
  // the constant monomial is lexicographically smallest, so it sits last
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

std::uint32_t SparsePoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t SparsePoly::degree_in(std::size_t i) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.mono.exp[i]);
  return d;
}

SparsePoly SparsePoly::embed(RingPtr larger) const {
  if (!ring_ || larger->p() != ring_->p() || larger->nvars() < ring_->nvars())
    throw std::invalid_argument("embed: target ring does not extend the source ring");
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    if (larger->name(i) != ring_->name(i))
      throw std::invalid_argument("embed: target ring does not extend the source ring");
  return SparsePoly(std::move(larger), terms_);
}

void SparsePoly::check_same_ring(const SparsePoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomials belong to different ambient rings");
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  check_same_ring(o);
  const auto& F = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].mono > o.terms_[j].mono) {
      out.push_back(terms_[i++]);
    } else if (o.terms_[j].mono > terms_[i].mono) {
      out.push_back(o.terms_[j++]);
    } else {
      auto c = F.add(terms_[i].coef, o.terms_[j].coef);
      if (c != 0) out.push_back(Term{terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
  return SparsePoly(ring_, std::move(out));
}

SparsePoly SparsePoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = ring_->field().neg(t.coef);
  return SparsePoly(ring_, std::move(out));
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_same_ring(o);
  if (terms_.empty() || o.terms_.empty()) return SparsePoly(ring_);
  const auto& F = ring_->field();
  if (terms_.size() == 1) return o.times_monomial(terms_[0].mono, terms_[0].coef);
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono, o.terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back(Term{a.mono * b.mono, F.mul(a.coef, b.coef)});
  return from_terms(ring_, std::move(prod));
}

SparsePoly SparsePoly::scaled(std::uint32_t c) const {
  c %= ring_->p();
  if (c == 0) return SparsePoly(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = ring_->field().mul(t.coef, c);
  return SparsePoly(ring_, std::move(out));
}

SparsePoly SparsePoly::times_monomial(const Monomial& m, std::uint32_t c) const {
  c %= ring_->p();
  if (c == 0) return SparsePoly(ring_);
  // multiplying every term by the same monomial preserves the order
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, ring_->field().mul(t.coef, c)});
  return SparsePoly(ring_, std::move(out));
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coef != 1 || t.mono.is_one()) {
      os << t.coef;
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (wrote) os << '*';
      os << ring_->name(i);
      if (t.mono.exp[i] > 1) os << '^' << t.mono.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  SparsePoly run() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      terms.push_back(term(negative));
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    return SparsePoly::from_terms(ring_, std::move(terms));
  }

private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  std::uint64_t integer() {
    std::uint64_t v = 0;
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  Term term(bool negative) {
    const auto& F = ring_->field();
    std::uint32_t coef = 1;
    Monomial mono;
    bool need_factor = true;
    skip_ws();
    while (need_factor) {
      skip_ws();
      if (at_end()) fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = F.mul(coef, static_cast<std::uint32_t>(integer() % F.modulus()));
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        if (!ring_->has_variable(name)) {
          pos_ = start;
          if (name == "u" || name == "v" || name == "z")
            fail("reserved variable '" + name + "' (only available inside the f+uv / f+z^2 constructions)");
          fail("unknown or out-of-range variable '" + name + "'");
        }
        std::uint64_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = integer();
        }
        auto idx = ring_->index_of(name);
        std::uint64_t total = mono.exp[idx] + e;
        if (total > std::numeric_limits<std::uint16_t>::max()) fail("exponent too large");
        mono.exp[idx] = static_cast<std::uint16_t>(total);
      } else {
        fail("unexpected character '" + std::string(1, peek()) + "'");
      }
      skip_ws();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    if (negative) coef = F.neg(coef);
    return Term{mono, coef};
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

SparsePoly parse_poly(std::string_view text, std::uint32_t p, std::size_t n) {
  return parse_poly(text, PolyRing::make(p, n));
}

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x' || (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1])))) continue;
    std::size_t j = i + 1, v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + (text[j++] - '0');
    if (j > i + 1) best = std::max(best, v);
  }
  return best;
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) { return a * b; }

SparsePoly poly_pow(const SparsePoly& a, std::uint64_t m) {
  SparsePoly result = SparsePoly::one(a.ring());
  SparsePoly base = a;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

}  // namespace frobmf
