#include "frobmf/fsig.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "frobmf/hypersurface.hpp"

namespace frobmf {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

void check_dvec(const std::vector<std::uint32_t>& dvec) {
  if (dvec.empty()) throw std::invalid_argument("dvec must be nonempty");
  for (auto dj : dvec)
    if (dj < 1) throw std::invalid_argument("every entry of dvec must be at least 1");
}

std::uint32_t max_of(const std::vector<std::uint32_t>& dvec) { return *std::max_element(dvec.begin(), dvec.end()); }

}  // namespace

std::vector<Rational> w_direct(const std::vector<std::uint32_t>& dvec) {
  check_dvec(dvec);
  if (dvec.size() > 20) throw std::invalid_argument("w_direct: too many variables for subset enumeration");
  const auto n = dvec.size();
  const auto d = max_of(dvec);
  std::vector<Rational> w(n + 1, Rational(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    boost::multiprecision::cpp_int prod = 1;
    std::size_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        prod *= d - dvec[j];
        ++s;
      } else {
        prod *= dvec[j];
      }
    }
    w[s] += Rational(prod);
  }
  return w;
}

std::vector<Rational> w_recurrence(const std::vector<std::uint32_t>& dvec) {
  check_dvec(dvec);
  const auto d = max_of(dvec);
  // W^{(0)} = (1)
  std::vector<Rational> w{Rational(1)};
  for (auto dm : dvec) {
    std::vector<Rational> next(w.size() + 1, Rational(0));
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (j >= 1) next[j] += Rational(d - dm) * w[j - 1];
      if (j < w.size()) next[j] += Rational(dm) * w[j];
    }
    w = std::move(next);
  }
  return w;
}

WTable w_values(const std::vector<std::uint32_t>& dvec) {
  auto direct = w_direct(dvec);
  if (direct != w_recurrence(dvec)) throw std::logic_error("w_values: definition and recurrence disagree");
  return WTable{dvec, max_of(dvec), std::move(direct)};
}

Rational fsignature_uv_closed(const std::vector<std::uint32_t>& dvec) {
  const auto table = w_values(dvec);
  const auto n = table.n();
  if (table.values[n] != 0) throw std::logic_error("W_n must vanish when d is the maximum");
  Rational sum = 0;
  for (std::size_t j = 0; j <= n; ++j) sum += table.values[j] / Rational(n - j + 1);
  Rational dn1 = 1;
  for (std::size_t i = 0; i <= n; ++i) dn1 *= table.d;
  return Rational(2) / dn1 * sum;
}

Rational fsignature_z2_closed(const std::vector<std::uint32_t>& dvec) {
  check_dvec(dvec);
  if (max_of(dvec) >= 2) return Rational(0);
  Rational r = 1;
  for (std::size_t i = 1; i < dvec.size(); ++i) r /= 2;
  return r;
}

Rational bernoulli(std::size_t j) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= j) {
    const auto m = cache.size();
    // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
    Rational acc = 0;
    boost::multiprecision::cpp_int binom = 1;  // C(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      acc += Rational(binom) * cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    cache.push_back(-acc / Rational(m + 1));
  }
  return cache[j];
}

Rational sum_powers(std::uint64_t delta, std::uint32_t s) {
  Rational acc = 0;
  boost::multiprecision::cpp_int binom = 1;  // C(s+1, j)
  for (std::uint32_t j = 0; j <= s; ++j) {
    Rational term = Rational(binom) * bernoulli(j) * Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(delta), s + 1 - j));
    acc += (j % 2 == 1) ? -term : term;
    binom = binom * (s + 1 - j) / (j + 1);
  }
  return acc / Rational(s + 1);
}

bool expansion_check(const std::vector<std::uint32_t>& dvec, const std::vector<Rational>& u) {
  check_dvec(dvec);
  if (u.size() != dvec.size()) throw std::invalid_argument("expansion_check: u must have one value per variable");
  const auto n = dvec.size();
  const auto table = w_values(dvec);
  const Rational d(table.d);

  // (deg_r, deg_q) -> coefficient
  std::map<std::pair<std::size_t, std::size_t>, Rational> poly{{{0, 0}, Rational(1)}};
  for (std::size_t j = 0; j < n; ++j) {
    const Rational cr(dvec[j]);
    const Rational cq = (d - Rational(dvec[j])) / d;
    std::map<std::pair<std::size_t, std::size_t>, Rational> next;
    for (const auto& [mono, coef] : poly) {
      const auto [a, b] = mono;
      next[{a + 1, b}] += coef * cr;
      next[{a, b + 1}] += coef * cq;
      next[{a, b}] += coef * u[j];
    }
    poly = std::move(next);
  }

  Rational dj = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    const auto it = poly.find({n - j, j});
    const Rational got = it == poly.end() ? Rational(0) : it->second;
    if (got != table.values[j] / dj) return false;
    dj *= d;
  }
  for (const auto& [mono, coef] : poly) {
    const auto [c, b] = mono;
    if (coef == 0 || c + b == n) continue;
    if (c + b > n || b > n - 1 - c) return false;
  }
  return true;
}

const char* to_string(TargetType t) { return t == TargetType::kUV ? "uv" : "z2"; }

TargetType parse_target(const std::string& s) {
  if (s == "uv") return TargetType::kUV;
  if (s == "z2") return TargetType::kZ2;
  throw std::invalid_argument("unknown target type '" + s + "' (expected uv or z2)");
}

std::optional<std::vector<std::uint32_t>> monomial_dvec(const SparsePoly& f) {
  if (!f.is_monomial()) return std::nullopt;
  const auto& t = f.terms().front();
  std::vector<std::uint32_t> d;
  for (std::size_t j = 0; j < f.ring()->nvars(); ++j) {
    if (t.mono.exp[j] == 0) return std::nullopt;
    d.push_back(t.mono.exp[j]);
  }
  return d;
}

SignatureReport closed_form_report(const std::vector<std::uint32_t>& dvec, TargetType target) {
  SignatureReport rep;
  rep.target = target;
  rep.dvec = dvec;
  rep.closed_form = target == TargetType::kUV ? fsignature_uv_closed(dvec) : fsignature_z2_closed(dvec);
  return rep;
}

SignatureReport empirical_sequence(const SparsePoly& f, std::uint32_t e_min, std::uint32_t e_max, TargetType target,
                                   std::uint64_t max_size) {
  if (e_min < 1 || e_max < e_min) throw std::invalid_argument("empirical_sequence: need 1 <= e_min <= e_max");
  SignatureReport rep;
  rep.target = target;
  if (auto dv = monomial_dvec(f)) {
    rep = closed_form_report(*dv, target);
  }
  const auto n = f.ring()->nvars();
  const std::size_t dim = target == TargetType::kUV ? n + 1 : n;
  for (std::uint32_t e = e_min; e <= e_max; ++e) {
    const FrobBasis basis(f.ring(), e, max_size);
    EmpiricalPoint pt;
    pt.e = e;
    pt.free_rank = target == TargetType::kUV ? free_rank_uv(f, basis) : free_rank_z2(f, basis);
    boost::multiprecision::cpp_int denom = 1;
    for (std::size_t i = 0; i < dim; ++i) denom *= basis.q();
    pt.s = Rational(pt.free_rank) / Rational(denom);
    if (rep.closed_form) pt.gap = abs(pt.s - *rep.closed_form);
    rep.empirical.push_back(std::move(pt));
  }
  return rep;
}

}  // namespace frobmf
