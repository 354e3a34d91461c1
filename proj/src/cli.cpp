#include "frobmf/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "frobmf/frobenius.hpp"
#include "frobmf/fsig.hpp"
#include "frobmf/hypersurface.hpp"
#include "frobmf/monomial.hpp"
#include "frobmf/serialize.hpp"

namespace frobmf {

namespace {

struct RunConfig {
  std::string f;
  std::string dvec;
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::optional<std::uint32_t> emax;
  std::uint32_t k = 1;
  std::uint64_t power = 1;
  std::string type = "uv";
  std::string format = "json";
  std::uint64_t max_size = FrobBasis::kDefaultMaxSize;
  std::optional<std::size_t> n;
  bool e_given = false;
};

std::vector<std::uint32_t> parse_dvec(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed --dvec entry '" + item + "'");
    }
    if (used != item.size() || v == 0 || v > 0xFFFF) throw ParseError("malformed --dvec entry '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw ParseError("--dvec is empty");
  return out;
}

void require_p(const RunConfig& c) {
  if (c.p == 0) throw std::invalid_argument("--p is required");
}

SparsePoly config_poly(const RunConfig& c) {
  require_p(c);
  if (!c.f.empty()) {
    const auto n = c.n.value_or(std::max<std::size_t>(1, max_variable_index(c.f)));
    return parse_poly(c.f, c.p, n);
  }
  if (!c.dvec.empty()) {
    const MonomialData md(parse_dvec(c.dvec));
    return md.polynomial(PolyRing::make(c.p, md.n()));
  }
  throw std::invalid_argument("one of --f or --dvec is required");
}

MonomialData config_monomial(const RunConfig& c) {
  if (!c.dvec.empty()) return MonomialData(parse_dvec(c.dvec));
  if (c.f.empty()) throw std::invalid_argument("one of --f or --dvec is required");
  auto dv = monomial_dvec(config_poly(c));
  if (!dv) throw std::invalid_argument("--f must be a monomial involving every variable");
  return MonomialData(*dv);
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

void cmd_matrix(const RunConfig& c, std::ostream& out) {
  if (c.f.empty()) throw std::invalid_argument("--f is required");
  if (c.power < 1) throw std::invalid_argument("--power must be at least 1");
  const auto f = config_poly(c);
  const FrobBasis basis(f.ring(), c.e, c.max_size);
  const auto m = matrix_power(f, c.power, basis);
  if (c.format == "csv")
    out << matrix_to_csv(m);
  else
    emit(out, matrix_to_json(m));
}

void cmd_fsignature(const RunConfig& c, std::ostream& out) {
  const auto target = parse_target(c.type);
  SignatureReport rep;
  const bool sweep = c.emax.has_value() || c.e_given;
  if (sweep) {
    const std::uint32_t lo = c.emax ? 1 : c.e;
    const std::uint32_t hi = c.emax ? *c.emax : c.e;
    rep = empirical_sequence(config_poly(c), lo, hi, target, c.max_size);
  } else {
    if (c.dvec.empty()) throw std::invalid_argument("--dvec is required without --e/--emax");
    rep = closed_form_report(parse_dvec(c.dvec), target);
  }
  if (c.format == "csv") {
    if (rep.closed_form) out << "closed_form," << to_string(*rep.closed_form) << '\n';
    out << "e,free_rank,s,gap\n";
    for (const auto& pt : rep.empirical)
      out << pt.e << ',' << pt.free_rank << ',' << to_string(pt.s) << ',' << (pt.gap ? to_string(*pt.gap) : "")
          << '\n';
  } else {
    emit(out, to_json(rep));
  }
}

void cmd_decompose(const RunConfig& c, std::ostream& out) {
  require_p(c);
  const auto md = config_monomial(c);
  const auto rep = decomposition_report(md, c.p, c.e, c.max_size);
  if (c.format == "csv") {
    out << "free_rank," << rep.free_rank << "\nc,multiplicity\n";
    for (const auto& s : rep.summands) {
      for (std::size_t j = 0; j < s.c.size(); ++j) out << (j ? ";" : "") << s.c[j];
      out << ',' << s.multiplicity << '\n';
    }
    return;
  }
  auto j = to_json(rep);
  if (c.emax) j["witness"] = to_json(ffrt_witness(md, c.p, *c.emax, c.max_size));
  emit(out, j);
}

void cmd_freerank(const RunConfig& c, std::ostream& out) {
  const auto target = parse_target(c.type);
  const auto f = config_poly(c);
  const FrobBasis basis(f.ring(), c.e, c.max_size);
  if (target == TargetType::kUV) {
    const auto rep = free_rank_uv_report(f, basis);
    if (c.format == "csv") {
      out << "k,t,r,size\n";
      for (const auto& b : rep.blocks) out << b.k << ',' << b.t << ',' << b.r << ',' << b.size << '\n';
      out << "free_rank_total," << rep.free_rank_total << '\n';
    } else {
      emit(out, to_json(rep));
    }
    return;
  }
  const auto total = free_rank_z2(f, basis);
  if (c.format == "csv")
    out << "free_rank_total," << total << '\n';
  else
    emit(out, {{"q", basis.q()}, {"r_e", basis.size()}, {"free_rank_total", total}});
}

void cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto f = config_poly(c);
  const FrobBasis basis(f.ring(), c.e, c.max_size);
  MatFac mf = [&] {
    if (c.type == "z2") return z2_presentation(f, basis);
    auto pair = presentation_fk(f, c.k, basis);
    if (c.type == "uv") return maltese(pair);
    if (c.type != "fk") throw std::invalid_argument("--type must be fk, uv or z2 for verify");
    return pair;
  }();
  const bool ok = mf.verify();
  if (c.format == "csv")
    out << "verified," << (ok ? "true" : "false") << '\n';
  else
    emit(out, {{"f", mf.f().to_string()}, {"k", c.k}, {"size", mf.size()}, {"verified", ok}});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius pushforwards, matrix factorizations and F-signatures over F_p"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", c.p, "prime characteristic");
    sub->add_option("--e", c.e, "Frobenius exponent")->each([&](const std::string&) { c.e_given = true; });
    sub->add_option("--max-size", c.max_size, "bound on r_e = q^n");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto* matrix = app.add_subcommand("matrix", "matrix of relations M(f^power, e)");
  add_common(matrix);
  matrix->add_option("--f", c.f, "polynomial in x1..xn");
  matrix->add_option("--n", c.n, "number of variables (default: largest index in --f)");
  matrix->add_option("--power", c.power, "exponent k in M(f^k, e)");

  auto* fsignature = app.add_subcommand("fsignature", "closed-form and empirical F-signatures");
  add_common(fsignature);
  fsignature->add_option("--type", c.type, "uv or z2");
  fsignature->add_option("--dvec", c.dvec, "exponents of a monomial f, e.g. 2,1");
  fsignature->add_option("--f", c.f, "polynomial in x1..xn");
  fsignature->add_option("--n", c.n, "number of variables");
  fsignature->add_option("--emax", c.emax, "sweep e = 1..emax");

  auto* decompose = app.add_subcommand("decompose", "summand decomposition for monomial f + uv");
  add_common(decompose);
  decompose->add_option("--dvec", c.dvec, "exponents of f");
  decompose->add_option("--f", c.f, "monomial in x1..xn");
  decompose->add_option("--n", c.n, "number of variables");
  decompose->add_option("--emax", c.emax, "also report witness labels for e = 1..emax");

  auto* freerank = app.add_subcommand("freerank", "free rank of the pushforward of f + uv or f + z^2");
  add_common(freerank);
  freerank->add_option("--type", c.type, "uv or z2");
  freerank->add_option("--f", c.f, "polynomial in x1..xn");
  freerank->add_option("--dvec", c.dvec, "exponents of a monomial f");
  freerank->add_option("--n", c.n, "number of variables");

  auto* verify = app.add_subcommand("verify", "check a matrix factorization");
  add_common(verify);
  verify->add_option("--f", c.f, "polynomial in x1..xn");
  verify->add_option("--dvec", c.dvec, "exponents of a monomial f");
  verify->add_option("--n", c.n, "number of variables");
  verify->add_option("--k", c.k, "use (M(f^k,e), M(f^{q-k},e))");
  verify->add_option("--type", c.type, "fk (default), uv or z2");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  if (verify->parsed() && std::find(args.begin(), args.end(), "--type") == args.end()) c.type = "fk";

  try {
    if (matrix->parsed()) cmd_matrix(c, out);
    else if (fsignature->parsed()) cmd_fsignature(c, out);
    else if (decompose->parsed()) cmd_decompose(c, out);
    else if (freerank->parsed()) cmd_freerank(c, out);
    else cmd_verify(c, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace frobmf
