#include "frobmf/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace frobmf {

namespace {

std::vector<std::tuple<std::size_t, std::size_t, std::string>> row_major(const PolyMatrix& m) {
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> out;
  out.reserve(m.nnz());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) out.emplace_back(e.row, j, e.value.to_string());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  return out;
}

}  // namespace

nlohmann::json matrix_to_json(const PolyMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (auto& [i, j, s] : row_major(m)) entries.push_back({i, j, s});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

std::string matrix_to_csv(const PolyMatrix& m) {
  std::ostringstream out;
  out << "row,col,value\n";
  for (auto& [i, j, s] : row_major(m)) out << i << ',' << j << ',' << s << '\n';
  return out.str();
}

nlohmann::json matfac_to_json(const MatFac& mf) {
  return {{"f", mf.f().to_string()},
          {"size", mf.size()},
          {"phi", matrix_to_json(mf.phi())},
          {"psi", matrix_to_json(mf.psi())}};
}

nlohmann::json to_json(const FreeRankReport& rep) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : rep.blocks) blocks.push_back({{"k", b.k}, {"t", b.t}, {"r", b.r}, {"size", b.size}});
  return {{"q", rep.q}, {"r_e", rep.r_e}, {"blocks", std::move(blocks)}, {"free_rank_total", rep.free_rank_total}};
}

nlohmann::json to_json(const DecompositionReport& rep) {
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& s : rep.summands) summands.push_back({{"c", s.c}, {"multiplicity", s.multiplicity}});
  return {{"q", rep.q},
          {"e", rep.e},
          {"free_rank", rep.free_rank},
          {"summands", std::move(summands)},
          {"threshold_ok", rep.threshold_ok}};
}

nlohmann::json to_json(const WitnessReport& rep) {
  nlohmann::json per_e = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.per_e.size(); ++i) per_e.push_back({{"e", i + 1}, {"labels", rep.per_e[i]}});
  return {{"labels", rep.labels}, {"per_e", std::move(per_e)}};
}

nlohmann::json to_json(const SignatureReport& rep) {
  nlohmann::json out;
  out["target"] = to_string(rep.target);
  if (rep.dvec) out["dvec"] = *rep.dvec;
  if (rep.closed_form) out["closed_form"] = to_string(*rep.closed_form);
  nlohmann::json emp = nlohmann::json::array();
  for (const auto& pt : rep.empirical) {
    nlohmann::json row{{"e", pt.e}, {"free_rank", pt.free_rank}, {"s", to_string(pt.s)}};
    if (pt.gap) row["gap"] = to_string(*pt.gap);
    emp.push_back(std::move(row));
  }
  out["empirical"] = std::move(emp);
  return out;
}

}  // namespace frobmf
