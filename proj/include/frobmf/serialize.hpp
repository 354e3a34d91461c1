#ifndef FROBMF_SERIALIZE_HPP
#define FROBMF_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "frobmf/fsig.hpp"
#include "frobmf/hypersurface.hpp"
#include "frobmf/matfac.hpp"
#include "frobmf/monomial.hpp"

namespace frobmf {

/// {rows, cols, entries: [[i, j, "poly"], ...]}, entries in row-major order.
nlohmann::json matrix_to_json(const PolyMatrix& m);
/// "row,col,value" header, then one line per nonzero entry (row-major).
std::string matrix_to_csv(const PolyMatrix& m);

/// {f, size, phi, psi}
nlohmann::json matfac_to_json(const MatFac& mf);

/// {q, r_e, blocks: [{k, t, r, size}], free_rank_total}
nlohmann::json to_json(const FreeRankReport& rep);
/// {q, e, free_rank, summands: [{c, multiplicity}], threshold_ok}
nlohmann::json to_json(const DecompositionReport& rep);
/// {labels, per_e: [{e, labels}]}
nlohmann::json to_json(const WitnessReport& rep);
/// {target, dvec?, closed_form?, empirical: [{e, free_rank, s, gap?}]}
nlohmann::json to_json(const SignatureReport& rep);

}  // namespace frobmf

#endif
