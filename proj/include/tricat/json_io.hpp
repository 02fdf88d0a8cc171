#ifndef TRICAT_JSON_IO_HPP
#define TRICAT_JSON_IO_HPP

#include <json.hpp>

#include "tricat/chain.hpp"
#include "tricat/frobenius.hpp"
#include "tricat/localization.hpp"
#include "tricat/vect.hpp"
#include "tricat/verify.hpp"

namespace tricat {

using nlohmann::json;

/*
 * Wire formats. A matrix is
 *   {"field": "Q" | "Fp:<p>", "rows": r, "cols": c, "entries": [...]}
 * with row-major entries, each either an integer or a ["num", "den"] pair
 * of decimal strings. Complexes, chain maps, modules and triangles build
 * on this. Parsing throws ParseError on malformed input.
 */

json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

json complex_to_json(const Complex& c);
Complex complex_from_json(const json& j);

/// {"source": complex, "target": complex, "maps": {"<degree>": matrix}}
json chain_map_to_json(const ChainInstance& inst, const Mor& f);
Mor chain_map_from_json(const ChainInstance& inst, const json& j);

/// {"dim": n, "x": matrix}
json module_to_json(const SqZeroModule& m);
SqZeroModule module_from_json(const json& j);

/// {"f": matrix, "g": matrix, "h": matrix} over the vect instance
json vect_triangle_to_json(const CandidateTriangle& t);
CandidateTriangle vect_triangle_from_json(const VectInstance& inst, const json& j);

json verify_report_to_json(const VerifyReport& rep);
json loc_report_to_json(const LocReport& rep);
json check_results_to_json(const std::vector<CheckResult>& checks);

}  // namespace tricat

#endif
