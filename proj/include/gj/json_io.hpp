#ifndef GJ_JSON_IO_HPP
#define GJ_JSON_IO_HPP

#include <json.hpp>

#include "gj/assoc.hpp"
#include "gj/band.hpp"
#include "gj/betti.hpp"
#include "gj/central.hpp"
#include "gj/lie.hpp"
#include "gj/ranktrace.hpp"

namespace gj::io {

using nlohmann::json;

// Scalars travel as reduced "p/q" strings ("p" when integral).
json scalar_to_json(const Rat& r);
Rat scalar_from_json(const json& j);

json poly_to_json(const Poly& p);           // ascending coefficient array
Poly poly_from_json(const json& j);

json band_to_json(const BandMatrix& m);
BandMatrix band_from_json(const json& j);

json ext_to_json(const ExtElement& e);
ExtElement ext_from_json(const json& j);

json blocks_to_json(long long n, const std::vector<std::vector<BandMatrix>>& blocks);
std::pair<long long, std::vector<std::vector<BandMatrix>>> blocks_from_json(const json& j);

json lie_to_json(const FinLieAlg& g);
FinLieAlg lie_from_json(const json& j);

json assoc_to_json(const FinAssocAlg& a);
FinAssocAlg assoc_from_json(const json& j);

json action_to_json(const GroupAction& g);
GroupAction action_from_json(const json& j, const FinAssocAlg& algebra);

json betti_to_json(const BettiReport& r);
std::string betti_to_csv(const BettiReport& r);

json rank_report_to_json(const RankReport& r);
json periodicity_to_json(const PeriodicityReport& r);

json quadratic_to_json(const QuadraticReal& x);
QuadraticReal quadratic_from_json(const json& j);

json construction_to_json(const DiagonalConstruction& c);

/// Strict accessors: schema_error with a path hint on any shape mismatch.
const json& require(const json& j, const char* key);
long long require_int(const json& j, const char* key);

} // namespace gj::io

#endif
