#pragma once

#include <json.hpp>

#include "cmatch/extremal.hpp"
#include "cmatch/gallai_edmonds.hpp"
#include "cmatch/matching.hpp"
#include "cmatch/stability.hpp"
#include "cmatch/verifier.hpp"

namespace cmatch {

using json = nlohmann::ordered_json;

// Graph wire format:
//   {"parts":[n1,...,ns], "num_colors":k, "overlap_allowed":b,
//    "edges":[{"u":0,"v":1,"colors":[1]}, ...]}
// Loading validates that every cross-part pair appears exactly once with a
// nonempty color list and that no same-part pair is present.
json graph_to_json(const ColoredMultipartiteGraph& g);
ColoredMultipartiteGraph graph_from_json(const json& j);

json matching_to_json(const MatchingCertificate& cert);
MatchingCertificate matching_from_json(const json& j);

json cover_to_json(const CoverCertificate& cert);

json ge_to_json(const GEDecomposition& dec);
json ge_verify_to_json(const GEVerifyReport& rep);

json suitability_to_json(const SuitabilityReport& rep);

json bad_partition_to_json(const BadPartitionCertificate& cert);
BadPartitionCertificate bad_partition_from_json(const json& j);
json bad_partition_check_to_json(const BadPartitionCheck& check);

json stability_search_to_json(const StabilitySearchResult& result);
json audit_to_json(const AuditReport& rep);

// include_timing controls the wall-clock field; canonical reports omit it so
// equal runs are byte-identical regardless of thread count.
json verification_to_json(const VerificationReport& rep, bool include_timing = false);
json necessity_to_json(const NecessityReport& rep);
json search3_to_json(const Search3Result& result);

}  // namespace cmatch
