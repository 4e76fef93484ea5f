#pragma once

#include <string>

#include <json.hpp>

#include "wedderkit/field.hpp"
#include "wedderkit/group.hpp"
#include "wedderkit/wedderburn.hpp"

namespace wk {

using Json = nlohmann::ordered_json;

// Builds a group from a JSON description.  Accepted shapes:
//   {"kind": "metacyclic", "m": 3, "n": 2, "t": 0, "r": 2}
//   {"kind": "abelian", "invariants": [2, 4]}
//   {"kind": "permutations", "generators": [[1, 2, 0], [1, 0, 2]]}
//   {"kind": "table", "table": [[0, 1], [1, 0]], "labels": ["e", "s"]}
// "labels" is optional and only honoured for tables.  A result of order
// above max_order is rejected with OrderBoundExceeded.
FiniteGroup group_from_json(const Json& j, int max_order = 256);

// {"order": n, "id": <multiplication table hash>}, the identification
// block shared by all reports.
Json group_summary(const FiniteGroup& G);

// Report serializers.  Keys are emitted in a fixed order so that equal
// inputs always produce byte-identical text.
Json decomposition_to_json(const FiniteGroup& G, const DecompositionReport& rep,
                           const CentralUnitRank& rank);
Json count_to_json(const FiniteGroup& G, const AbelianField& F, const ComponentCount& count);
Json minimality_to_json(const FiniteGroup& G, const AbelianField& F,
                        const MinimalityReport& rep);
Json rank_to_json(const FiniteGroup& G, const AbelianField& F, const CentralUnitRank& rank);
Json ffcount_to_json(const FiniteGroup& G, const FiniteFieldReport& rep);

// Human-readable renderings carrying the same numbers as the JSON form.
std::string decomposition_to_text(const FiniteGroup& G, const DecompositionReport& rep,
                                  const CentralUnitRank& rank);
std::string count_to_text(const FiniteGroup& G, const AbelianField& F,
                          const ComponentCount& count);
std::string minimality_to_text(const FiniteGroup& G, const AbelianField& F,
                               const MinimalityReport& rep);
std::string rank_to_text(const FiniteGroup& G, const AbelianField& F,
                         const CentralUnitRank& rank);
std::string ffcount_to_text(const FiniteGroup& G, const FiniteFieldReport& rep);

}  // namespace wk
