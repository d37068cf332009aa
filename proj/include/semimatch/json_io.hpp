#pragma once

#include <string>

#include <json.hpp>

#include "semimatch/inverse_graph.hpp"
#include "semimatch/orientation.hpp"
#include "semimatch/semigroup.hpp"
#include "semimatch/strong_inverse.hpp"
#include "semimatch/transformation.hpp"

namespace semimatch {

using Json = nlohmann::json;

/// Accepts a bare image array ([1,1,2]) or a wrapper object
/// {"images": [...], "one_indexed": true}. one_indexed forces one-based
/// interpretation of a bare array.
Transformation transformation_from_json(const Json& j, bool one_indexed = false);
Json transformation_to_json(const Transformation& a);
/// One-based display form alongside the raw array.
Json transformation_display_json(const Transformation& a);

KRik krik_from_json(const Json& j);
Json krik_to_json(const KRik& c);

Json classification_to_json(OrientationClass c);

Json permutation_matching_to_json(const PermutationMatchingResult& r);
Json involution_matching_to_json(const InvolutionMatchingResult& r);

Json census_to_json(const StrongInverseCensus& census);
Json witness_report_to_json(const StrongWitnessReport& report);
Json decision_to_json(const MatchingDecision& decision);

}  // namespace semimatch
