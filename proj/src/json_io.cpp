#include "semimatch/json_io.hpp"

#include <stdexcept>

namespace semimatch {

namespace {

Transformation from_image_array(const Json& array, bool one_indexed) {
  if (!array.is_array() || array.empty()) {
    throw std::invalid_argument("transformation: expected a nonempty array");
  }
  int n = static_cast<int>(array.size());
  std::vector<int> images;
  images.reserve(array.size());
  for (const Json& entry : array) {
    if (!entry.is_number_integer()) {
      throw std::invalid_argument("transformation: non-integer image entry");
    }
    int v = entry.get<int>();
    if (one_indexed) {
      if (v < 1 || v > n) {
        throw std::invalid_argument(
            "transformation: one-indexed entry " + std::to_string(v) +
            " outside [1, " + std::to_string(n) + "]");
      }
      v -= 1;
    }
    images.push_back(v);
  }
  return Transformation(n, std::move(images));
}

}  // namespace

Transformation transformation_from_json(const Json& j, bool one_indexed) {
  if (j.is_object()) {
    bool flag = j.value("one_indexed", false) || one_indexed;
    if (!j.contains("images")) {
      throw std::invalid_argument("transformation: wrapper lacks \"images\"");
    }
    return from_image_array(j.at("images"), flag);
  }
  return from_image_array(j, one_indexed);
}

Json transformation_to_json(const Transformation& a) {
  return Json(a.images());
}

Json transformation_display_json(const Transformation& a) {
  Json one_indexed = Json::array();
  for (int v : a.images()) {
    one_indexed.push_back(v + 1);
  }
  return Json{{"images", a.images()}, {"one_indexed", std::move(one_indexed)}};
}

KRik krik_from_json(const Json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("coordinates: expected an object");
  }
  for (const char* field : {"n", "K", "R", "i", "k"}) {
    if (!j.contains(field)) {
      throw std::invalid_argument(std::string("coordinates: missing \"") +
                                  field + "\"");
    }
  }
  KRik c{j.at("n").get<int>(), j.at("K").get<std::vector<int>>(),
         j.at("R").get<std::vector<int>>(), j.at("i").get<int>(),
         j.at("k").get<int>()};
  c.validate();
  return c;
}

Json krik_to_json(const KRik& c) {
  return Json{{"n", c.n},
              {"K", c.kernel_starts},
              {"R", c.range},
              {"i", c.shift},
              {"k", c.parity}};
}

Json classification_to_json(OrientationClass c) {
  switch (c) {
    case OrientationClass::kPreservingOnly:
      return "orientation-preserving";
    case OrientationClass::kReversingOnly:
      return "orientation-reversing";
    case OrientationClass::kBoth:
      return "both";
    case OrientationClass::kNeither:
      return "neither";
  }
  return "neither";
}

Json permutation_matching_to_json(const PermutationMatchingResult& r) {
  Json j;
  j["exists"] = r.exists();
  if (r.exists()) {
    j["kind"] = "permutation";
    j["map"] = *r.matching;
  } else if (r.witness.has_value()) {
    j["witness"] = Json{{"set", r.witness->set},
                        {"inverse_set", r.witness->neighborhood},
                        {"set_size", r.witness->set.size()},
                        {"inverse_set_size", r.witness->neighborhood.size()}};
  }
  return j;
}

Json involution_matching_to_json(const InvolutionMatchingResult& r) {
  Json j;
  j["exists"] = r.exists();
  if (r.exists()) {
    j["kind"] = "involution";
    Json pairs = Json::array();
    for (auto [a, b] : r.matching->pairs) {
      pairs.push_back(Json::array({a, b}));
    }
    j["pairs"] = std::move(pairs);
    j["fixed"] = r.matching->fixed;
  } else {
    j["odd_components"] = r.odd_components;
    j["unmatched"] = r.unmatched;
  }
  return j;
}

Json census_to_json(const StrongInverseCensus& census) {
  auto member_lists = [&](const std::vector<std::vector<int>>& groups) {
    Json out = Json::array();
    for (const auto& group : groups) {
      Json members = Json::array();
      for (int idx : group) {
        members.push_back(transformation_display_json(
            census.elements[static_cast<std::size_t>(idx)]));
      }
      out.push_back(std::move(members));
    }
    return out;
  };
  return Json{
      {"degree", census.degree},
      {"total", census.total},
      {"idempotents", census.idempotents},
      {"self_inverse_non_idempotents", census.self_inverse_non_idempotents},
      {"unique_distinct_strong", census.unique_distinct_strong},
      {"two_strong", census.two_strong},
      {"larger_strong", census.larger_strong},
      {"components",
       Json{{"loops", census.loop_components},
            {"pairs", census.pair_components},
            {"cycles", member_lists(census.cycles)},
            {"multi", member_lists(census.multi_components)}}}};
}

Json witness_report_to_json(const StrongWitnessReport& report) {
  auto set_json = [](const std::vector<Transformation>& set) {
    Json out = Json::array();
    for (const auto& t : set) {
      out.push_back(transformation_display_json(t));
    }
    return out;
  };
  return Json{
      {"degree", report.degree},
      {"alpha1", transformation_display_json(report.alpha1)},
      {"alpha2", transformation_display_json(report.alpha2)},
      {"beta", transformation_display_json(report.beta)},
      {"strong_inverses",
       Json{{"alpha1", set_json(report.strong_sets[0])},
            {"alpha2", set_json(report.strong_sets[1])},
            {"beta", set_json(report.strong_sets[2])}}},
      {"hall_violation", report.hall_violation},
      {"certificate", Json{{"set", report.certificate.set},
                           {"set_size", report.certificate.set.size()},
                           {"inverse_set", report.certificate.neighborhood},
                           {"inverse_set_size",
                            report.certificate.neighborhood.size()}}}};
}

Json decision_to_json(const MatchingDecision& decision) {
  Json d_classes = Json::array();
  for (const auto& summary : decision.d_classes) {
    Json blocks = Json::array();
    for (auto [m, n] : summary.block_shapes) {
      blocks.push_back(Json::array({m, n}));
    }
    d_classes.push_back(Json{{"d_class", summary.d_class},
                             {"blocks", std::move(blocks)},
                             {"similar", summary.similar}});
  }
  Json j{{"regular", decision.regular},
         {"e_solid", decision.e_solid},
         {"applicable", decision.applicable},
         {"d_classes", std::move(d_classes)}};
  if (decision.applicable) {
    j["decision"] = decision.matching_exists ? "yes" : "no";
  } else {
    j["decision"] = "inapplicable";
    j["reason"] = decision.reason;
  }
  return j;
}

}  // namespace semimatch
