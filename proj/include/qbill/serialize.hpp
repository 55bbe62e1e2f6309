#pragma once

#include <json.hpp>

#include "qbill/classes.hpp"
#include "qbill/geom.hpp"
#include "qbill/recognizer.hpp"

namespace qbill {

nlohmann::json to_json(const CycleStructure& s);
nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const RecognitionResult& r);
nlohmann::json to_json(const TranslationClass& c);
nlohmann::json to_json(const std::vector<CrossingEvent>& events, const RationalRay& ray);

}  // namespace qbill
