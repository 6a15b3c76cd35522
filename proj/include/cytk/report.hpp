#pragma once

// JSON documents for every analysis, and plain-text renderings of those same
// documents, so the two output modes cannot disagree.

#include <string>
#include <vector>

#include "json.hpp"

#include "cytk/census.hpp"
#include "cytk/hypersurface.hpp"
#include "cytk/surface.hpp"
#include "cytk/torusq.hpp"

namespace cytk {

using Json = nlohmann::json;

/// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& doc);

Json analyze_json(const WeightSystem& ws);
std::string analyze_text(const Json& doc);

Json census_json(const CensusResult& result);
std::string census_text(const Json& doc);

Json surface_json(const DuValMultiset& m);
std::string surface_text(const Json& doc);

Json enumerate_json(const std::vector<DuValMultiset>& all);
std::string enumerate_text(const Json& doc);

/// `expected` is the configuration the action is meant to realize, if any.
Json torus_json(const TorusAction& action, const QuotientReport& report,
                const DuValMultiset* expected = nullptr);
std::string torus_text(const Json& doc);

Json builtins_json();
std::string builtins_text(const Json& doc);

}  // namespace cytk
