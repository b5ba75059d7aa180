#pragma once

#include <json.hpp>

#include "sextic/catalog.hpp"
#include "sextic/enumerator.hpp"

namespace sextic::cli {

/// One scheme record of the export schema.
nlohmann::json scheme_json(const Scheme& s, const Verdict& v, const std::optional<ConstructionRecord>& construction);

/// { "ambient", "chi", "schemes": [...] } for a classification. Admitted
/// schemes come first in canonical order, then the excluded ones.
nlohmann::json classification_json(const ClassifyResult& r, bool with_admitted = true, bool with_excluded = true);

/// Same schema for the transcribed list of an ambient.
nlohmann::json catalog_json(CubicAmbient ambient);

}  // namespace sextic::cli
