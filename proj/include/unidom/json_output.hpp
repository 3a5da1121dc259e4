#pragma once

#include "unidom/constructions.hpp"
#include "unidom/domination.hpp"
#include "unidom/search.hpp"

#include <json.hpp>

#include <cstdint>

namespace unidom {

/// Tag carried by every top-level JSON document.
inline constexpr const char* kSchemaTag = "unidom/1";

nlohmann::json to_json(const DominationReport& r);
nlohmann::json to_json(const VerificationCertificate& c);
nlohmann::json to_json(const SearchResult& r);

/// One BoundTable row: n, gamma, m_bipartite, m_fischermann, vizing, phi.
/// Entries whose hypotheses fail are null; vizing is an exact "p/q" string.
nlohmann::json bound_row(std::int64_t n, std::int64_t gamma);

}  // namespace unidom
