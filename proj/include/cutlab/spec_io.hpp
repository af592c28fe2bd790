#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "cutlab/constructors.hpp"

namespace cutlab {

/// Parses a group-spec JSON document such as
///   {"kind":"metacyclic","m":12,"n":2,"r":5}
/// Throws ParseError for malformed JSON or schema violations and
/// InvalidParameters (or a subclass) when the parameters break a
/// constructor invariant.
GroupSpec parse_group_spec(std::string_view text, std::size_t max_order = kDefaultMaxOrder);
GroupSpec group_spec_from_json(const nlohmann::json& doc);

/// Canonical JSON form; parse_group_spec(dump(spec_to_json(s))) == s.
nlohmann::ordered_json spec_to_json(const GroupSpec& spec);

}  // namespace cutlab
