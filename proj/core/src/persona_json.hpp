#ifndef MOBILICAST_PERSONA_JSON_HPP
#define MOBILICAST_PERSONA_JSON_HPP

// Private helpers shared by the corpus and batch-record serializers.

#include "json.hpp"

#include "mobilicast/types.hpp"

namespace mobilicast::detail
{

nlohmann::json persona_meta_to_json(const PersonaMeta& m);
PersonaMeta persona_meta_from_json(const nlohmann::json& j);

} // namespace mobilicast::detail

#endif // MOBILICAST_PERSONA_JSON_HPP
