#pragma once

// JSON views of the library's reports. Key order is fixed (nlohmann's
// ordered_json) so identical inputs give byte-identical output.

#include <json.hpp>

#include "ssm/decoder.hpp"
#include "ssm/properties.hpp"
#include "ssm/random_construction.hpp"
#include "ssm/search.hpp"
#include "ssm/ssc.hpp"

namespace ssm {

using Json = nlohmann::ordered_json;

Json to_json(const SupportSet& s);
Json to_json(const PropertyReport& r);
Json to_json(const DecodeResult& r);
Json to_json(const CampaignReport& r);
Json to_json(const DescendantCode& desc);
Json to_json(const FrameSet& frames);
Json to_json(const ExpurgationLog& log);
Json to_json(const RateBoundReport& r);
Json to_json(const std::vector<KnownBound>& table);
Json to_json(const SearchResult& r);
Json to_json(const std::vector<RateEntry>& table);

std::string_view search_property_name(SearchProperty p);

}  // namespace ssm
