#include "ssm/serialize.hpp"

#include "ssm/io.hpp"

namespace ssm {

Json to_json(const SupportSet& s) { return Json(s.items()); }

Json to_json(const PropertyReport& r) {
  Json j;
  j["property"] = property_name(r.property);
  j["d"] = r.d;
  j["holds"] = r.holds;
  if (!r.witness) {
    j["witness"] = nullptr;
    return j;
  }
  const Witness& w = *r.witness;
  Json wj;
  switch (r.property) {
    case Property::disjunct:
      wj["subset"] = to_json(w.subset);
      wj["covered"] = w.item.value_or(0);
      break;
    case Property::bar_separable:
      wj["first"] = to_json(w.subset);
      wj["second"] = w.other ? to_json(*w.other) : Json(nullptr);
      break;
    default:
      wj["subset"] = to_json(w.subset);
      wj["missing"] = w.item.value_or(0);
      wj["frame"] = w.other ? to_json(*w.other) : Json(nullptr);
      break;
  }
  j["witness"] = std::move(wj);
  return j;
}

Json to_json(const DecodeResult& r) {
  Json j;
  j["outcome"] = r.identified() ? "identified" : "too_many";
  j["positives"] = r.identified() ? to_json(r.positives) : Json(nullptr);
  j["ops"] = r.ops;
  return j;
}

Json to_json(const CampaignReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  j["exhaustive"] = r.exhaustive;
  j["mean_ops"] = r.mean_ops;
  Json failures = Json::array();
  for (const auto& f : r.failure_examples) failures.push_back({{"planted", to_json(f.planted)}, {"decoded", to_json(f.decoded)}});
  j["failure_examples"] = std::move(failures);
  return j;
}

Json to_json(const DescendantCode& desc) {
  Json sets = Json::array();
  for (std::uint64_t s : desc.sets) {
    Json symbols = Json::array();
    for (unsigned v = 0; v < 64; ++v)
      if ((s >> v) & 1U) symbols.push_back(v);
    sets.push_back(std::move(symbols));
  }
  return {{"sets", std::move(sets)}, {"cardinality", desc.cardinality()}};
}

Json to_json(const FrameSet& frames) {
  Json list = Json::array();
  for (const auto& f : frames.frames) list.push_back(to_json(f));
  return {{"base", to_json(frames.base)}, {"minimal_only", frames.minimal_only}, {"frames", std::move(list)}};
}

Json to_json(const ExpurgationLog& log) {
  Json removed = Json::array();
  for (const auto& r : log.removed) {
    Json e;
    e["word"] = r.word;
    e["reason"] = r.reason == Removal::Reason::duplicate ? "duplicate" : "ssc_violation";
    e["subset"] = to_json(r.subset);
    e["frame"] = r.frame ? to_json(*r.frame) : Json(nullptr);
    removed.push_back(std::move(e));
  }
  Json j;
  j["t"] = log.t;
  j["q"] = log.q;
  j["d"] = log.d;
  j["seed"] = log.seed;
  j["initial_n"] = log.initial_n;
  j["final_n"] = log.final_n;
  j["removed"] = std::move(removed);
  j["kept"] = log.kept;
  return j;
}

Json to_json(const RateBoundReport& r) {
  Json j;
  j["q"] = r.q;
  j["m_cap"] = r.m_cap;
  j["m_star"] = r.m_star ? Json(*r.m_star) : Json(nullptr);
  j["max_term"] = r.max_term;
  j["asymptotic_term"] = r.asymptotic_term;
  j["bound"] = r.bound;
  j["terms"] = r.terms;
  return j;
}

Json to_json(const std::vector<KnownBound>& table) {
  Json rows = Json::array();
  for (const auto& b : table) {
    Json row;
    row["name"] = b.name;
    row["lower"] = b.lower;
    row["upper"] = b.upper;
    row["improved_lower"] = b.improved_lower ? Json(*b.improved_lower) : Json(nullptr);
    row["note"] = b.note;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view search_property_name(SearchProperty p) {
  switch (p) {
    case SearchProperty::dm: return "dm";
    case SearchProperty::ssm: return "ssm";
    case SearchProperty::sm: return "sm";
  }
  return "unknown";
}

Json to_json(const SearchResult& r) {
  Json j;
  j["property"] = search_property_name(r.property);
  j["d"] = r.d;
  j["t"] = r.t;
  j["max_n"] = r.max_n;
  j["exhaustive"] = r.exhaustive;
  j["seeded"] = r.seeded;
  j["checks"] = r.checks;
  j["certificate"] = write_matrix(r.certificate);
  return j;
}

Json to_json(const std::vector<RateEntry>& table) {
  Json rows = Json::array();
  for (const auto& e : table)
    rows.push_back({{"t", e.t}, {"max_n", e.max_n}, {"rate", e.rate}, {"exhaustive", e.exhaustive}});
  return rows;
}

}  // namespace ssm
