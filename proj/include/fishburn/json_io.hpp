#pragma once

// JSON wire formats:
//   sequence   [0,1,0,...]
//   stats      {"length":n,"asc":a,"last":l,"zeros":m,"run":r}
//   poset      {"n":N,"covers":[[y,x],...]}           (transitive reduction)
//   level form adds {"chain":[[...],...],"levels":[[...],...]}
//   series     {"order":N,"vars":["t","u","v","z","x"],
//               "terms":[{"e":[et,eu,ev,ez,ex],"c":"<decimal>"},...]}
// Terms are sorted lexicographically by exponent vector; coefficients are
// decimal strings so arbitrary precision survives the trip.

#include <string>

#include "json.hpp"

#include "fishburn/ascent.hpp"
#include "fishburn/poset.hpp"
#include "fishburn/series.hpp"

namespace fishburn::json_io {

using nlohmann::json;

json sequence_to_json(const ascent::AscentSequence& a);
ascent::AscentSequence sequence_from_json(const json& j);

json stats_to_json(const ascent::StatVector& s);

json strict_poset_to_json(const poset::StrictPoset& p);
json level_poset_to_json(const poset::LevelPoset& lp);
// Accepts either wire form; uses "n"/"covers" and validates.
poset::StrictPoset strict_poset_from_json(const json& j);

json series_to_json(const series::Series& s);
series::Series series_from_json(const json& j);

}  // namespace fishburn::json_io
