#include "fishburn/json_io.hpp"

#include <bit>
#include <stdexcept>

namespace fishburn::json_io {

json sequence_to_json(const ascent::AscentSequence& a) {
  return json(a.entries);
}

ascent::AscentSequence sequence_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("sequence must be a JSON array");
  std::vector<int> entries;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw std::invalid_argument("sequence entries must be integers");
    entries.push_back(e.get<int>());
  }
  auto checked = ascent::validate(std::move(entries));
  if (auto* rej = std::get_if<ascent::Rejection>(&checked))
    throw std::invalid_argument("invalid ascent sequence at index " +
                                std::to_string(rej->index) + ": " + rej->reason);
  return std::get<ascent::AscentSequence>(checked);
}

json stats_to_json(const ascent::StatVector& s) {
  return json{{"length", s.length},
              {"asc", s.asc},
              {"last", s.last},
              {"zeros", s.zeros},
              {"run", s.run}};
}

json strict_poset_to_json(const poset::StrictPoset& p) {
  json covers = json::array();
  for (auto [y, x] : poset::cover_pairs(p)) covers.push_back(json{y, x});
  return json{{"n", p.n}, {"covers", covers}};
}

namespace {

json mask_to_list(std::uint64_t mask) {
  json out = json::array();
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

json level_poset_to_json(const poset::LevelPoset& lp) {
  json j = strict_poset_to_json(poset::to_strict(lp));
  json chain = json::array();
  for (auto d : lp.chain) chain.push_back(mask_to_list(d));
  json levels = json::array();
  for (int i = 0; i < lp.rank(); ++i) levels.push_back(json(level_members(lp, i)));
  j["chain"] = chain;
  j["levels"] = levels;
  return j;
}

poset::StrictPoset strict_poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
    throw std::invalid_argument("poset needs \"n\" and \"covers\"");
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw std::invalid_argument("cover entries must be pairs");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return poset::from_cover_pairs(n, covers);
}

json series_to_json(const series::Series& s) {
  json vars = json::array();
  for (const char* v : series::kVarNames) vars.push_back(v);
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) {
    json ev = json::array();
    for (int x : e) ev.push_back(x);
    terms.push_back(json{{"e", ev}, {"c", c.str()}});
  }
  return json{{"order", s.order()}, {"vars", vars}, {"terms", terms}};
}

series::Series series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("terms"))
    throw std::invalid_argument("series needs \"order\" and \"terms\"");
  series::Series s(j.at("order").get<int>());
  for (const auto& t : j.at("terms")) {
    series::Exponents e{};
    const auto& ev = t.at("e");
    if (ev.size() != series::kVarCount)
      throw std::invalid_argument("exponent vector has wrong arity");
    for (int i = 0; i < series::kVarCount; ++i) e[i] = ev[i].get<int>();
    s += series::Series::monomial(s.order(), e,
                                  series::Int(t.at("c").get<std::string>()));
  }
  return s;
}

}  // namespace fishburn::json_io
