#pragma once

// Outcome of one verification: which identity, at which truncation order,
// with which parameters; on failure (or for searches) a witness.  Wall time
// is kept for diagnostics but deliberately left out of the JSON so repeated
// runs are byte-identical.

#include <string>

#include "json.hpp"

namespace fishburn::report {

struct Report {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  int order = 0;
  bool pass = false;
  nlohmann::json witness;  // null unless failing / search hit
  std::string note;
  double wall_ms = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json j{{"identity", identity},
                     {"order", order},
                     {"params", params},
                     {"pass", pass},
                     {"witness", witness}};
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

}  // namespace fishburn::report
