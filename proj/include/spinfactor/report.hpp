#ifndef SPINFACTOR_REPORT_HPP
#define SPINFACTOR_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace spinfactor {

struct ReportFactor {
  std::string poly;
  bool symmetric_unimodal = false;
};

// Outcome of one verified identity.
struct Report {
  std::string identity;
  bool pass = false;
  std::string lhs_hash, rhs_hash;
  std::optional<std::string> first_diff;
  std::vector<ReportFactor> factors;
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["lhs_hash"] = lhs_hash;
    j["rhs_hash"] = rhs_hash;
    j["pass"] = pass;
    if (first_diff) j["first_diff"] = *first_diff;
    if (!factors.empty()) {
      nlohmann::ordered_json fs = nlohmann::ordered_json::array();
      for (const auto& f : factors) {
        nlohmann::ordered_json fj;
        fj["poly"] = f.poly;
        fj["symmetric_unimodal"] = f.symmetric_unimodal;
        fs.push_back(std::move(fj));
      }
      j["factors"] = std::move(fs);
    }
    if (!notes.empty()) j["notes"] = notes;
    return j;
  }

  std::string to_text() const {
    std::string s = (pass ? "pass  " : "FAIL  ") + identity;
    if (first_diff) s += "  first_diff=" + *first_diff;
    for (const auto& n : notes) s += "\n      " + n;
    for (const auto& f : factors)
      s += "\n      factor " + f.poly + (f.symmetric_unimodal ? "  [symmetric unimodal]" : "  [NOT symmetric unimodal]");
    return s;
  }
};

}  // namespace spinfactor

#endif
