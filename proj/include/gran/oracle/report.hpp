#pragma once

#include <json.hpp>

#include "gran/oracle/claims.hpp"

namespace gran::oracle {

nlohmann::json to_json(const Certificate &c);
nlohmann::json to_json(const CheckReport &r);
nlohmann::json to_json(const VerifyReport &r);

/// One line per check: status, id, instances, violations.
std::string summary_text(const VerifyReport &r);

} // namespace gran::oracle
