#pragma once

#include <json.hpp>

#include "parkfn/expectation.hpp"
#include "parkfn/lukas.hpp"
#include "parkfn/parking.hpp"
#include "parkfn/poly.hpp"
#include "parkfn/qsym.hpp"

namespace parkfn {

// Big integers travel as decimal strings so no precision is lost.
// Polynomial schema:   {"var":"q","coeffs":["c0","c1",...]}
// Bivariate schema:    {"terms":[{"q":a,"t":b,"c":"..."}, ...]}
// Multivariate schema: {"k":k,"terms":[{"exp":[e1,...,ek],"coeff":{...}}, ...]}

nlohmann::json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const nlohmann::json& j);

nlohmann::json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

nlohmann::json mvpoly_to_json(const MVPoly& p);
MVPoly mvpoly_from_json(const nlohmann::json& j);

nlohmann::json word_to_json(const LukasiewiczWord& w);
nlohmann::json labeled_path_to_json(const LabeledLukasiewiczPath& path);
nlohmann::json dyck_to_json(const LabeledDyckPath& dyck);

nlohmann::json stat_profile_to_json(const StatProfile& sp);
nlohmann::json report_to_json(const MonteCarloReport& report);

}  // namespace parkfn
