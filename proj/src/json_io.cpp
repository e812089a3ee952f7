#include "parkfn/json_io.hpp"

namespace parkfn {

using nlohmann::json;

json poly_to_json(const UniPoly& p) {
  json coeffs = json::array();
  for (const Integer& c : p.coeffs()) coeffs.push_back(c.get_str());
  return json{{"var", p.var()}, {"coeffs", coeffs}};
}

UniPoly poly_from_json(const json& j) {
  try {
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return UniPoly(std::move(coeffs), j.value("var", "q"));
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("malformed polynomial JSON: ") + e.what());
  }
}

json bipoly_to_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& [key, c] : p.terms())
    terms.push_back(json{{"q", key.first}, {"t", key.second}, {"c", c.get_str()}});
  return json{{"terms", terms}};
}

BiPoly bipoly_from_json(const json& j) {
  try {
    BiPoly p;
    for (const auto& term : j.at("terms"))
      p.add_term(term.at("q").get<int>(), term.at("t").get<int>(),
                 Integer(term.at("c").get<std::string>()));
    return p;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("malformed bivariate polynomial JSON: ") + e.what());
  }
}

json mvpoly_to_json(const MVPoly& p) {
  json terms = json::array();
  for (const auto& [exps, coeff] : p.terms())
    terms.push_back(json{{"exp", exps}, {"coeff", poly_to_json(coeff)}});
  return json{{"k", p.vars()}, {"terms", terms}};
}

MVPoly mvpoly_from_json(const json& j) {
  try {
    MVPoly p(j.at("k").get<int>());
    for (const auto& term : j.at("terms"))
      p.add(term.at("exp").get<std::vector<int>>(), poly_from_json(term.at("coeff")));
    return p;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("malformed multivariate polynomial JSON: ") + e.what());
  }
}

json word_to_json(const LukasiewiczWord& w) {
  return json{{"word", w.steps()}, {"prime", w.prime()}};
}

json labeled_path_to_json(const LabeledLukasiewiczPath& path) {
  return json{{"word", path.word().steps()}, {"blocks", path.blocks()}};
}

json dyck_to_json(const LabeledDyckPath& dyck) {
  return json{{"word", dyck.word()}, {"labels", dyck.labels()}};
}

json stat_profile_to_json(const StatProfile& sp) {
  json fdiff = json::array();
  for (const auto& set : sp.forward_diff_sets) fdiff.push_back(set);
  return json{{"descents", sp.descent_set},
              {"ascents", sp.ascent_set},
              {"ties", sp.tie_set},
              {"ones", sp.ones_count},
              {"forward_diff_sets", fdiff}};
}

namespace {

json stat_to_json(const MonteCarloStat& stat) {
  json j{{"mean", stat.mean}, {"se", stat.se}};
  if (stat.exact) j["exact"] = stat.exact->get_str();
  return j;
}

}  // namespace

json report_to_json(const MonteCarloReport& report) {
  return json{{"n", report.n},
              {"samples", report.samples},
              {"seed", report.seed},
              {"stats",
               {{"pi1", stat_to_json(report.pi1)},
                {"displacement", stat_to_json(report.displacement)},
                {"ties", stat_to_json(report.ties)},
                {"descents", stat_to_json(report.descents)},
                {"ascents", stat_to_json(report.ascents)}}}};
}

}  // namespace parkfn
