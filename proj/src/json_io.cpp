#include "dio/json_io.hpp"

namespace dio {

using nlohmann::json;

json set_to_json(const SolutionSet3& set, const std::string& case_tag) {
  json j;
  j["case"] = case_tag;
  if (!set.solvable) {
    j["status"] = "empty";
    j["reason"] = {{"divisor", set.reason.divisor}, {"target", set.reason.target}};
    return j;
  }
  j["status"] = "lattice";
  j["base"] = set.base;
  json gens = json::array();
  for (const Vec3& g : set.generators) gens.push_back(g);
  j["generators"] = gens;
  return j;
}

SolutionSet3 set_from_json(const json& j) {
  if (j.at("status") == "empty") {
    const json& r = j.at("reason");
    return SolutionSet3::none(r.at("divisor").get<Int>(), r.at("target").get<Int>());
  }
  Vec3 base = j.at("base").get<Vec3>();
  std::vector<Vec3> gens;
  for (const json& g : j.at("generators")) gens.push_back(g.get<Vec3>());
  return SolutionSet3::lattice(base, std::move(gens));
}

}  // namespace dio
