#include "sgp/serialize.hpp"

namespace sgp {

std::string_view method_name(Method method) {
  return method == Method::Formula ? "formula" : "search";
}

Json to_json(const NumericalSemigroup& s) {
  Json out;
  out["generators"] = s.generators();
  out["minimal_generators"] = s.minimal_generators();
  out["genus"] = s.genus();
  out["conductor"] = s.conductor();
  out["frobenius"] = s.frobenius();
  out["multiplicity"] = s.multiplicity();
  out["gaps"] = s.gaps();
  return out;
}

Json to_json(const DivisorSet& d) {
  Json out;
  out["targets"] = d.targets;
  out["elements"] = d.elements;
  out["size"] = d.size();
  return out;
}

Json to_json(const Configuration& c) {
  Json out;
  out["m"] = c.m;
  out["elements"] = c.elements;
  out["divisor_count"] = c.divisor_count;
  return out;
}

Json to_json(const FengRaoResult& result) {
  Json out;
  out["m"] = result.m;
  out["r"] = result.r;
  out["value"] = result.value;
  out["witness"] = result.witness.elements;
  out["method"] = method_name(result.method);
  return out;
}

Json to_json(const FengRaoNumber& number) {
  Json out;
  out["r"] = number.r;
  out["value"] = number.value;
  out["method"] = method_name(number.method);
  return out;
}

Json to_json(const BoundTable& table) {
  Json params;
  params["gens"] = table.params.generators;
  params["r"] = table.params.r;
  params["q"] = table.params.q;
  params["n"] = table.params.n ? Json(*table.params.n) : Json(nullptr);
  params["range"] = {table.params.lo, table.params.hi};

  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json j;
    j["m"] = row.m;
    j["k_m"] = row.k_m ? Json(*row.k_m) : Json(nullptr);
    j["gfr"] = row.gfr;
    j["gob"] = row.gob;
    j["winner"] = winner_name(row.winner);
    rows.push_back(std::move(j));
  }

  Json out;
  out["params"] = std::move(params);
  out["rows"] = std::move(rows);
  out["skipped"] = table.skipped;
  return out;
}

}  // namespace sgp
