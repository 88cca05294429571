#pragma once

#include <json.hpp>

#include "sgp/bounds.hpp"
#include "sgp/divisors.hpp"
#include "sgp/fengrao.hpp"
#include "sgp/semigroup.hpp"

namespace sgp {

using Json = nlohmann::ordered_json;

std::string_view method_name(Method method);

Json to_json(const NumericalSemigroup& s);
Json to_json(const DivisorSet& d);
Json to_json(const Configuration& c);
Json to_json(const FengRaoResult& result);
Json to_json(const FengRaoNumber& number);
Json to_json(const BoundTable& table);

}  // namespace sgp
