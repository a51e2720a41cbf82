#pragma once

#include <json.hpp>

#include "qkig/curve_neighborhoods.hpp"
#include "qkig/geometry_oracle.hpp"
#include "qkig/ring_element.hpp"

namespace qkig::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(Pair p);
Json to_json(const RingElement& x);
Json to_json(const Descriptor& d);
Json to_json(const Report& r);

}  // namespace qkig::cli
