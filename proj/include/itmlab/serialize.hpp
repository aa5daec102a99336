#ifndef ITMLAB_SERIALIZE_HPP
#define ITMLAB_SERIALIZE_HPP

#include <json.hpp>

#include "itmlab/dimension.hpp"
#include "itmlab/ergodicity.hpp"
#include "itmlab/gauss.hpp"
#include "itmlab/itm.hpp"
#include "itmlab/substitution.hpp"

namespace itmlab {

using nlohmann::json;

json to_json(const Scalar& s);
json to_json(const KSequence& ks);
json to_json(const Classification& c);
json to_json(const AttractorReport& r);
json to_json(const Orbit& o);
json to_json(const DimensionReport& r);
json to_json(const Hd0Result& r);
json to_json(const UEReport& r);
json to_json(const AbelianProduct& p);

std::string dimension_csv(const DimensionReport& r);
std::string diameters_csv(const std::vector<double>& d);

}  // namespace itmlab

#endif
