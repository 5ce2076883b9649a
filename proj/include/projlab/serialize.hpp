#pragma once

#include <string>

#include <json.hpp>

#include "projlab/harness.hpp"
#include "projlab/limits.hpp"
#include "projlab/rate.hpp"
#include "projlab/tracial.hpp"

namespace projlab {

using Json = nlohmann::json;

// shortest round-trip decimal form
std::string format_double(double v);

Json measure_to_json(const SpectralMeasure& m);
SpectralMeasure measure_from_json(const Json& j);

Json state_to_json(const TracialState& tau);
TracialState state_from_json(const Json& j);

// {atoms, support, grid, density_values, continuous_mass, circular};
// grid_points are distributed over the support proportionally to length.
Json law_to_json(const LimitLaw& law, int grid_points);

Json report_to_json(const VerificationReport& r);

// a JSON number, or the literals "+inf" / "-inf"
Json ext_real_to_json(const ExtReal& v);

}  // namespace projlab
