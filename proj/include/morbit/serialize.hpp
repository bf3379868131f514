#pragma once

#include <json.hpp>

#include "morbit/decomp.hpp"
#include "morbit/periodic.hpp"
#include "morbit/random.hpp"
#include "morbit/shadowing.hpp"

namespace morbit {

using Json = nlohmann::ordered_json;

// Number mode for parsing: exact keeps "p/q" strings as rationals and
// promotes JSON numbers that are whole or dyadic to exact values; float
// coerces everything to binary64.
enum class NumberMode { kExact, kFloat };

Num parse_num(const Json& j, NumberMode mode);
Json num_to_json(const Num& n);

Point parse_point(const Json& j, NumberMode mode, Rng* rng = nullptr);
Json point_to_json(const Point& p);

System parse_system(const Json& j, NumberMode mode);
Json system_to_json(const System& s);

DiscreteMeasure parse_measure(const Json& j, NumberMode mode, Rng* rng = nullptr);
Json measure_to_json(const DiscreteMeasure& m);

Json plan_to_json(const TransportPlan& plan);

BlockSchedule parse_schedule(const System& s, const Json& j, NumberMode mode,
                             Rng* rng = nullptr);

PeriodicDecomposition parse_decomposition(const Json& j);
Json decomposition_to_json(const PeriodicDecomposition& d);

Json periodic_orbit_to_json(const PeriodicOrbit& orbit);
Json density_result_to_json(const DensityResult& r);
Json closable_result_to_json(const ClosableResult& r);
Json linkable_result_to_json(const LinkableResult& r);
Json vset_to_json(const MeasureLimitSetEstimate& est);

}  // namespace morbit
