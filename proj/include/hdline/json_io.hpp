#ifndef HDLINE_JSON_IO_HPP
#define HDLINE_JSON_IO_HPP

#include <json.hpp>

#include "hdline/line_model.hpp"
#include "hdline/punctured.hpp"
#include "hdline/routing.hpp"
#include "hdline/scheduler.hpp"
#include "hdline/verify.hpp"

// JSON forms of the library's values. Rationals are always "p/q" strings
// (or "p", or "inf"); nothing is converted to floating point.
namespace hdline::json_io {

using nlohmann::json;

json to_json(const ExtRational& value);
ExtRational rational_from_json(const json& j);

// {"links": ["2", "2", "3", "1"]}
json to_json(const LineNetwork& net);
LineNetwork network_from_json(const json& j, bool allow_degenerate = false);

// {"states": [{"s": "010", "w": "1/4"}, ...]}
json to_json(const Schedule& sched);
Schedule schedule_from_json(const json& j);

// Schedule form in group order, each state carrying "colors": [lo, hi].
json to_json(const scheduler::GroupedSchedule& grouped);

// {"rate": "3/4", "bound": "3/4", "optimal": true, "bottleneck": 3}
json to_json(const verify::OptimalityCertificate& cert);
json to_json(const verify::SandwichReport& report);
json to_json(const verify::MinCut& cut);

json to_json(const punctured::PuncturedSet& set);
json to_json(const punctured::LowerBoundCertificate& cert);
json to_json(const punctured::WitnessReport& report);

// {"source": "S", "dest": "D", "edges": [["u", "v", "cap"], ...]}
json to_json(const routing::CapGraph& g);
routing::CapGraph graph_from_json(const json& j);

json to_json(const routing::ReductionArtifacts& artifacts);
json to_json(const routing::ReductionReport& report);

} // namespace hdline::json_io

#endif
