#include "hdline/json_io.hpp"

#include "hdline/error.hpp"

namespace hdline::json_io {

namespace {

json integer_json(const mpz_class& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

const json& field(const json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

json pairs_json(const std::vector<routing::LabelPair>& pairs)
{
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

json assignment_json(const std::vector<bool>& assignment)
{
    json out = json::array();
    for (bool b : assignment) out.push_back(b);
    return out;
}

} // namespace

json to_json(const ExtRational& value) { return value.to_string(); }

ExtRational rational_from_json(const json& j)
{
    if (j.is_string()) return ExtRational::parse(j.get<std::string>());
    if (j.is_number_unsigned()) return ExtRational(static_cast<std::int64_t>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return ExtRational(j.get<std::int64_t>());
    throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

json to_json(const LineNetwork& net)
{
    json links = json::array();
    for (const auto& l : net.links()) links.push_back(to_json(l));
    return {{"links", links}};
}

LineNetwork network_from_json(const json& j, bool allow_degenerate)
{
    const json& links = field(j, "links");
    if (!links.is_array()) throw Error(ErrorCode::ParseError, "'links' must be an array");
    std::vector<ExtRational> values;
    for (const auto& l : links) values.push_back(rational_from_json(l));
    return LineNetwork(std::move(values), allow_degenerate);
}

json to_json(const Schedule& sched)
{
    json states = json::array();
    for (const auto& [state, weight] : sched.entries()) {
        states.push_back({{"s", state.to_string()}, {"w", to_json(weight)}});
    }
    return {{"states", states}};
}

Schedule schedule_from_json(const json& j)
{
    const json& states = field(j, "states");
    if (!states.is_array()) throw Error(ErrorCode::ParseError, "'states' must be an array");
    std::vector<std::pair<State, ExtRational>> entries;
    for (const auto& entry : states) {
        const json& s = field(entry, "s");
        if (!s.is_string()) throw Error(ErrorCode::ParseError, "state 's' must be a string");
        entries.emplace_back(State(s.get<std::string>()), rational_from_json(field(entry, "w")));
    }
    return Schedule(entries);
}

json to_json(const scheduler::GroupedSchedule& grouped)
{
    json states = json::array();
    for (const auto& g : grouped.groups) {
        states.push_back({{"s", g.state.to_string()},
                          {"w", to_json(g.weight)},
                          {"colors", {integer_json(g.colors.left), integer_json(g.colors.right)}}});
    }
    return {{"states", states}};
}

json to_json(const verify::OptimalityCertificate& cert)
{
    return {{"rate", to_json(cert.rate)},
            {"bound", to_json(cert.bound)},
            {"optimal", cert.optimal},
            {"bottleneck", cert.bottleneck}};
}

json to_json(const verify::SandwichReport& report)
{
    return {{"epsilon", to_json(report.epsilon)},
            {"rational_capacity", to_json(report.rational_capacity)},
            {"schedule_rate", to_json(report.schedule_rate)},
            {"real_capacity", to_json(report.real_capacity)},
            {"lower_holds", report.lower_holds},
            {"middle_holds", report.middle_holds},
            {"upper_holds", report.upper_holds},
            {"rationalization_holds", report.rationalization_holds},
            {"all_hold", report.all_hold()}};
}

json to_json(const verify::MinCut& cut)
{
    return {{"value", to_json(cut.value)}, {"cut", cut.cut.members()}};
}

json to_json(const punctured::PuncturedSet& set) { return set.elements(); }

json to_json(const punctured::LowerBoundCertificate& cert)
{
    return {{"N", cert.relay_count},
            {"enumerated", integer_json(cert.enumerated)},
            {"recurrence", integer_json(cert.recurrence)},
            {"counts_agree", cert.counts_agree},
            {"bound", cert.bound},
            {"bound_holds", cert.bound_holds},
            {"growth_ratio", cert.growth_ratio}};
}

json to_json(const punctured::WitnessReport& report)
{
    json optimal = json::array();
    for (const auto& s : report.optimal_states) optimal.push_back(s.to_string());
    return {{"fd_capacity", to_json(report.fd_capacity)},
            {"target", report.target.to_string()},
            {"target_rate", to_json(report.target_rate)},
            {"optimal_states", optimal},
            {"target_reaches_fd", report.target_reaches_fd},
            {"unique_up_to_activation", report.unique_up_to_activation},
            {"target_unique", report.target_unique}};
}

json to_json(const routing::CapGraph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({g.label(e.from), g.label(e.to), to_json(e.capacity)});
    return {{"source", g.label(g.source())}, {"dest", g.label(g.destination())}, {"edges", edges}};
}

routing::CapGraph graph_from_json(const json& j)
{
    const json& source = field(j, "source");
    const json& dest = field(j, "dest");
    const json& edges = field(j, "edges");
    if (!source.is_string() || !dest.is_string() || !edges.is_array()) {
        throw Error(ErrorCode::ParseError, "graph needs string 'source', 'dest' and an 'edges' array");
    }
    const auto s = source.get<std::string>();
    const auto d = dest.get<std::string>();
    if (s == d) throw Error(ErrorCode::ParseError, "source and destination must differ");

    routing::CapGraph g;
    g.add_vertex(s, routing::VertexRole::Source);
    g.add_vertex(d, routing::VertexRole::Destination);
    auto vertex = [&](const json& label) {
        if (!label.is_string()) throw Error(ErrorCode::ParseError, "edge endpoints must be strings");
        const auto name = label.get<std::string>();
        if (auto v = g.find(name)) return *v;
        return g.add_vertex(name);
    };
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::ParseError, "edge must be [u, v, cap]");
        const int u = vertex(e[0]);
        const int v = vertex(e[1]);
        g.add_edge(u, v, rational_from_json(e[2]));
    }
    return g;
}

json to_json(const routing::ReductionArtifacts& artifacts)
{
    return {{"z", to_json(artifacts.z)},
            {"g_b", to_json(artifacts.g_b)},
            {"forbidden", pairs_json(artifacts.forbidden)},
            {"g_b_star", to_json(artifacts.g_b_star)},
            {"forbidden_star", pairs_json(artifacts.forbidden_star)},
            {"g_b_bullet", to_json(artifacts.g_b_bullet)}};
}

json to_json(const routing::ReductionReport& report)
{
    json out = {{"satisfiable", report.satisfiable},
                {"path_exists", report.path_exists},
                {"agree", report.agree},
                {"accepted_paths", report.accepted_paths},
                {"rules_hold", report.rules_hold},
                {"assignments_valid", report.assignments_valid}};
    out["witness_path"] = report.witness_path.empty() ? json(nullptr) : json(report.witness_path);
    out["witness_assignment"] =
        report.witness_assignment ? assignment_json(*report.witness_assignment) : json(nullptr);
    return out;
}

} // namespace hdline::json_io
