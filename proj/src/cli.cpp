#include "hdline/cli.hpp"

#include <climits>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hdline/dimacs.hpp"
#include "hdline/error.hpp"
#include "hdline/json_io.hpp"
#include "hdline/punctured.hpp"
#include "hdline/routing.hpp"
#include "hdline/scheduler.hpp"
#include "hdline/verify.hpp"

namespace hdline::cli {

namespace {

using json_io::json;

struct Options {
    bool table = false;
    bool approx = false;
    bool force = false;
    int max_exhaustive = verify::kDefaultExhaustiveLimit;

    std::string links;
    std::string links_file;
    std::string gains;
    bool real = false;
    std::uint64_t denominator = scheduler::kDefaultDenominator;
    bool details = false;

    std::string schedule_file;
    bool exhaustive = false;

    int count = 0;
    int low = 1;
    int high = 0;
    int max_span = punctured::kDefaultEnumerationSpan;

    int relays = 0;

    std::string graph_file;
    std::string z;
    int max_vertices = routing::kDefaultVertexLimit;

    std::string dimacs_file;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_json(const std::string& path)
{
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
    }
}

std::vector<double> parse_doubles(const std::string& csv)
{
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "not a number: '" + token + "'");
        }
    }
    return out;
}

struct NetworkInput {
    LineNetwork net;
    std::optional<ExtRational> epsilon;  // set when the links were real-valued
};

NetworkInput load_network(const Options& o)
{
    const int sources = !o.links.empty() + !o.links_file.empty() + !o.gains.empty();
    if (sources != 1) throw CLI::ValidationError("exactly one of --links, --links-file, --gains is required");
    if (!o.gains.empty()) {
        const auto capacities = from_channel_gains(parse_doubles(o.gains));
        auto r = scheduler::rationalize_real(capacities, o.denominator);
        return {std::move(r.net), std::move(r.epsilon)};
    }
    if (o.real) {
        if (o.links.empty()) throw CLI::ValidationError("--real needs --links");
        auto r = scheduler::rationalize_real(parse_doubles(o.links), o.denominator);
        return {std::move(r.net), std::move(r.epsilon)};
    }
    if (!o.links.empty()) return {LineNetwork::parse(o.links), std::nullopt};
    return {json_io::network_from_json(read_json(o.links_file)), std::nullopt};
}

int exhaustive_limit(const Options& o) { return o.force ? 62 : o.max_exhaustive; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void add_approx(json& j, const char* key, const ExtRational& v, const Options& o)
{
    if (o.approx) j[std::string(key) + "_approx"] = v.to_double();
}

// ------------------------------------------------------------------ commands

void cmd_capacity(const Options& o, std::ostream& out)
{
    const auto input = load_network(o);
    const ExtRational capacity = closed_form_capacity(input.net);
    json j = {{"capacity", json_io::to_json(capacity)}};
    add_approx(j, "capacity", capacity, o);
    if (input.epsilon) j["epsilon"] = json_io::to_json(*input.epsilon);
    if (o.details) {
        json fold = json::array();
        for (const auto& m : distributed_capacity_fold(input.net)) fold.push_back(json_io::to_json(m));
        j["fd_capacity"] = json_io::to_json(fd_capacity(input.net));
        j["fold"] = fold;
        j["bottleneck"] = closed_form_bottleneck(input.net);
    }
    if (!o.table) return emit(out, j);
    auto row = [&](const std::string& name, const auto& value) { out << std::left << std::setw(12) << name << value << "\n"; };
    row("capacity", capacity);
    if (input.epsilon) row("epsilon", *input.epsilon);
    if (o.details) {
        row("fd", fd_capacity(input.net));
        row("bottleneck", closed_form_bottleneck(input.net));
        int i = 1;
        for (const auto& m : distributed_capacity_fold(input.net)) row("m_" + std::to_string(i++), m);
    }
}

void cmd_schedule(const Options& o, std::ostream& out)
{
    const auto input = load_network(o);
    const auto grouped = scheduler::build_grouped_schedule(input.net);
    const ExtRational rate = schedule_rate_fundamental(grouped.to_schedule(), input.net);
    if (o.table) {
        out << "colors        state  weight\n";
        for (const auto& g : grouped.groups) {
            std::ostringstream range;
            range << "[" << g.colors.left.get_str() << ":" << g.colors.right.get_str() << "]";
            out << std::left << std::setw(14) << range.str() << std::setw(7) << g.state.to_string() << g.weight
                << "\n";
        }
        out << "rate " << rate << "\n";
        return;
    }
    json j = json_io::to_json(grouped);
    j["rate"] = json_io::to_json(rate);
    add_approx(j, "rate", rate, o);
    if (input.epsilon) j["epsilon"] = json_io::to_json(*input.epsilon);
    emit(out, j);
}

void cmd_verify(const Options& o, std::ostream& out)
{
    if (o.real && o.schedule_file.empty()) {
        if (o.links.empty()) throw CLI::ValidationError("--real verification needs --links");
        const auto report = verify::epsilon_sandwich_check(parse_doubles(o.links), o.denominator);
        if (!o.table) return emit(out, json_io::to_json(report));
        out << "C(q)       " << report.rational_capacity.to_double() << "\n"
            << "rate on l  " << report.schedule_rate.to_double() << "\n"
            << "C(l)       " << report.real_capacity.to_double() << "\n"
            << "epsilon    " << report.epsilon << "\n"
            << "holds      " << (report.all_hold() ? "yes" : "no") << "\n";
        return;
    }
    const auto input = load_network(o);
    const Schedule sched = o.schedule_file.empty() ? scheduler::build_simple_schedule(input.net)
                                                   : json_io::schedule_from_json(read_json(o.schedule_file));
    const auto cert = verify::certify_schedule_optimal(sched, input.net);
    json j = json_io::to_json(cert);
    std::optional<verify::MinCut> exhaustive;
    if (o.exhaustive) {
        exhaustive = verify::min_cut_exhaustive(sched, input.net, exhaustive_limit(o));
        j["min_cut"] = json_io::to_json(*exhaustive);
    }
    if (!o.table) return emit(out, j);
    out << "rate        " << cert.rate << "\n"
        << "bound       " << cert.bound << "\n"
        << "optimal     " << (cert.optimal ? "yes" : "no") << "\n"
        << "bottleneck  " << cert.bottleneck << "\n";
    if (exhaustive) out << "min cut     " << exhaustive->value << " at " << exhaustive->cut.to_string() << "\n";
}

void cmd_punctured(const Options& o, std::ostream& out)
{
    if (o.count > 0) {
        const mpz_class t = punctured::count_primitive_recurrence(o.count);
        json j;
        j["T"] = t.fits_slong_p() ? json(t.get_si()) : json(t.get_str());
        if (!o.table) return emit(out, j);
        out << "T(" << o.count << ") = " << t.get_str() << "\n";
        return;
    }
    if (o.high < o.low) throw CLI::ValidationError("give --count n, or --high (and optionally --low)");
    const auto sets = punctured::enumerate_primitive(o.low, o.high, o.force ? INT_MAX : o.max_span);
    if (o.table) {
        for (const auto& s : sets) {
            out << "{";
            for (std::size_t k = 0; k < s.elements().size(); ++k) out << (k ? "," : "") << s.elements()[k];
            out << "}\n";
        }
        out << "count " << sets.size() << "\n";
        return;
    }
    json list = json::array();
    for (const auto& s : sets) list.push_back(json_io::to_json(s));
    emit(out, {{"low", o.low}, {"high", o.high}, {"count", sets.size()}, {"sets", list}});
}

void cmd_lower_bound(const Options& o, std::ostream& out)
{
    const auto cert = punctured::lower_bound_certificate(o.relays, o.force ? INT_MAX : o.max_span);
    if (!o.table) return emit(out, json_io::to_json(cert));
    out << "N                 " << cert.relay_count << "\n"
        << "|P(1,N+1)|        " << cert.enumerated.get_str() << "\n"
        << "T(N+1)            " << cert.recurrence.get_str() << "\n"
        << "2^((N+1)/3)/2     " << cert.bound << "\n"
        << "bound holds       " << (cert.bound_holds ? "yes" : "no") << "\n";
}

void cmd_route(const Options& o, std::ostream& out)
{
    const auto g = json_io::graph_from_json(read_json(o.graph_file));
    const int limit = o.force ? INT_MAX : o.max_vertices;
    const auto best = routing::best_hd_path(g, limit);
    json j;
    if (best) {
        json path = json::array();
        for (int v : best->path) path.push_back(g.label(v));
        j = {{"capacity", json_io::to_json(best->capacity)}, {"path", path}};
        add_approx(j, "capacity", best->capacity, o);
    } else {
        j = {{"capacity", nullptr}, {"path", nullptr}};
    }
    if (!o.z.empty()) j["decision"] = routing::hd_path_decision(g, ExtRational::parse(o.z), limit);
    if (!o.table) return emit(out, j);
    if (!best) {
        out << "no path\n";
    } else {
        out << "capacity " << best->capacity << "\npath    ";
        for (int v : best->path) out << " " << g.label(v);
        out << "\n";
    }
    if (!o.z.empty()) out << "decision " << (j["decision"].get<bool>() ? "yes" : "no") << "\n";
}

routing::Cnf load_cnf(const Options& o) { return dimacs::parse(read_file(o.dimacs_file)); }

ExtRational z_or_one(const Options& o) { return o.z.empty() ? ExtRational(1) : ExtRational::parse(o.z); }

void cmd_reduce(const Options& o, std::ostream& out)
{
    const auto artifacts = routing::reduce_3sat(load_cnf(o), z_or_one(o));
    if (!o.table) return emit(out, json_io::to_json(artifacts));
    auto row = [&](const char* name, const routing::CapGraph& g) {
        out << std::left << std::setw(12) << name << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges\n";
    };
    row("G_B", artifacts.g_b);
    row("G_B*", artifacts.g_b_star);
    row("G_B.", artifacts.g_b_bullet);
    out << "forbidden  ";
    for (const auto& [a, b] : artifacts.forbidden) out << " (" << a << "," << b << ")";
    out << "\n";
}

void cmd_check_reduction(const Options& o, std::ostream& out)
{
    const auto report = routing::verify_reduction(load_cnf(o), z_or_one(o));
    if (!o.table) return emit(out, json_io::to_json(report));
    out << "satisfiable     " << (report.satisfiable ? "yes" : "no") << "\n"
        << "path >= Z       " << (report.path_exists ? "yes" : "no") << "\n"
        << "agree           " << (report.agree ? "yes" : "no") << "\n"
        << "accepted paths  " << report.accepted_paths << "\n";
}

void add_network_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--links", o.links, "Comma-separated link capacities (p, p/q or inf)");
    cmd->add_option("--links-file", o.links_file, "LineNetwork JSON file");
    cmd->add_option("--gains", o.gains, "Comma-separated channel gain magnitudes |h_i|");
    cmd->add_flag("--real", o.real, "Treat --links as real numbers and rationalize them");
    cmd->add_option("--denominator", o.denominator, "Rationalization denominator D (epsilon = 1/D)")
        ->check(CLI::PositiveNumber);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Half-duplex line network capacity, schedules and certificates", "hdline"};
    app.require_subcommand(1, 1);
    Options o;
    auto* table = app.add_flag("--table", o.table, "Human-readable table instead of JSON");
    app.add_flag("--json", "JSON output (the default)")->excludes(table);
    app.add_flag("--approx", o.approx, "Also print floating-point approximations");
    app.add_flag("--force", o.force, "Lift the limits on exponential searches");
    app.add_option("--max-exhaustive", o.max_exhaustive, "Largest N for exhaustive cut search")
        ->check(CLI::NonNegativeNumber);

    auto* capacity = app.add_subcommand("capacity", "Closed-form approximate capacity");
    add_network_flags(capacity, o);
    capacity->add_flag("--details", o.details, "Also print FD capacity, fold and bottleneck");

    auto* schedule = app.add_subcommand("schedule", "Optimal simple schedule by colour grouping");
    add_network_flags(schedule, o);

    auto* verify = app.add_subcommand("verify", "Certify a schedule (or the epsilon sandwich with --real)");
    add_network_flags(verify, o);
    verify->add_option("--schedule-file", o.schedule_file, "Schedule JSON; defaults to the built schedule");
    verify->add_flag("--exhaustive", o.exhaustive, "Also minimise over all 2^N cuts");

    auto* punct = app.add_subcommand("punctured", "Primitive punctured subsets and their count");
    punct->add_option("--count", o.count, "Print T(n)")->check(CLI::PositiveNumber);
    punct->add_option("--low", o.low, "Range start");
    punct->add_option("--high", o.high, "Range end");
    punct->add_option("--max-span", o.max_span, "Largest high-low to enumerate");

    auto* lower = app.add_subcommand("lower-bound", "Search-space lower bound certificate");
    lower->add_option("-N,--relays", o.relays, "Relay count N")->required()->check(CLI::PositiveNumber);
    lower->add_option("--max-span", o.max_span, "Largest N+1 to enumerate");

    auto* route = app.add_subcommand("route", "Best half-duplex S-D path in a graph");
    route->add_option("--graph", o.graph_file, "Graph JSON file")->required();
    route->add_option("--z", o.z, "Also decide whether some path reaches Z");
    route->add_option("--max-vertices", o.max_vertices, "Vertex limit for the exact search");

    auto* reduce = app.add_subcommand("reduce-3sat", "Build the 3SAT -> HD-Path reduction graphs");
    reduce->add_option("--dimacs", o.dimacs_file, "CNF in DIMACS format")->required();
    reduce->add_option("--z", o.z, "Capacity Z (default 1)");

    auto* check = app.add_subcommand("check-reduction", "Compare truth-table SAT with the HD-Path decision");
    check->add_option("--dimacs", o.dimacs_file, "CNF in DIMACS format")->required();
    check->add_option("--z", o.z, "Capacity Z (default 1)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (capacity->parsed()) cmd_capacity(o, out);
        else if (schedule->parsed()) cmd_schedule(o, out);
        else if (verify->parsed()) cmd_verify(o, out);
        else if (punct->parsed()) cmd_punctured(o, out);
        else if (lower->parsed()) cmd_lower_bound(o, out);
        else if (route->parsed()) cmd_route(o, out);
        else if (reduce->parsed()) cmd_reduce(o, out);
        else if (check->parsed()) cmd_check_reduction(o, out);
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}

} // namespace hdline::cli
