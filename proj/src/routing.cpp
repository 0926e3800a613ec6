#include "hdline/routing.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "hdline/error.hpp"

namespace hdline::routing {

// ------------------------------------------------------------------ CapGraph

int CapGraph::add_vertex(std::string label, VertexRole role)
{
    if (index_.contains(label)) throw Error(ErrorCode::InvalidArgument, "duplicate vertex label '" + label + "'");
    if (role == VertexRole::Source || role == VertexRole::Destination) {
        for (auto r : roles_) {
            if (r == role) throw Error(ErrorCode::InvalidArgument, "graph already has a source/destination");
        }
    }
    const int id = vertex_count();
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    roles_.push_back(role);
    out_.emplace_back();
    return id;
}

void CapGraph::add_edge(int from, int to, ExtRational capacity)
{
    if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count()) {
        throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (capacity.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "edge " + label(from) + "->" + label(to) + " has zero capacity");
    }
    out_[static_cast<std::size_t>(from)].push_back(edge_count());
    edges_.push_back({from, to, std::move(capacity)});
}

void CapGraph::add_edge(std::string_view from, std::string_view to, ExtRational capacity)
{
    add_edge(id(from), id(to), std::move(capacity));
}

std::optional<int> CapGraph::find(std::string_view label) const
{
    const auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int CapGraph::id(std::string_view label) const
{
    const auto v = find(label);
    if (!v) throw Error(ErrorCode::InvalidArgument, "unknown vertex '" + std::string(label) + "'");
    return *v;
}

int CapGraph::source() const
{
    for (int v = 0; v < vertex_count(); ++v) {
        if (role(v) == VertexRole::Source) return v;
    }
    throw Error(ErrorCode::InvalidArgument, "graph has no source");
}

int CapGraph::destination() const
{
    for (int v = 0; v < vertex_count(); ++v) {
        if (role(v) == VertexRole::Destination) return v;
    }
    throw Error(ErrorCode::InvalidArgument, "graph has no destination");
}

std::optional<ExtRational> CapGraph::capacity(int from, int to) const
{
    std::optional<ExtRational> best;
    for (int e : out_edges(from)) {
        const Edge& edge = edges_[static_cast<std::size_t>(e)];
        if (edge.to == to && (!best || *best < edge.capacity)) best = edge.capacity;
    }
    return best;
}

// ------------------------------------------------------------ path capacity

ExtRational path_hd_capacity(std::span<const int> path, const CapGraph& g)
{
    if (path.size() < 2) throw Error(ErrorCode::InvalidArgument, "a path needs at least two vertices");
    std::set<int> seen;
    std::vector<ExtRational> caps;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (!seen.insert(path[k]).second) {
            throw Error(ErrorCode::RepeatedVertex, "vertex " + g.label(path[k]) + " repeats");
        }
        if (k + 1 < path.size()) {
            auto c = g.capacity(path[k], path[k + 1]);
            if (!c) throw Error(ErrorCode::MissingEdge, "no edge " + g.label(path[k]) + "->" + g.label(path[k + 1]));
            caps.push_back(std::move(*c));
        }
    }
    if (caps.size() == 1) return caps.front();
    ExtRational out = ExtRational::infinity();
    for (std::size_t k = 0; k + 1 < caps.size(); ++k) out = min(out, harmonic_half(caps[k], caps[k + 1]));
    return out;
}

ExtRational path_hd_capacity(const std::vector<std::string>& labels, const CapGraph& g)
{
    std::vector<int> ids;
    ids.reserve(labels.size());
    for (const auto& l : labels) ids.push_back(g.id(l));
    return path_hd_capacity(ids, g);
}

// ---------------------------------------------------------------- DFS search

namespace {

struct Hop {
    int to;
    ExtRational capacity;
};

// Neighbours sorted by label; parallel edges collapse to their best capacity.
std::vector<std::vector<Hop>> sorted_adjacency(const CapGraph& g)
{
    std::vector<std::vector<Hop>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::map<std::string, Hop> by_label;
        for (int e : g.out_edges(u)) {
            const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
            auto [it, inserted] = by_label.try_emplace(g.label(edge.to), Hop{edge.to, edge.capacity});
            if (!inserted && it->second.capacity < edge.capacity) it->second.capacity = edge.capacity;
        }
        for (auto& [label, hop] : by_label) adj[static_cast<std::size_t>(u)].push_back(std::move(hop));
    }
    return adj;
}

void check_size(const CapGraph& g, int max_vertices)
{
    if (g.vertex_count() > max_vertices) {
        throw Error(ErrorCode::CapacityLimit, "graph has " + std::to_string(g.vertex_count()) +
                                                  " vertices, search limit is " + std::to_string(max_vertices));
    }
}

// Depth-first walk over simple source-destination paths. `keep_going(value)`
// receives each completed path; `threshold()` gives the current pruning level.
class PathWalker {
public:
    PathWalker(const CapGraph& g) : g_(g), adj_(sorted_adjacency(g)), on_path_(g.vertex_count(), false) {}

    template <class Threshold, class OnPath>
    void run(Threshold threshold, OnPath on_path)
    {
        const int s = g_.source();
        dest_ = g_.destination();
        path_.assign(1, s);
        on_path_[static_cast<std::size_t>(s)] = true;
        stop_ = false;
        walk(s, ExtRational::infinity(), ExtRational::infinity(), threshold, on_path);
        on_path_[static_cast<std::size_t>(s)] = false;
    }

    const std::vector<int>& path() const { return path_; }

private:
    template <class Threshold, class OnPath>
    void walk(int u, const ExtRational& incoming, const ExtRational& running, Threshold& threshold, OnPath& on_path)
    {
        const bool interior = path_.size() > 1;
        for (const Hop& hop : adj_[static_cast<std::size_t>(u)]) {
            if (stop_) return;
            if (on_path_[static_cast<std::size_t>(hop.to)]) continue;
            const ExtRational next = interior ? min(running, harmonic_half(incoming, hop.capacity)) : running;
            if (hop.to == dest_) {
                const ExtRational value = interior ? next : hop.capacity;
                path_.push_back(hop.to);
                if (!on_path(value, path_)) stop_ = true;
                path_.pop_back();
                continue;
            }
            const auto limit = threshold();
            if (limit && next < *limit) continue;
            path_.push_back(hop.to);
            on_path_[static_cast<std::size_t>(hop.to)] = true;
            walk(hop.to, hop.capacity, next, threshold, on_path);
            on_path_[static_cast<std::size_t>(hop.to)] = false;
            path_.pop_back();
        }
    }

    const CapGraph& g_;
    std::vector<std::vector<Hop>> adj_;
    std::vector<bool> on_path_;
    std::vector<int> path_;
    int dest_ = -1;
    bool stop_ = false;
};

} // namespace

std::optional<PathResult> best_hd_path(const CapGraph& g, int max_vertices)
{
    check_size(g, max_vertices);
    std::optional<PathResult> best;
    PathWalker walker(g);
    walker.run(
        [&]() -> std::optional<ExtRational> {
            if (best) return best->capacity;
            return std::nullopt;
        },
        [&](const ExtRational& value, const std::vector<int>& path) {
            if (!best || best->capacity < value) best = PathResult{value, path};
            return true;
        });
    return best;
}

std::size_t for_each_path_at_least(const CapGraph& g, const ExtRational& z,
                                   const std::function<bool(const std::vector<int>&)>& visit)
{
    std::size_t count = 0;
    PathWalker walker(g);
    walker.run([&]() -> std::optional<ExtRational> { return z; },
               [&](const ExtRational& value, const std::vector<int>& path) {
                   if (value < z) return true;
                   ++count;
                   return visit(path);
               });
    return count;
}

bool hd_path_decision(const CapGraph& g, const ExtRational& z, int max_vertices)
{
    check_size(g, max_vertices);
    return for_each_path_at_least(g, z, [](const std::vector<int>&) { return false; }) > 0;
}

// ---------------------------------------------------------------------- CNF

void Cnf::validate() const
{
    if (num_vars < 1) throw Error(ErrorCode::InvalidCnf, "formula needs at least one variable");
    if (clauses.empty()) throw Error(ErrorCode::InvalidCnf, "formula has no clauses");
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        const auto& c = clauses[i];
        if (c.empty() || c.size() > 3) {
            throw Error(ErrorCode::InvalidCnf, "clause " + std::to_string(i + 1) + " has " +
                                                   std::to_string(c.size()) + " literals; expected 1 to 3");
        }
        for (const auto& lit : c) {
            if (lit.var < 1 || lit.var > num_vars) {
                throw Error(ErrorCode::InvalidCnf, "variable " + std::to_string(lit.var) + " out of range");
            }
        }
    }
}

bool Cnf::evaluate(const std::vector<bool>& assignment) const
{
    return std::all_of(clauses.begin(), clauses.end(), [&](const auto& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](const Literal& lit) {
            return assignment.at(static_cast<std::size_t>(lit.var - 1)) != lit.negated;
        });
    });
}

std::optional<std::vector<bool>> brute_force_sat(const Cnf& cnf)
{
    cnf.validate();
    if (cnf.num_vars > 30) throw Error(ErrorCode::CapacityLimit, "truth table over more than 30 variables");
    std::vector<bool> assignment(static_cast<std::size_t>(cnf.num_vars));
    const std::uint64_t count = std::uint64_t{1} << cnf.num_vars;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (int v = 0; v < cnf.num_vars; ++v) assignment[static_cast<std::size_t>(v)] = (mask >> v) & 1U;
        if (cnf.evaluate(assignment)) return assignment;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- labels

std::string literal_label(LiteralRef lit)
{
    return "v" + std::to_string(lit.clause) + std::to_string(lit.position);
}

namespace {

std::string index_of(LiteralRef lit) { return std::to_string(lit.clause) + std::to_string(lit.position); }

std::optional<LiteralRef> parse_index(std::string_view digits)
{
    if (digits.size() < 2) return std::nullopt;
    for (char c : digits) {
        if (c < '0' || c > '9') return std::nullopt;
    }
    // The literal position is a single digit (at most three literals per clause).
    const int position = digits.back() - '0';
    const int clause = std::stoi(std::string(digits.substr(0, digits.size() - 1)));
    return LiteralRef{clause, position};
}

} // namespace

std::string copy_label(char prefix, LiteralRef lit, LiteralRef partner)
{
    return std::string(1, prefix) + "_" + index_of(lit) + "_" + index_of(partner);
}

std::string merged_label(LiteralRef first, LiteralRef second) { return copy_label('f', first, second); }

std::optional<LiteralRef> literal_of_label(std::string_view label)
{
    if (label.empty()) return std::nullopt;
    const char prefix = label.front();
    if (prefix == 'v' && label.size() > 1 && label[1] != '_') return parse_index(label.substr(1));
    if ((prefix == 'v' || prefix == 'a' || prefix == 'b') && label.size() > 2 && label[1] == '_') {
        const auto rest = label.substr(2);
        return parse_index(rest.substr(0, rest.find('_')));
    }
    return std::nullopt;
}

// -------------------------------------------------------------- reduction

GadgetChain build_gadget_chain(const Cnf& cnf)
{
    cnf.validate();
    GadgetChain out;
    CapGraph& g = out.graph;
    const auto inf = ExtRational::infinity();
    const int m = static_cast<int>(cnf.clauses.size());

    g.add_vertex("S", VertexRole::Source);
    for (int i = 1; i <= m; ++i) {
        const auto& clause = cnf.clauses[static_cast<std::size_t>(i - 1)];
        const int t = g.add_vertex("t" + std::to_string(i), VertexRole::ClauseEntry);
        std::vector<int> literals;
        for (int j = 1; j <= static_cast<int>(clause.size()); ++j) {
            literals.push_back(g.add_vertex(literal_label({i, j}), VertexRole::Literal));
        }
        const int r = g.add_vertex("r" + std::to_string(i), VertexRole::ClauseExit);
        for (int v : literals) {
            g.add_edge(t, v, inf);
            g.add_edge(v, r, inf);
        }
        if (i == 1) {
            g.add_edge(g.id("S"), t, inf);
        } else {
            g.add_edge(g.id("r" + std::to_string(i - 1)), t, inf);
        }
    }
    const int d = g.add_vertex("D", VertexRole::Destination);
    g.add_edge(g.id("r" + std::to_string(m)), d, inf);

    for (int i = 1; i <= m; ++i) {
        const auto& ci = cnf.clauses[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= static_cast<int>(ci.size()); ++j) {
            for (int k = i + 1; k <= m; ++k) {
                const auto& ck = cnf.clauses[static_cast<std::size_t>(k - 1)];
                for (int l = 1; l <= static_cast<int>(ck.size()); ++l) {
                    const Literal& p = ci[static_cast<std::size_t>(j - 1)];
                    const Literal& q = ck[static_cast<std::size_t>(l - 1)];
                    if (p.var == q.var && p.negated != q.negated) out.forbidden.push_back({{i, j}, {k, l}});
                }
            }
        }
    }
    return out;
}

ExpandedGraph expand_forbidden(const GadgetChain& chain)
{
    const CapGraph& in = chain.graph;
    const auto inf = ExtRational::infinity();

    std::map<LiteralRef, std::vector<LiteralRef>> partners;
    for (const auto& [p, q] : chain.forbidden) {
        partners[p].push_back(q);
        partners[q].push_back(p);
    }
    for (auto& [lit, list] : partners) std::sort(list.begin(), list.end());

    ExpandedGraph out;
    CapGraph& g = out.graph;
    // Replaced vertex -> (entry, exit) in the new graph.
    std::vector<std::pair<int, int>> ends(static_cast<std::size_t>(in.vertex_count()));
    for (int v = 0; v < in.vertex_count(); ++v) {
        const auto lit = in.role(v) == VertexRole::Literal ? literal_of_label(in.label(v)) : std::nullopt;
        const auto it = lit ? partners.find(*lit) : partners.end();
        if (it == partners.end()) {
            const int id = g.add_vertex(in.label(v), in.role(v));
            ends[static_cast<std::size_t>(v)] = {id, id};
            continue;
        }
        int entry = -1;
        int previous = -1;
        for (const LiteralRef& partner : it->second) {
            const int a = g.add_vertex(copy_label('a', *lit, partner), VertexRole::AType);
            const int c = g.add_vertex(copy_label('v', *lit, partner), VertexRole::Literal);
            const int b = g.add_vertex(copy_label('b', *lit, partner), VertexRole::BType);
            g.add_edge(a, c, inf);
            g.add_edge(c, b, inf);
            if (previous >= 0) g.add_edge(previous, a, inf);
            if (entry < 0) entry = a;
            previous = b;
        }
        ends[static_cast<std::size_t>(v)] = {entry, previous};
    }
    for (const Edge& e : in.edges()) {
        g.add_edge(ends[static_cast<std::size_t>(e.from)].second, ends[static_cast<std::size_t>(e.to)].first,
                   e.capacity);
    }
    for (const auto& [p, q] : chain.forbidden) {
        out.forbidden.emplace_back(copy_label('v', p, q), copy_label('v', q, p));
    }
    return out;
}

CapGraph merge_and_capacitate(const ExpandedGraph& expanded, const ExtRational& z)
{
    if (z.is_infinite() || z.is_zero()) throw Error(ErrorCode::InvalidArgument, "Z must be finite and positive");
    const CapGraph& in = expanded.graph;
    const auto inf = ExtRational::infinity();

    CapGraph g;
    std::vector<int> image(static_cast<std::size_t>(in.vertex_count()), -1);
    std::map<int, std::size_t> pair_of;  // old vertex -> forbidden pair index
    for (std::size_t k = 0; k < expanded.forbidden.size(); ++k) {
        pair_of[in.id(expanded.forbidden[k].first)] = k;
        pair_of[in.id(expanded.forbidden[k].second)] = k;
    }
    std::vector<int> merged(expanded.forbidden.size(), -1);
    for (int v = 0; v < in.vertex_count(); ++v) {
        const auto it = pair_of.find(v);
        if (it == pair_of.end()) {
            image[static_cast<std::size_t>(v)] = g.add_vertex(in.label(v), in.role(v));
            continue;
        }
        int& f = merged[it->second];
        if (f < 0) {
            const auto& [first, second] = expanded.forbidden[it->second];
            const auto p = literal_of_label(first);
            const auto q = literal_of_label(second);
            f = g.add_vertex(merged_label(*p, *q), VertexRole::FType);
        }
        image[static_cast<std::size_t>(v)] = f;
    }

    // Around f_{ij,kl}: a_{ij,kl} -> f and f -> b_{kl,ij} carry Z, the crossing pair carries inf.
    std::set<std::pair<std::string, std::string>> z_edges;
    for (const auto& [first, second] : expanded.forbidden) {
        const auto p = *literal_of_label(first);
        const auto q = *literal_of_label(second);
        const std::string f = merged_label(p, q);
        z_edges.emplace(copy_label('a', p, q), f);
        z_edges.emplace(f, copy_label('b', q, p));
    }
    for (const Edge& e : in.edges()) {
        const int from = image[static_cast<std::size_t>(e.from)];
        const int to = image[static_cast<std::size_t>(e.to)];
        const bool is_z = z_edges.contains({g.label(from), g.label(to)});
        g.add_edge(from, to, is_z ? z : inf);
    }
    return g;
}

std::size_t vertex_bound(std::size_t clauses, std::size_t literals)
{
    return 2 + 2 * clauses + literals + 3 * literals * literals;
}

std::size_t edge_bound(std::size_t clauses, std::size_t literals)
{
    return 1 + clauses + 2 * literals + 3 * literals * literals;
}

ReductionArtifacts reduce_3sat(const Cnf& cnf, const ExtRational& z)
{
    GadgetChain chain = build_gadget_chain(cnf);
    ExpandedGraph expanded = expand_forbidden(chain);
    CapGraph bullet = merge_and_capacitate(expanded, z);

    std::size_t literals = 0;
    for (const auto& c : cnf.clauses) literals += c.size();
    const std::size_t m = cnf.clauses.size();
    for (const CapGraph* g : {&chain.graph, &expanded.graph, &bullet}) {
        if (static_cast<std::size_t>(g->vertex_count()) > vertex_bound(m, literals) ||
            static_cast<std::size_t>(g->edge_count()) > edge_bound(m, literals)) {
            throw Error(ErrorCode::InternalInvariant, "reduction graph exceeds its polynomial size bound");
        }
    }

    ReductionArtifacts out{std::move(chain.graph), std::move(expanded.graph), std::move(bullet), {}, {}, z};
    for (const auto& [p, q] : chain.forbidden) out.forbidden.emplace_back(literal_label(p), literal_label(q));
    out.forbidden_star = std::move(expanded.forbidden);
    return out;
}

namespace {

std::string_view index_suffix(std::string_view label) { return label.size() > 2 ? label.substr(2) : label; }

// Rule 2: every f-vertex sits between a- and b-vertices with the same index.
// Rule 1 is implied by simplicity.
bool follows_rules(const CapGraph& g, const std::vector<int>& path)
{
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (g.role(path[k]) != VertexRole::FType) continue;
        if (k == 0 || k + 1 == path.size()) return false;
        const int a = path[k - 1];
        const int b = path[k + 1];
        if (g.role(a) != VertexRole::AType || g.role(b) != VertexRole::BType) return false;
        if (index_suffix(g.label(a)) != index_suffix(g.label(b))) return false;
    }
    return true;
}

// One literal set true per visited literal vertex; nullopt on a contradiction.
std::optional<std::vector<bool>> assignment_from_path(const Cnf& cnf, const CapGraph& g, const std::vector<int>& path)
{
    std::vector<int> value(static_cast<std::size_t>(cnf.num_vars), -1);
    for (int v : path) {
        const auto lit = literal_of_label(g.label(v));
        if (!lit) continue;
        const Literal& l =
            cnf.clauses.at(static_cast<std::size_t>(lit->clause - 1)).at(static_cast<std::size_t>(lit->position - 1));
        const int want = l.negated ? 0 : 1;
        int& slot = value[static_cast<std::size_t>(l.var - 1)];
        if (slot >= 0 && slot != want) return std::nullopt;
        slot = want;
    }
    std::vector<bool> out(value.size());
    for (std::size_t k = 0; k < value.size(); ++k) out[k] = value[k] == 1;
    return out;
}

} // namespace

ReductionReport verify_reduction(const Cnf& cnf, const ExtRational& z)
{
    cnf.validate();
    if (cnf.num_vars > kMaxReductionVars || static_cast<int>(cnf.clauses.size()) > kMaxReductionClauses) {
        throw Error(ErrorCode::CapacityLimit, "reduction check is limited to " + std::to_string(kMaxReductionVars) +
                                                  " variables and " + std::to_string(kMaxReductionClauses) +
                                                  " clauses");
    }
    const ReductionArtifacts artifacts = reduce_3sat(cnf, z);
    const CapGraph& g = artifacts.g_b_bullet;

    ReductionReport report;
    report.satisfiable = brute_force_sat(cnf).has_value();
    report.accepted_paths = for_each_path_at_least(g, z, [&](const std::vector<int>& path) {
        if (!follows_rules(g, path)) report.rules_hold = false;
        const auto assignment = assignment_from_path(cnf, g, path);
        const bool valid = assignment && cnf.evaluate(*assignment);
        if (!valid) report.assignments_valid = false;
        if (report.witness_path.empty()) {
            for (int v : path) report.witness_path.push_back(g.label(v));
            report.witness_assignment = assignment;
        }
        return true;
    });
    report.path_exists = hd_path_decision(g, z, INT_MAX);
    if (report.path_exists != (report.accepted_paths > 0)) {
        throw Error(ErrorCode::InternalInvariant, "path decision disagrees with path enumeration");
    }
    report.agree = report.path_exists == report.satisfiable;
    return report;
}

} // namespace hdline::routing
