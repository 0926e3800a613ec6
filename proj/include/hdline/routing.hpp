#ifndef HDLINE_ROUTING_HPP
#define HDLINE_ROUTING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hdline/ext_rational.hpp"

// Half-duplex path capacity on general digraphs, exact best-path search and
// the 3SAT -> HD-Path reduction.
namespace hdline::routing {

inline constexpr int kDefaultVertexLimit = 24;

enum class VertexRole { Plain, Source, Destination, ClauseEntry, ClauseExit, Literal, AType, BType, FType };

struct Edge {
    int from;
    int to;
    ExtRational capacity;
};

// Directed multigraph with positive (possibly infinite) edge capacities and
// one distinguished source and destination.
class CapGraph {
public:
    int add_vertex(std::string label, VertexRole role = VertexRole::Plain);
    void add_edge(int from, int to, ExtRational capacity);
    void add_edge(std::string_view from, std::string_view to, ExtRational capacity);

    int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    VertexRole role(int v) const { return roles_.at(static_cast<std::size_t>(v)); }
    std::optional<int> find(std::string_view label) const;
    int id(std::string_view label) const;

    int source() const;
    int destination() const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    // Edge indices leaving v, in insertion order.
    const std::vector<int>& out_edges(int v) const { return out_.at(static_cast<std::size_t>(v)); }
    // Largest capacity among parallel edges from -> to.
    std::optional<ExtRational> capacity(int from, int to) const;

private:
    std::vector<std::string> labels_;
    std::vector<VertexRole> roles_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
};

// min over interior vertices of hm(c_in, c_out); a single edge is its own capacity.
ExtRational path_hd_capacity(std::span<const int> path, const CapGraph& g);
ExtRational path_hd_capacity(const std::vector<std::string>& labels, const CapGraph& g);

struct PathResult {
    ExtRational capacity;
    std::vector<int> path;
};

// Exact search over simple source-destination paths. Ties go to the
// lexicographically smallest label sequence.
std::optional<PathResult> best_hd_path(const CapGraph& g, int max_vertices = kDefaultVertexLimit);

// Whether some simple source-destination path has HD capacity >= z.
bool hd_path_decision(const CapGraph& g, const ExtRational& z, int max_vertices = kDefaultVertexLimit);

// Calls visit for every simple source-destination path with capacity >= z,
// in lexicographic label order, until visit returns false. Returns the count visited.
std::size_t for_each_path_at_least(const CapGraph& g, const ExtRational& z,
                                   const std::function<bool(const std::vector<int>&)>& visit);

// ------------------------------------------------------------------ 3SAT side

struct Literal {
    int var;  // 1-based
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;

    // 1 <= |clause| <= 3, variables within [1:num_vars].
    void validate() const;
    // assignment[v-1] is the value of x_v.
    bool evaluate(const std::vector<bool>& assignment) const;
};

// First satisfying assignment in truth-table order (x_1 least significant).
std::optional<std::vector<bool>> brute_force_sat(const Cnf& cnf);

struct LiteralRef {
    int clause;    // i, 1-based
    int position;  // j, 1-based

    friend auto operator<=>(const LiteralRef&, const LiteralRef&) = default;
};

using LabelPair = std::pair<std::string, std::string>;

std::string literal_label(LiteralRef lit);                       // "v12"
std::string copy_label(char prefix, LiteralRef lit, LiteralRef partner);  // "a_12_23"
std::string merged_label(LiteralRef first, LiteralRef second);      // "f_12_23"
// Literal owning a v/a/b vertex label, if any.
std::optional<LiteralRef> literal_of_label(std::string_view label);

struct GadgetChain {
    CapGraph graph;
    std::vector<std::pair<LiteralRef, LiteralRef>> forbidden;  // first.clause < second.clause
};

GadgetChain build_gadget_chain(const Cnf& cnf);

struct ExpandedGraph {
    CapGraph graph;
    std::vector<LabelPair> forbidden;  // (v_{ij,kl}, v_{kl,ij}), i < k
};

ExpandedGraph expand_forbidden(const GadgetChain& chain);

CapGraph merge_and_capacitate(const ExpandedGraph& expanded, const ExtRational& z);

struct ReductionArtifacts {
    CapGraph g_b;
    CapGraph g_b_star;
    CapGraph g_b_bullet;
    std::vector<LabelPair> forbidden;
    std::vector<LabelPair> forbidden_star;
    ExtRational z;
};

ReductionArtifacts reduce_3sat(const Cnf& cnf, const ExtRational& z);

// Polynomial size bounds for L literal occurrences over m clauses.
std::size_t vertex_bound(std::size_t clauses, std::size_t literals);
std::size_t edge_bound(std::size_t clauses, std::size_t literals);

struct ReductionReport {
    bool satisfiable = false;   // truth table
    bool path_exists = false;   // HD-Path decision on G_B_bullet
    bool agree = false;
    std::size_t accepted_paths = 0;
    bool rules_hold = true;        // Rules 1-2 on every accepted path
    bool assignments_valid = true;  // every extracted assignment satisfies the CNF
    std::vector<std::string> witness_path;
    std::optional<std::vector<bool>> witness_assignment;
};

inline constexpr int kMaxReductionVars = 8;
inline constexpr int kMaxReductionClauses = 6;

ReductionReport verify_reduction(const Cnf& cnf, const ExtRational& z);

} // namespace hdline::routing

#endif
