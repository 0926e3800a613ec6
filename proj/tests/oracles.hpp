#ifndef HDLINE_TESTS_ORACLES_HPP
#define HDLINE_TESTS_ORACLES_HPP

// Independent reference implementations used to cross-check the library.
// They work on plain mpq_class values and strings, straight from the definitions.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hdline/ext_rational.hpp"
#include "hdline/line_model.hpp"
#include "hdline/routing.hpp"

namespace oracle {

inline mpq_class hm(const mpq_class& x, const mpq_class& y)
{
    mpq_class r = x * y / (x + y);
    r.canonicalize();
    return r;
}

// min_i l_i l_{i+1} / (l_i + l_{i+1}) for finite positive links.
inline mpq_class closed_form(const std::vector<mpq_class>& l)
{
    mpq_class best = hm(l[0], l[1]);
    for (std::size_t i = 1; i + 1 < l.size(); ++i) best = std::min(best, hm(l[i], l[i + 1]));
    return best;
}

// states[k] is a '0'/'1' string over relays 1..N, leftmost = relay 1.
// in_a(i) for relay i in [1:N]; link i (1-based) crosses iff
// node i is on the destination side and node i-1 on the source side.
inline mpq_class cut_value(const std::vector<std::pair<std::string, mpq_class>>& sched, std::uint64_t a_mask,
                           const std::vector<mpq_class>& l)
{
    const int n = static_cast<int>(l.size()) - 1;
    auto dest_side = [&](int node) { return node == n + 1 || (node >= 1 && node <= n && ((a_mask >> (node - 1)) & 1)); };
    auto transmits = [&](const std::string& s, int node) { return node == 0 || (node <= n && s[node - 1] == '1'); };
    mpq_class total = 0;
    for (const auto& [s, w] : sched) {
        for (int i = 1; i <= n + 1; ++i) {
            if (!dest_side(i) || dest_side(i - 1)) continue;
            const bool receiving = i == n + 1 || s[i - 1] == '0';
            if (receiving && transmits(s, i - 1)) total += w * l[i - 1];
        }
    }
    total.canonicalize();
    return total;
}

inline mpq_class min_cut_bruteforce(const std::vector<std::pair<std::string, mpq_class>>& sched,
                                    const std::vector<mpq_class>& l)
{
    const int n = static_cast<int>(l.size()) - 1;
    mpq_class best = cut_value(sched, 0, l);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) best = std::min(best, cut_value(sched, m, l));
    return best;
}

// Primitive punctured subsets of [a:b] by filtering all 2^(b-a+1) subsets.
inline std::vector<std::vector<int>> primitive_subsets(int a, int b)
{
    std::vector<std::vector<int>> out;
    if (b < a) return {{}};
    const int w = b - a + 1;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << w); ++m) {
        if (m & (m >> 1)) continue;
        bool maximal = true;
        for (int k = 0; k < w && maximal; ++k) {
            if ((m >> k) & 1) continue;
            const std::uint64_t grown = m | (std::uint64_t{1} << k);
            if (!(grown & (grown >> 1))) maximal = false;
        }
        if (!maximal) continue;
        std::vector<int> set;
        for (int k = 0; k < w; ++k)
            if ((m >> k) & 1) set.push_back(a + k);
        out.push_back(set);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<int>> punctured_subsets(int a, int b)
{
    std::vector<std::vector<int>> out;
    const int w = b - a + 1;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << w); ++m) {
        if (m & (m >> 1)) continue;
        std::vector<int> set;
        for (int k = 0; k < w; ++k)
            if ((m >> k) & 1) set.push_back(a + k);
        out.push_back(set);
    }
    return out;
}

// Every simple S-D path with its HD capacity, by unpruned DFS.
inline std::vector<std::pair<hdline::ExtRational, std::vector<int>>> all_paths(const hdline::routing::CapGraph& g)
{
    std::vector<std::pair<hdline::ExtRational, std::vector<int>>> out;
    std::vector<int> path{g.source()};
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    seen[static_cast<std::size_t>(g.source())] = true;
    std::vector<hdline::ExtRational> caps;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.destination()) {
            hdline::ExtRational c = caps.size() == 1 ? caps[0] : hdline::ExtRational::infinity();
            for (std::size_t k = 0; k + 1 < caps.size(); ++k) c = hdline::min(c, hdline::harmonic_half(caps[k], caps[k + 1]));
            out.emplace_back(c, path);
            return;
        }
        for (int e : g.out_edges(v)) {
            const auto& edge = g.edges()[static_cast<std::size_t>(e)];
            if (seen[static_cast<std::size_t>(edge.to)]) continue;
            seen[static_cast<std::size_t>(edge.to)] = true;
            path.push_back(edge.to);
            caps.push_back(edge.capacity);
            self(self, edge.to);
            caps.pop_back();
            path.pop_back();
            seen[static_cast<std::size_t>(edge.to)] = false;
        }
    };
    rec(rec, g.source());
    return out;
}

inline bool truth_table_sat(const hdline::routing::Cnf& cnf)
{
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cnf.num_vars); ++m) {
        bool all = true;
        for (const auto& clause : cnf.clauses) {
            bool any = false;
            for (const auto& lit : clause) any = any || (((m >> (lit.var - 1)) & 1) != 0) != lit.negated;
            all = all && any;
        }
        if (all) return true;
    }
    return false;
}

// ------------------------------------------------------------------ generators

inline std::vector<mpq_class> random_rational_links(std::mt19937_64& rng, int relays, int max_num = 100,
                                                    int max_den = 10)
{
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    std::vector<mpq_class> l;
    for (int i = 0; i <= relays; ++i) {
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        l.push_back(q);
    }
    return l;
}

inline hdline::LineNetwork to_network(const std::vector<mpq_class>& l)
{
    std::vector<hdline::ExtRational> links;
    for (const auto& q : l) links.emplace_back(q);
    return hdline::LineNetwork(links);
}

// Random schedule over `states` distinct states with positive weights summing to 1.
inline std::vector<std::pair<std::string, mpq_class>> random_schedule(std::mt19937_64& rng, int relays, int states)
{
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << relays) - 1);
    std::uniform_int_distribution<int> weight(1, 20);
    std::vector<std::pair<std::string, int>> raw;
    int total = 0;
    for (int k = 0; k < states; ++k) {
        const std::uint64_t m = mask(rng);
        std::string s(static_cast<std::size_t>(relays), '0');
        for (int i = 0; i < relays; ++i)
            if ((m >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
        const int w = weight(rng);
        raw.emplace_back(s, w);
        total += w;
    }
    std::vector<std::pair<std::string, mpq_class>> out;
    for (const auto& [s, w] : raw) {
        mpq_class q(w, total);
        q.canonicalize();
        out.emplace_back(s, q);
    }
    return out;
}

inline hdline::Schedule to_schedule(const std::vector<std::pair<std::string, mpq_class>>& sched)
{
    std::vector<std::pair<hdline::State, hdline::ExtRational>> entries;
    for (const auto& [s, w] : sched) entries.emplace_back(hdline::State(s), hdline::ExtRational(w));
    return hdline::Schedule(entries);
}

inline hdline::routing::Cnf random_3cnf(std::mt19937_64& rng, int max_vars, int max_clauses)
{
    std::uniform_int_distribution<int> nv(1, max_vars), nc(1, max_clauses), width(1, 3), coin(0, 1);
    hdline::routing::Cnf cnf;
    cnf.num_vars = nv(rng);
    std::uniform_int_distribution<int> var(1, cnf.num_vars);
    const int clauses = nc(rng);
    for (int c = 0; c < clauses; ++c) {
        std::vector<hdline::routing::Literal> clause;
        const int w = width(rng);
        for (int k = 0; k < w; ++k) clause.push_back({var(rng), coin(rng) == 1});
        cnf.clauses.push_back(clause);
    }
    return cnf;
}

} // namespace oracle

#endif
