#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hdline/error.hpp"
#include "hdline/scheduler.hpp"
#include "oracles.hpp"

using namespace hdline;
using namespace hdline::scheduler;

namespace {

std::vector<mpz_class> z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

ColorInterval ci(long l, long r) { return {mpz_class(l), mpz_class(r)}; }

} // namespace

TEST_CASE("integerize")
{
    auto r = integerize(LineNetwork::parse("2,2,3,1"));
    CHECK(r.net == LineNetwork::parse("2,2,3,1"));
    CHECK(r.scale == ExtRational(1));
    r = integerize(LineNetwork::parse("1/2,1/3"));
    CHECK(r.net == LineNetwork::parse("3,2"));
    CHECK(r.scale == ExtRational(1, 6));
    r = integerize(LineNetwork::parse("3/4,3/4"));
    CHECK(r.net == LineNetwork::parse("3,3"));
    CHECK(r.scale == ExtRational(1, 4));
    CHECK_THROWS_AS(integerize(LineNetwork::parse("1,inf")), Error);
    CHECK_THROWS_AS(integerize(LineNetwork::parse("1,0", true)), Error);
}

TEST_CASE("multiplicities")
{
    auto m = multiplicities(LineNetwork::parse("2,2,3,1"));
    CHECK(m.common_multiple == 6);
    CHECK(m.counts == z({3, 3, 2, 6}));
    m = multiplicities(LineNetwork::parse("1,1"));
    CHECK(m.common_multiple == 1);
    CHECK(m.counts == z({1, 1}));
    m = multiplicities(LineNetwork::parse("4,6,10"));
    CHECK(m.common_multiple == 60);
    CHECK(m.counts == z({15, 10, 6}));
    CHECK_THROWS_AS(multiplicities(LineNetwork::parse("1/2,1")), Error);
}

TEST_CASE("colour intervals")
{
    auto a = color_intervals(multiplicities(LineNetwork::parse("2,2,3,1")));
    CHECK(a.max_degree == 8);
    CHECK(a.intervals == std::vector<ColorInterval>{ci(6, 8), ci(1, 3), ci(7, 8), ci(1, 6)});
    a = color_intervals(multiplicities(LineNetwork::parse("1,1")));
    CHECK(a.max_degree == 2);
    CHECK(a.intervals == std::vector<ColorInterval>{ci(2, 2), ci(1, 1)});
}

TEST_CASE("grouping the running example")
{
    const std::vector<ColorInterval> c{ci(6, 8), ci(1, 3), ci(7, 8), ci(1, 6)};
    const auto g = group_colors(3, mpz_class(8), c);
    CHECK(g.boundaries == z({9, 7, 6, 4, 1}));
    REQUIRE(g.groups.size() == 4);
    const std::vector<std::tuple<ColorInterval, std::string, ExtRational>> expected{
        {ci(7, 8), "010", ExtRational(2, 8)},
        {ci(6, 6), "001", ExtRational(1, 8)},
        {ci(4, 5), "111", ExtRational(2, 8)},
        {ci(1, 3), "101", ExtRational(3, 8)}};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(g.groups[k].colors == std::get<0>(expected[k]));
        CHECK(g.groups[k].state.to_string() == std::get<1>(expected[k]));
        CHECK(g.groups[k].weight == std::get<2>(expected[k]));
    }
}

TEST_CASE("grouping a single relay")
{
    const std::vector<ColorInterval> c{ci(2, 2), ci(1, 1)};
    const auto g = group_colors(1, mpz_class(2), c);
    REQUIRE(g.groups.size() == 2);
    CHECK(g.groups[0].colors == ci(2, 2));
    CHECK(g.groups[0].state.to_string() == "0");
    CHECK(g.groups[0].weight == ExtRational(1, 2));
    CHECK(g.groups[1].colors == ci(1, 1));
    CHECK(g.groups[1].state.to_string() == "1");
}

TEST_CASE("malformed intervals")
{
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    const std::vector<ColorInterval> reversed{ci(3, 1), ci(1, 1)};
    const std::vector<ColorInterval> outside{ci(1, 5), ci(1, 1)};
    const std::vector<ColorInterval> short_list{ci(1, 1)};
    CHECK(code([&] { group_colors(1, mpz_class(2), reversed); }) == ErrorCode::InternalInvariant);
    CHECK(code([&] { group_colors(1, mpz_class(2), outside); }) == ErrorCode::InternalInvariant);
    CHECK(code([&] { group_colors(1, mpz_class(2), short_list); }) == ErrorCode::InternalInvariant);
}

TEST_CASE("simple schedules")
{
    const auto net = LineNetwork::parse("2,2,3,1");
    const Schedule s = build_simple_schedule(net);
    CHECK(s.size() == 4);
    CHECK(schedule_rate_fundamental(s, net) == ExtRational(3, 4));
    const Schedule one = build_simple_schedule(LineNetwork::parse("1,1"));
    CHECK(one.size() == 2);
    CHECK(schedule_rate_fundamental(one, LineNetwork::parse("1,1")) == ExtRational(1, 2));
    CHECK_THROWS_AS(build_simple_schedule(LineNetwork::parse("3")), Error);
}

TEST_CASE("rationalize_real")
{
    const std::vector<double> exact{1.5, 2.25};
    auto r = rationalize_real(exact, 4);
    CHECK(r.net == LineNetwork::parse("3/2,9/4"));
    CHECK(r.epsilon == ExtRational(1, 4));
    const std::vector<double> pi{std::numbers::pi, 1.0};
    r = rationalize_real(pi, 100);
    CHECK(r.net.link(1) == ExtRational(314, 100));
    const std::vector<double> tiny{0.001, 1.0};
    CHECK_THROWS_AS(rationalize_real(tiny, 100), Error);
    CHECK_THROWS_AS(rationalize_real(exact, 0), Error);
    const std::vector<double> neg{-1.0, 1.0};
    CHECK_THROWS_AS(rationalize_real(neg, 10), Error);
}

TEST_CASE("property: simple, normalised, fraction n_i/Delta, rate M/Delta")
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const auto l = oracle::random_rational_links(rng, n);
        const auto net = oracle::to_network(l);
        const auto ints = integerize(net);
        const auto mult = multiplicities(ints.net);
        const auto colors = color_intervals(mult);
        const auto grouped = build_grouped_schedule(net);
        const Schedule s = grouped.to_schedule();

        CHECK(s.is_simple());
        CHECK(grouped.groups.size() <= static_cast<std::size_t>(n) + 1);
        ExtRational total(0);
        for (const auto& g : grouped.groups) total += g.weight;
        CHECK(total == ExtRational(1));

        const auto fractions = link_activation_fractions(s);
        for (int i = 0; i <= n; ++i)
            CHECK(fractions[static_cast<std::size_t>(i)] ==
                  ExtRational(mpq_class(mult.counts[static_cast<std::size_t>(i)], colors.max_degree)));
        const ExtRational rate = schedule_rate_fundamental(s, net);
        CHECK(rate == ExtRational(mpq_class(mult.common_multiple, colors.max_degree)) * ints.scale);
        CHECK(rate == ExtRational(oracle::closed_form(l)));
    }
}

TEST_CASE("property: scale covariance")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto l = oracle::random_rational_links(rng, n);
        std::vector<mpq_class> scaled;
        const mpq_class c(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 9));
        for (const auto& q : l) scaled.push_back(q * c);
        const Schedule a = build_simple_schedule(oracle::to_network(l));
        const Schedule b = build_simple_schedule(oracle::to_network(scaled));
        CHECK(a.entries() == b.entries());
    }
}
