#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "hdline/error.hpp"
#include "hdline/line_model.hpp"
#include "oracles.hpp"

using namespace hdline;

namespace {

const ExtRational kInf = ExtRational::infinity();

Schedule running_schedule()
{
    return Schedule({{State("010"), ExtRational(2, 8)},
                     {State("001"), ExtRational(1, 8)},
                     {State("111"), ExtRational(2, 8)},
                     {State("101"), ExtRational(3, 8)}});
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no hdline::Error thrown");
    return ErrorCode::InternalInvariant;
}

} // namespace

TEST_CASE("network construction")
{
    const auto net = LineNetwork::parse("2, 2, 3/2, inf");
    CHECK(net.relay_count() == 3);
    CHECK(net.link(3) == ExtRational(3, 2));
    CHECK(net.link(4).is_infinite());
    CHECK(net.to_string() == "(2,2,3/2,inf)");
    CHECK_THROWS_AS(net.link(0), Error);
    CHECK_THROWS_AS(net.link(5), Error);
    CHECK(code_of([] { LineNetwork({}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { LineNetwork::parse("1,0"); }) == ErrorCode::InvalidArgument);
    CHECK(LineNetwork::parse("1,0", true).degenerate());
    CHECK(code_of([] { LineNetwork::parse("1,x"); }) == ErrorCode::ParseError);
}

TEST_CASE("states and cuts")
{
    const State s("011");
    CHECK_FALSE(s.transmits(1));
    CHECK(s.transmits(3));
    CHECK(State::from_mask(0b110, 3) == s);
    CHECK_THROWS_AS(State("01a"), Error);
    CHECK_THROWS_AS(s.transmits(4), Error);

    const Cut c(4, {3, 1, 3});
    CHECK(c.members() == std::vector<int>{1, 3});
    CHECK(c.mask() == 0b0101);
    CHECK(Cut::from_mask(0b0101, 4) == c);
    CHECK(c.to_string() == "{1,3}");
    CHECK(Cut(2, {}).to_string() == "{}");
    CHECK_THROWS_AS(Cut(3, {4}), Error);
}

TEST_CASE("schedule normalisation")
{
    const Schedule s({{State("01"), ExtRational(1, 4)}, {State("01"), ExtRational(1, 4)},
                      {State("10"), ExtRational(1, 2)}, {State("11"), ExtRational(0)}});
    CHECK(s.size() == 2);
    CHECK(s.entries().at(State("01")) == ExtRational(1, 2));
    CHECK(s.is_simple());
    CHECK_THROWS_AS(Schedule({{State("01"), ExtRational(1, 2)}}), Error);
    CHECK_THROWS_AS(Schedule({{State("01"), ExtRational(1, 2)}, {State("1"), ExtRational(1, 2)}}), Error);
    CHECK_THROWS_AS(Schedule({}), Error);
}

TEST_CASE("from_channel_gains")
{
    const std::vector<double> ones{1.0, 1.0, 1.0};
    for (double l : from_channel_gains(ones)) CHECK(l == 1.0);
    const std::vector<double> zero{0.0};
    CHECK(from_channel_gains(zero)[0] == 0.0);
    const std::vector<double> three{std::sqrt(3.0)};
    CHECK(from_channel_gains(three)[0] == doctest::Approx(2.0).epsilon(1e-15));
    const std::vector<std::complex<double>> complex{{0.0, 1.0}, {1.0, 1.0}};
    const auto lc = from_channel_gains(complex);
    CHECK(lc[0] == doctest::Approx(1.0));
    CHECK(lc[1] == doctest::Approx(std::log2(3.0)));
    const std::vector<double> bad{-1.0}, nan{std::nan("")};
    CHECK(code_of([&] { from_channel_gains(bad); }) == ErrorCode::InvalidGain);
    CHECK(code_of([&] { from_channel_gains(nan); }) == ErrorCode::InvalidGain);
}

TEST_CASE("closed form capacity")
{
    CHECK(closed_form_capacity(LineNetwork::parse("2,2,3,1")) == ExtRational(3, 4));
    CHECK(closed_form_capacity(LineNetwork::parse("1,1")) == ExtRational(1, 2));
    CHECK(closed_form_capacity(LineNetwork::parse("5,7,3,9,4")) == ExtRational(21, 10));
    CHECK(closed_form_capacity(LineNetwork::parse("1,inf")) == ExtRational(1));
    CHECK(closed_form_capacity(LineNetwork::parse("inf,inf")).is_infinite());
    CHECK(closed_form_bottleneck(LineNetwork::parse("2,2,3,1")) == 3);
    CHECK(closed_form_bottleneck(LineNetwork::parse("5,7,3,9,4")) == 2);
    CHECK(closed_form_bottleneck(LineNetwork::parse("1,1,1")) == 1);
    CHECK(code_of([] { closed_form_capacity(LineNetwork::parse("4")); }) == ErrorCode::DegenerateNetwork);
}

TEST_CASE("distributed fold")
{
    const auto m = distributed_capacity_fold(LineNetwork::parse("2,2,3,1"));
    REQUIRE(m.size() == 3);
    CHECK(m[0] == ExtRational(1));
    CHECK(m[1] == ExtRational(1));
    CHECK(m[2] == ExtRational(3, 4));
    CHECK(distributed_capacity_fold(LineNetwork::parse("1,1")) == std::vector<ExtRational>{ExtRational(1, 2)});
}

TEST_CASE("fd capacity")
{
    CHECK(fd_capacity(LineNetwork::parse("2,2,3,1")) == ExtRational(1));
    CHECK(fd_capacity(LineNetwork::parse("1,inf")) == ExtRational(1));
    CHECK(fd_capacity(LineNetwork::parse("5,7,3,9,4")) == ExtRational(3));
}

TEST_CASE("link activation sets")
{
    std::vector<std::string> s2, s3;
    for (std::uint64_t m = 0; m < 8; ++m) {
        const State s = State::from_mask(m, 3);
        if (state_activates_link(s, 2)) s2.push_back(s.to_string());
        if (state_activates_link(s, 3)) s3.push_back(s.to_string());
    }
    std::sort(s2.begin(), s2.end());
    std::sort(s3.begin(), s3.end());
    CHECK(s2 == std::vector<std::string>{"100", "101"});
    CHECK(s3 == std::vector<std::string>{"010", "110"});
    CHECK(state_activates_link(State("111"), 4));
    CHECK_FALSE(state_activates_link(State("111"), 1));
    CHECK_THROWS_AS(state_activates_link(State("111"), 0), Error);
    CHECK_THROWS_AS(state_activates_link(State("111"), 5), Error);
}

TEST_CASE("cut values")
{
    const auto net = LineNetwork::parse("2,2,3,1");
    const auto sched = running_schedule();
    // Link 1 is active in 010 and 001 (weight 3/8), times l_1 = 2.
    CHECK(cut_value(sched, Cut(3, {}), net) == ExtRational(3, 4));
    const Schedule uniform({{State("0"), ExtRational(1, 2)}, {State("1"), ExtRational(1, 2)}});
    CHECK(cut_value(uniform, Cut(1, {1}), LineNetwork::parse("1,1")) == ExtRational(1, 2));
    // A cut crossing an infinite link is never binding.
    CHECK(cut_value(uniform, Cut(1, {1}), LineNetwork::parse("inf,1")).is_infinite());
    CHECK(cut_value(uniform, Cut(1, {}), LineNetwork::parse("inf,1")) == ExtRational(1, 2));
}

TEST_CASE("fundamental rate")
{
    const auto net = LineNetwork::parse("2,2,3,1");
    CHECK(schedule_rate_fundamental(running_schedule(), net) == ExtRational(3, 4));
    CHECK(schedule_rate_fundamental(Schedule({{State("000"), ExtRational(1)}}), net).is_zero());
    const auto f = link_activation_fractions(running_schedule());
    CHECK(f == std::vector<ExtRational>{ExtRational(3, 8), ExtRational(3, 8), ExtRational(1, 4), ExtRational(3, 4)});
    // Infinite links do not bind.
    CHECK(schedule_rate_fundamental(Schedule({{State("1"), ExtRational(1)}}), LineNetwork::parse("inf,2")) ==
          ExtRational(2));
}

TEST_CASE("property: closed form agrees with oracle, fold and FD bounds")
{
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 15);
        const auto l = oracle::random_rational_links(rng, n);
        const auto net = oracle::to_network(l);
        const ExtRational c = closed_form_capacity(net);
        CHECK(c == ExtRational(oracle::closed_form(l)));
        CHECK(distributed_capacity_fold(net).back() == c);
        const ExtRational fd = fd_capacity(net);
        CHECK(c <= fd);
        CHECK(c + c >= fd);
        // Scaling all links scales the capacity.
        std::vector<ExtRational> scaled;
        for (const auto& q : l) scaled.emplace_back(mpq_class(q * 7 / 3));
        CHECK(closed_form_capacity(LineNetwork(scaled)) == c * ExtRational(7, 3));
    }
}

TEST_CASE("property: cut values match the oracle and are nonnegative")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto l = oracle::random_rational_links(rng, n);
        const auto raw = oracle::random_schedule(rng, n, 1 + static_cast<int>(rng() % 5));
        const auto sched = oracle::to_schedule(raw);
        const auto net = oracle::to_network(l);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const ExtRational v = cut_value(sched, Cut::from_mask(m, n), net);
            CHECK(v >= ExtRational(0));
            CHECK(v == ExtRational(oracle::cut_value(raw, m, l)));
        }
    }
}
