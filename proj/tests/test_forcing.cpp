#include <doctest.h>

#include "forceps/families.hpp"
#include "forceps/forcing.hpp"
#include "oracles.hpp"

using namespace forceps;

namespace {

Graph gen(const std::string& spec) { return generate(FamilySpec::parse(spec)); }

std::vector<Force> forces(std::initializer_list<std::pair<int, int>> list)
{
    std::vector<Force> out;
    for (auto [u, v] : list) out.push_back({u, v});
    return out;
}

VertexSet even_weight(int d)
{
    VertexSet out;
    for (int x = 0; x < (1 << d); ++x) {
        if (std::popcount(static_cast<unsigned>(x)) % 2 == 0) out.insert(x);
    }
    return out;
}

} // namespace

TEST_SUITE("forcing") {

TEST_CASE("rule names")
{
    CHECK(parse_rule("psd") == Rule::psd);
    CHECK(parse_rule("standard") == Rule::standard);
    CHECK(to_string(Rule::psd) == "psd");
    CHECK_THROWS_AS(parse_rule("skew"), std::invalid_argument);
}

TEST_CASE("force candidates")
{
    const Graph p3 = gen("path:3");
    CHECK(force_candidates(p3, {{1}, {}}, Rule::psd) == forces({{1, 0}, {1, 2}}));
    CHECK(force_candidates(p3, {{1}, {}}, Rule::standard).empty());
    CHECK(force_candidates(gen("complete:3"), {{0}, {}}, Rule::psd).empty());
    CHECK(force_candidates(p3, {{1}, {1}}, Rule::psd).empty());
    CHECK(force_candidates(p3, {{0}, {}}, Rule::standard) == forces({{0, 1}}));
}

TEST_CASE("closures and chronologies")
{
    const ClosureResult p5 = closure(gen("path:5"), {{0}, {}}, Rule::psd);
    CHECK(p5.blue == VertexSet::range(5));
    CHECK(format_chronology(p5.chronology) == "1 0->1\n2 1->2\n3 2->3\n4 3->4\n");

    CHECK(closure(gen("path:3"), {{0, 1}, {1}}, Rule::psd).blue == VertexSet{0, 1});

    const ClosureResult k4 = closure(gen("complete:4"), {{0, 1, 2}, {0, 1}}, Rule::psd);
    CHECK(k4.blue == VertexSet::range(4));
    CHECK(k4.chronology == Chronology{{1, {2, 3}}});
}

TEST_CASE("simultaneous rounds keep the smallest force per target")
{
    // both 0 and 2 can force 1 in round one; 0->1 is recorded
    const ClosureResult r = closure(gen("path:3"), {{0, 2}, {}}, Rule::psd);
    CHECK(r.chronology == Chronology{{1, {0, 1}}});
    // psd forces into separate components happen together
    const ClosureResult star = closure(gen("star:3"), {{0}, {}}, Rule::psd);
    CHECK(star.chronology == Chronology{{1, {0, 1}}, {1, {0, 2}}, {1, {0, 3}}});
}

TEST_CASE("chronologies are valid one force at a time")
{
    const Graph g = gen("petersen_gp:5:1");
    const auto a = oracle::matrix_of(g);
    const ColoringState s{{0, 5, 1, 6}, {}};
    const ClosureResult r = closure(g, s, Rule::psd);
    oracle::Flags blue = oracle::flags_of(g.order(), s.blue.bits());
    const oracle::Flags none(g.order(), false);
    for (const TimedForce& t : r.chronology) {
        CHECK(oracle::valid_force(a, blue, none, t.force.source, t.force.target, Rule::psd));
        blue[t.force.target] = true;
    }
    CHECK(oracle::mask_of(blue) == r.blue.bits());
}

TEST_CASE("forcing sets")
{
    CHECK(is_forcing_set(gen("cycle:4"), {{0, 1}, {}}, Rule::psd));
    CHECK_FALSE(is_forcing_set(gen("cycle:4"), {{0}, {}}, Rule::psd));
    CHECK(is_forcing_set(gen("fig3_spider"), {{3}, {}}, Rule::psd));
    CHECK_FALSE(is_forcing_set(gen("fig3_spider"), {{3}, {}}, Rule::standard));
}

TEST_CASE("leaky verdicts")
{
    CHECK(is_ell_leaky_forcing_set(gen("path:4"), {0, 3}, 1, Rule::psd).forcing);

    const LeakyVerdict p3 = is_ell_leaky_forcing_set(gen("path:3"), {0, 1}, 1, Rule::psd);
    CHECK_FALSE(p3.forcing);
    REQUIRE(p3.witness_leaks);
    CHECK(*p3.witness_leaks == VertexSet{1});

    CHECK(is_ell_leaky_forcing_set(gen("fig3_spider"), {0, 4, 5, 6}, 1, Rule::psd).forcing);
    CHECK(is_ell_leaky_forcing_set(gen("hypercube:3"), even_weight(3), 2, Rule::psd).forcing);
    CHECK_FALSE(is_ell_leaky_forcing_set(gen("hypercube:3"), even_weight(3), 3, Rule::psd).forcing);

    // every vertex blue survives any number of leaks, and ell is clamped to n
    CHECK(is_ell_leaky_forcing_set(from_graph6("A_"), {0, 1}, 5, Rule::psd).forcing);
    CHECK(is_ell_leaky_forcing_set(gen("path:3"), {0, 1, 2}, 99, Rule::standard).forcing);
    CHECK_THROWS_AS(is_ell_leaky_forcing_set(gen("path:3"), {0}, -1, Rule::psd), std::invalid_argument);
}

TEST_CASE("leaks may sit on blue vertices")
{
    // K_{1,3} with the center blue: leaking the center stops everything
    const LeakyVerdict v = is_ell_leaky_forcing_set(gen("star:3"), {0, 1, 2}, 1, Rule::psd);
    CHECK_FALSE(v.forcing);
    REQUIRE(v.witness_leaks);
    CHECK(*v.witness_leaks == VertexSet{0});
}

TEST_CASE("leaky verdicts match the oracle on a few graphs")
{
    for (const char* s : {"cycle:5", "wheel:4", "complete_bipartite:2:3", "petersen_gp:3:1"}) {
        const Graph g = gen(s);
        const auto a = oracle::matrix_of(g);
        for (int ell = 0; ell <= 2; ++ell) {
            for (unsigned b = 0; b < (1U << g.order()); ++b) {
                const auto expected = oracle::failing_leaks(a, b, ell, Rule::psd);
                const LeakyVerdict v = is_ell_leaky_forcing_set(g, VertexSet(b), ell, Rule::psd);
                CHECK(v.forcing == !expected.has_value());
                if (expected && v.witness_leaks) CHECK(v.witness_leaks->bits() == *expected);
            }
        }
    }
}

TEST_CASE("possible forces")
{
    CHECK(possible_forces(gen("path:3"), {1}) == forces({{1, 0}, {1, 2}}));
    CHECK(possible_forces(gen("path:3"), {0, 2}) == forces({{0, 1}, {2, 1}}));
    CHECK(possible_forces(gen("cycle:4"), {0}).empty());
}

TEST_CASE("distinct forcers")
{
    CHECK(distinct_forcers(gen("path:3"), {0, 2}, 1) == 2);
    CHECK(distinct_forcers(gen("path:3"), {1}, 0) == 1);
    CHECK(distinct_forcers(gen("complete:4"), {0, 1, 2}, 3) == 3);
    CHECK_THROWS_AS(distinct_forcers(gen("path:3"), {1}, 1), std::invalid_argument);
}

TEST_CASE("one-leak criterion")
{
    CHECK(one_leaky_criterion(gen("path:4"), {0, 3}));
    CHECK_FALSE(one_leaky_criterion(gen("path:3"), {1}));
    CHECK(one_leaky_criterion(gen("cycle:5"), {0, 2}));
    CHECK_FALSE(one_leaky_criterion(gen("cycle:5"), {0}));
}

} // TEST_SUITE
