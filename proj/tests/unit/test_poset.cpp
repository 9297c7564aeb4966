#include "wpoly/poset.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace wpoly;

TEST_CASE("validate builds P_{2,2} from its relations")
{
    const Poset p = Poset::validate(4, {{1, 2}, {3, 4}, {3, 2}});
    CHECK(p.size() == 4);
    CHECK(p.covers() == std::vector<Relation>{{1, 2}, {3, 2}, {3, 4}});
    CHECK(p.less(3, 2));
    CHECK_FALSE(p.less(2, 3));
    CHECK_FALSE(p.less(1, 3));
    CHECK(p == make_pmn(2, 2));
}

TEST_CASE("validate errors")
{
    CHECK_THROWS_AS(Poset::validate(2, {{1, 2}, {2, 1}}), CycleError);
    CHECK_THROWS_AS(Poset::validate(3, {{1, 2}, {2, 3}, {3, 1}}), CycleError);
    CHECK_THROWS_AS(Poset::validate(2, {{1, 1}}), CycleError);
    CHECK_THROWS_AS(Poset::validate(3, {{1, 4}}), LabelError);
    CHECK_THROWS_AS(Poset::validate(3, {{0, 2}}), LabelError);
    CHECK_THROWS_AS(Poset::validate(0, {}), LabelError);
}

TEST_CASE("redundant relations are reduced to covers")
{
    const Poset p = Poset::validate(3, {{1, 3}, {1, 2}, {2, 3}, {1, 2}});
    CHECK(p.covers() == std::vector<Relation>{{1, 2}, {2, 3}});
    CHECK(p.less(1, 3));
}

TEST_CASE("antichain")
{
    const Poset p = make_antichain(3);
    CHECK(p.covers().empty());
    CHECK(make_antichain(4).closure_pairs().empty());
    CHECK(make_antichain(1).size() == 1);
    CHECK(make_antichain(2).covers().empty());
}

TEST_CASE("family constructors")
{
    CHECK(make_chain(1).covers().empty());
    CHECK(make_chain(2).covers() == std::vector<Relation>{{1, 2}});
    CHECK(make_chain(3).covers() == std::vector<Relation>{{1, 2}, {2, 3}});
    CHECK(make_disjoint_chains(2, 2).covers() == std::vector<Relation>{{1, 2}, {3, 4}});
    CHECK(make_disjoint_chains(1, 1).covers().empty());
    CHECK(make_disjoint_chains(3, 4).covers() == std::vector<Relation>{{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
    CHECK(make_pmn(3, 4).covers() == std::vector<Relation>{{1, 2}, {2, 3}, {4, 3}, {4, 5}, {5, 6}, {6, 7}});
    CHECK(make_pmn(1, 1).covers() == std::vector<Relation>{{2, 1}});
    CHECK_THROWS_AS(make_pmn(0, 3), LabelError);
}

TEST_CASE("natural labelling")
{
    CHECK(is_naturally_labeled(make_chain(5)));
    CHECK_FALSE(is_naturally_labeled(make_pmn(2, 2)));
    CHECK(is_naturally_labeled(make_antichain(3)));
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            CHECK(is_naturally_labeled(make_disjoint_chains(m, n)));
            CHECK_FALSE(is_naturally_labeled(make_pmn(m, n)));
        }
}

TEST_CASE("closure is idempotent under re-closure (random DAGs)")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = 1 + static_cast<int>(rng() % 12);
        const Poset a = Poset::validate(p, test::random_dag(rng, p, 0.3));
        const Poset from_closure = Poset::validate(p, a.closure_pairs());
        const Poset from_covers = Poset::validate(p, a.covers());
        CHECK(from_closure.closure_pairs() == a.closure_pairs());
        CHECK(from_covers.closure_pairs() == a.closure_pairs());
        CHECK(from_covers.covers() == a.covers());
    }
}

TEST_CASE("random DAGs accepted, plus a back edge rejected")
{
    std::mt19937 rng(11);
    int rejected = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int p = 2 + static_cast<int>(rng() % 10);
        auto rel = test::random_dag(rng, p, 0.4);
        const Poset poset = Poset::validate(p, rel);
        const auto pairs = poset.closure_pairs();
        if (pairs.empty())
            continue;
        const auto [a, b] = pairs[rng() % pairs.size()];
        rel.emplace_back(b, a);
        CHECK_THROWS_AS(Poset::validate(p, rel), CycleError);
        ++rejected;
    }
    CHECK(rejected > 100);
}

TEST_CASE("P_{m,n} closure adds exactly the pairs forced by m+1 < m")
{
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n) {
            const auto base = make_disjoint_chains(m, n).closure_pairs();
            const auto full = make_pmn(m, n).closure_pairs();
            std::set<Relation> expected(base.begin(), base.end());
            // m+1 is the bottom of the second chain and m the top of the first,
            // so transitivity forces nothing beyond the new pair itself.
            expected.insert({m + 1, m});
            std::set<Relation> got(full.begin(), full.end());
            CHECK(std::includes(got.begin(), got.end(), base.begin(), base.end()));
            CHECK(got == expected);
        }
}

TEST_CASE("text format")
{
    const std::string text = "# P_{2,2}\nposet 4\ncover 1 2   # first chain\ncover 3 4\n\ncover 3 2\ncover 1 2\n";
    const Poset p = parse_poset(text);
    CHECK(p == make_pmn(2, 2));
    CHECK(format_poset(p) == "poset 4\ncover 1 2\ncover 3 2\ncover 3 4\n");

    CHECK_THROWS_AS(parse_poset("cover 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("poset 3\ncover 1\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("poset 3\nedge 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("poset 3\ncover 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_poset(""), ParseError);
    CHECK_THROWS_AS(parse_poset("poset 2\ncover 1 2\ncover 2 1\n"), CycleError);
    CHECK_THROWS_AS(parse_poset("poset 2\ncover 1 5\n"), LabelError);
}

TEST_CASE("text round trip is canonical")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int p = 1 + static_cast<int>(rng() % 10);
        const Poset a = Poset::validate(p, test::random_dag(rng, p, 0.35));
        const std::string once = format_poset(a);
        const Poset b = parse_poset(once);
        CHECK(b == a);
        CHECK(format_poset(b) == once);
    }
}
