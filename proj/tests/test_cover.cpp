#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hpisot/cohomology.hpp"
#include "hpisot/cover.hpp"
#include "hpisot/error.hpp"
#include "hpisot/pisot.hpp"

using namespace hpisot;
using fixtures::sub;

TEST_CASE("lifts of short words") {
    auto base = fixtures::ex1_phi1();
    auto a = standard_assignment(base);
    auto names = cover_names(base);
    CHECK(names == std::vector<std::string>{"a1", "a2", "a3", "b1", "b2", "b3"});
    auto fmt = [&](const Word& w) {
        std::string out;
        for (Letter x : w) out += names[x];
        return out;
    };
    CHECK(fmt(lift_word(base.parse_word("AB"), 1, base, a)) == "a1b2");
    CHECK(fmt(lift_word(base.parse_word("AA"), 2, base, a)) == "a2a2");
    CHECK(fmt(lift_word(base.parse_word("BA"), 3, base, a)) == "b3a1");
    CHECK_THROWS_AS(lift_word(base.parse_word("AB"), 4, base, a), PreconditionError);
}

TEST_CASE("standard cover of the first example") {
    auto r = build_triple_cover({fixtures::ex1_phi1(), standard_assignment(fixtures::ex1_phi1())});
    CHECK(r.cover == fixtures::ex1_phi2());
    CHECK(r.anchor_violations.empty());
    auto v = validate_cover(r);
    CHECK(v.prefix_suffix);
    CHECK(v.disjoint_lifts);
    CHECK(v.words_checked > 0);
    CHECK(v.cohomology_preserved);
    CHECK(v.dim_base == 1);
    CHECK(v.dim_cover == 1);
    CHECK(v.components == 3);
    REQUIRE(v.cr);
    CHECK(*v.cr == 3);
    CHECK(v.all_pass());
}

TEST_CASE("second example cover abelianization") {
    auto r = build_triple_cover({fixtures::ex2_phi1(), standard_assignment(fixtures::ex2_phi1())});
    IntMatrix printed{{4, 3, 2, 3, 1, 2}, {2, 3, 4, 0, 4, 2}, {3, 3, 3, 3, 1, 2},
                      {2, 2, 2, 1, 1, 1}, {2, 2, 2, 0, 2, 1}, {2, 2, 2, 2, 0, 1}};
    CHECK(abelianization(r.cover) == printed);
    auto h = cech_h1_dimension(r.cover);
    CHECK(h.dim_h1 == 2);
    CHECK(h.eigenvalues.to_string() == "(x - 1)^2 * (x)^2 * (x^2 - 12x - 9)");
    auto v = validate_cover(r);
    CHECK(v.all_pass());
    CHECK(v.cr_note.find("disjoint lifts") != std::string::npos);
}

TEST_CASE("third example cover validates") {
    auto r = build_triple_cover({fixtures::ex3_phi1(), standard_assignment(fixtures::ex3_phi1())});
    auto v = validate_cover(r);
    CHECK(v.prefix_suffix);
    CHECK(v.disjoint_lifts);
    CHECK(v.cohomology_preserved);
    CHECK(v.dim_cover == 3);
    CHECK(v.all_pass());
}

TEST_CASE("corrupted assignments are caught") {
    auto base = fixtures::ex1_phi1();
    auto a = standard_assignment(base);
    // Swapping two permutations breaks the anchor condition.
    a.sigma[{0, 0}] = Permutation{1, 2, 3};
    CHECK_THROWS_AS(build_triple_cover({base, a}), ValidationError);
    auto r = build_triple_cover({base, a}, CoverMode::Record);
    CHECK_FALSE(r.anchor_violations.empty());
    auto v = validate_cover(r);
    CHECK_FALSE(v.all_pass());
    CHECK((!v.prefix_suffix || !v.disjoint_lifts));

    PermutationAssignment missing = standard_assignment(base);
    missing.sigma.erase({1, 0});
    CHECK_THROWS_AS(build_triple_cover({base, missing}), ValidationError);
}

TEST_CASE("cover spec JSON") {
    auto spec = parse_cover_spec(R"({"base":{"alphabet":["A","B"],"rules":{"A":"ABABAAABA","B":"BAAABAABA"}}})");
    CHECK(spec.assignment.sigma == standard_assignment(spec.base).sigma);
    auto round = cover_spec_from_json(nlohmann::json::parse(to_json(spec).dump()));
    CHECK(round.assignment.sigma == spec.assignment.sigma);
    CHECK(round.base == spec.base);
    CHECK_THROWS_AS(parse_cover_spec("{"), ParseError);
    CHECK_THROWS_AS(
        parse_cover_spec(R"({"base":{"alphabet":["A","B"],"rules":{"A":"AB","B":"A"}},"permutations":{"AB":[1,1,2]}})"),
        ValidationError);
    // An explicit table must cover every transition.
    CHECK_THROWS_AS(
        parse_cover_spec(R"({"base":{"alphabet":["A","B"],"rules":{"A":"AB","B":"A"}},"permutations":{"AB":[2,1,3]}})"),
        ValidationError);
}

TEST_CASE("padding blocks") {
    const Letter A = 0, B = 1, C = 2;
    CHECK(make_padding({C}, {}, {}, 1, 3, A, B) == Word{C, B, A, A, A, C, B, A, A, A, C, B, A, A, A});
    CHECK_THROWS_AS(make_padding({}, {}, {}, 2, 1, A, B), PreconditionError);
    CHECK_THROWS_AS(make_padding({A}, {}, {}, 1, 1, A, B), PreconditionError);

    // Oracle: entering a padding block from A at sheet i returns to a_i with
    // every letter of the block visiting each sheet equally often.
    auto base = sub(R"({"alphabet":["A","B","C"],"rules":{"A":"ABCA","B":"BCA","C":"CBA"}})");
    PermutationAssignment asg;
    for (Letter x = 0; x < 3; ++x) {
        asg.sigma[{x, A}] = Permutation{3, 2, 1};
        asg.sigma[{x, B}] = Permutation{2, 1, 3};
        asg.sigma[{x, C}] = Permutation{1, 2, 3};
    }
    for (std::size_t b : {1, 3})
        for (std::size_t a : {1, 5}) {
            Word entered{A};
            Word block = make_padding({C, C}, {C}, {}, b, a, A, B);
            entered.insert(entered.end(), block.begin(), block.end());
            for (unsigned i = 1; i <= 3; ++i) {
                Word lift = lift_word(entered, i, base, asg);
                CHECK(lift.back() == cover_letter(A, i));
            }
            Word one = lift_word(entered, 1, base, asg);
            std::array<std::size_t, 3> single{};
            for (std::size_t t = 1; t < one.size(); ++t) ++single[one[t] % 3];
            CHECK(single[0] == single[1]);
            CHECK(single[1] == single[2]);
        }
}

TEST_CASE("lift cocycle property") {
    std::mt19937 rng(20261019);
    for (const auto& base : {fixtures::ex1_phi1(), fixtures::ex2_phi1(), fixtures::ex3_phi1()}) {
        auto asg = standard_assignment(base);
        Word u = fixed_point(base, 4000).prefix;
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t start = rng() % 3000, n1 = 1 + rng() % 40, n2 = 1 + rng() % 40;
            Word w1(u.begin() + static_cast<long>(start), u.begin() + static_cast<long>(start + n1));
            Word w2(u.begin() + static_cast<long>(start + n1), u.begin() + static_cast<long>(start + n1 + n2));
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            unsigned i = 1 + rng() % 3;
            Word l1 = lift_word(w1, i, base, asg);
            unsigned j = asg.at(w1.back(), w2.front(), base)[l1.back() % 3];
            Word joined = l1;
            Word l2 = lift_word(w2, j, base, asg);
            joined.insert(joined.end(), l2.begin(), l2.end());
            CHECK(lift_word(w, i, base, asg) == joined);
        }
    }
}

TEST_CASE("example 4 generator") {
    SUBCASE("single letter plumbing") {
        auto ex = example4_generator(IntMatrix{{1}}, 1U);
        CHECK(ex.m1 == IntMatrix{{3}});
        CHECK(ex.base.rule(0) == Word{0, 0, 0});
        CHECK(ex.cover.cover.size() == 3);
        CHECK(ex.validation.prefix_suffix);
    }
    SUBCASE("Fibonacci, k = 3") {
        IntMatrix fib{{1, 1}, {1, 0}};
        auto ex = example4_generator(fib, 3U);
        CHECK(ex.m1 == IntMatrix{{9, 6}, {6, 3}});
        CHECK(ex.base.rule(1) == fixtures::ex1_phi1().rule(1));
        CHECK(abelianization(ex.base) == abelianization(fixtures::ex2_phi1()));
        CHECK(ex.validation.all_pass());
        CHECK(ex.kernel_dim >= 2);
        CHECK(ex.rank_m2 <= 4);
        CHECK(ex.charpoly_divides);
        CHECK(ex.block_structure);
        CHECK(ex.padding_balanced);
        CHECK(ex.dim_equals_d);
        // The search finds the same k.
        CHECK(example4_generator(fib).k == 3);
        CHECK_THROWS_AS(example4_generator(fib, 2U), PreconditionError);
    }
    SUBCASE("tribonacci companion, k = 4") {
        IntMatrix trib{{1, 1, 0}, {1, 0, 1}, {1, 0, 0}};
        auto ex = example4_generator(trib, 4U);
        auto mk = trib.pow(4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(ex.m1(i, j) == 3 * mk(i, j));
        auto pr = pisot_report(ex.m1);
        CHECK(pr.degree == 3);
        CHECK(ex.validation.all_pass());
        CHECK(ex.kernel_dim >= 4);
        CHECK(ex.rank_m2 <= 5);
        CHECK(ex.charpoly_divides);
        CHECK(ex.block_structure);
        CHECK(ex.padding_balanced);
        CHECK(ex.dim_equals_d);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(example4_generator(IntMatrix{{2}}), PreconditionError);
        CHECK_THROWS_AS(example4_generator(IntMatrix{{1, 1}, {1, 1}}), PreconditionError);
    }
}
